#pragma once

#include "semikern/category.hpp"

namespace semikern {

// Mor(C, A) as an explicit finite abelian group.  When the enumeration
// budget is exceeded the group is reported incomplete (loudly) rather than
// truncated.
struct HomGroup {
  Obj source, target;
  std::optional<std::vector<Mor>> elements;
  std::string note;  // set when incomplete: what was too big
  bool complete() const { return elements.has_value(); }
};

inline constexpr std::size_t kHomBudget = 100000;

HomGroup realize_hom(const Category& c, const Obj& src, const Obj& dst,
                     std::size_t budget = kHomBudget);

// post-composition u_*(v) = u . v  and pre-composition u^*(w) = w . u
Mor induced_post(const Category& c, const Mor& u, const Mor& v);
Mor induced_pre(const Category& c, const Mor& u, const Mor& w);

// the induced maps are group homomorphisms
bool induced_maps_additive(const Category& c, const Mor& u, const Obj& probe,
                           std::size_t budget = kHomBudget);

// exactness of Hom(probe, -) applied to the chain seq at every interior
// node: image of the incoming induced map equals the kernel of the outgoing
// one, as enumerated sets
bool hom_sequence_exact(const Category& c, const Obj& probe, const std::vector<Mor>& seq,
                        std::size_t budget = kHomBudget);

struct VerifyResult {
  bool ok = false;
  bool complete = true;   // false when some enumeration exceeded the budget
  std::string detail;     // failing probe / morphism when !ok
};

// Checks the kernel conditions over the probe family without consulting the
// instance's own kernel: the embedding is left-cancellable on probe
// morphisms, u . embed = 0, and every probe morphism killed by u factors
// through the embedding.
VerifyResult verify_kernel(const Category& c, const Mor& u, const SubobjectPair& cand,
                           const std::vector<Obj>& probes, std::size_t budget = kHomBudget);

// dual statement, checked in the dual category
VerifyResult verify_cokernel(const Category& c, const Mor& u, const QuotientPair& cand,
                             const std::vector<Obj>& probes, std::size_t budget = kHomBudget);

}  // namespace semikern

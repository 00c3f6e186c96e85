#pragma once

#include <any>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semikern/rng.hpp"

namespace semikern {

class Category;

// Type-erased object handle.  The payload type is owned by the category
// instance that created the handle; instances canonicalize payloads so that
// handle equality is a syntactic check.
struct Obj {
  std::any payload;
};

// Type-erased morphism.  All shipped instances represent the data as a
// matrix (possibly wrapped); validity is the instance's business.
struct Mor {
  Obj src;
  Obj dst;
  std::any payload;
};

struct SubobjectPair {
  Obj sub;
  Mor embed;  // injective, embed.dst = ambient
};

struct QuotientPair {
  Obj quot;
  Mor project;  // surjective, project.src = ambient
};

struct KernelPair {
  SubobjectPair pair;  // subobject of the morphism's source
};

struct CokernelPair {
  QuotientPair pair;  // quotient of the morphism's target
};

struct Biproduct {
  Obj object;
  Mor p_a, p_b;  // projections
  Mor q_a, q_b;  // injections
};

// The contract every category instance implements: preadditive structure,
// kernels and cokernels, finite biproducts, plus the universal-property
// solvers and the enumeration/sampling facilities the verification harness
// relies on.
class Category {
public:
  virtual ~Category() = default;

  virtual std::string name() const = 0;

  // objects
  virtual bool objects_equal(const Obj& a, const Obj& b) const = 0;
  virtual Obj zero_object() const = 0;
  virtual bool is_zero_object(const Obj& a) const = 0;
  virtual std::string describe_object(const Obj& a) const = 0;

  // morphism abelian-group structure and composition
  virtual bool valid_morphism(const Mor& m) const = 0;
  virtual Mor compose(const Mor& v, const Mor& u) const = 0;  // v after u
  virtual Mor add(const Mor& a, const Mor& b) const = 0;
  virtual Mor negate(const Mor& a) const = 0;
  virtual Mor zero_morphism(const Obj& a, const Obj& b) const = 0;
  virtual Mor identity(const Obj& a) const = 0;
  virtual bool morphisms_equal(const Mor& a, const Mor& b) const = 0;
  virtual std::string describe_morphism(const Mor& m) const = 0;

  // axiom (d)
  virtual KernelPair kernel(const Mor& u) const = 0;
  virtual CokernelPair cokernel(const Mor& u) const = 0;

  // axiom (e)
  virtual Biproduct biproduct(const Obj& a, const Obj& b) const = 0;

  // universal-property solvers: unique w with mono∘w = v (resp. v with
  // v∘epi = w), when one exists in the category
  virtual std::optional<Mor> factor_through_mono(const Mor& mono, const Mor& v) const = 0;
  virtual std::optional<Mor> factor_through_epi(const Mor& epi, const Mor& w) const = 0;

  // two-sided inverse, when u is an isomorphism
  virtual std::optional<Mor> inverse(const Mor& u) const = 0;

  // enumeration and sampling (desk scale); enumerate_hom returns nullopt
  // when the budget would be exceeded
  virtual std::optional<std::vector<Mor>> enumerate_hom(const Obj& a, const Obj& b,
                                                        std::size_t budget) const = 0;
  virtual Mor random_morphism(const Obj& a, const Obj& b, Rng& rng) const = 0;
  virtual Obj random_object(int size_bound, Rng& rng) const = 0;
  virtual std::vector<Obj> enumerate_objects(int size_bound) const = 0;

  // probe family generating the Hom-exactness checks for the given context
  virtual std::vector<Obj> probe_objects(const std::vector<Obj>& context) const = 0;

  // canonical strict subobjects
  virtual std::vector<SubobjectPair> strict_subobjects(const Obj& a) const = 0;
  virtual SubobjectPair random_strict_subobject(const Obj& a, Rng& rng) const = 0;
};

// ---- generic facilities on top of the contract ----

bool is_injective(const Category& c, const Mor& u);   // Ker(u) = 0
bool is_surjective(const Category& c, const Mor& u);  // Coker(u) = 0
bool is_bijective(const Category& c, const Mor& u);

// inverse witness when u is an isomorphism
std::optional<Mor> is_isomorphism(const Category& c, const Mor& u);

// mediating morphism w with s1.embed = s2.embed ∘ w, when s1 <= s2
std::optional<Mor> subobject_leq(const Category& c, const SubobjectPair& s1,
                                 const SubobjectPair& s2);
// mediating morphism w with w ∘ q1.project = q2.project, when q1 >= q2
std::optional<Mor> quotient_geq(const Category& c, const QuotientPair& q1,
                                const QuotientPair& q2);

bool subobjects_isomorphic(const Category& c, const SubobjectPair& s1, const SubobjectPair& s2);
bool quotients_isomorphic(const Category& c, const QuotientPair& q1, const QuotientPair& q2);

// Im(u) = Ker(Coker(u)) and Coim(u) = Coker(Ker(u)); canonical because the
// instance kernels and cokernels are
SubobjectPair image_subobject(const Category& c, const Mor& u);
QuotientPair coimage_quotient(const Category& c, const Mor& u);

// The dual category: composition reversed, kernels and cokernels swapped,
// injective and surjective swapped.  A morphism A -> B here carries the base
// morphism B -> A.
class DualCategory final : public Category {
public:
  explicit DualCategory(const Category& base) : base_(&base) {}
  DualCategory(const DualCategory&) = delete;  // wrap, never copy
  DualCategory& operator=(const DualCategory&) = delete;

  const Category& base() const { return *base_; }

  // the base-category view of a dual morphism (endpoints swapped)
  Mor to_base(const Mor& m) const { return Mor{m.dst, m.src, m.payload}; }
  Mor from_base(const Mor& m) const { return Mor{m.dst, m.src, m.payload}; }

  std::string name() const override { return base_->name() + "^op"; }
  bool objects_equal(const Obj& a, const Obj& b) const override;
  Obj zero_object() const override;
  bool is_zero_object(const Obj& a) const override;
  std::string describe_object(const Obj& a) const override;
  bool valid_morphism(const Mor& m) const override;
  Mor compose(const Mor& v, const Mor& u) const override;
  Mor add(const Mor& a, const Mor& b) const override;
  Mor negate(const Mor& a) const override;
  Mor zero_morphism(const Obj& a, const Obj& b) const override;
  Mor identity(const Obj& a) const override;
  bool morphisms_equal(const Mor& a, const Mor& b) const override;
  std::string describe_morphism(const Mor& m) const override;
  KernelPair kernel(const Mor& u) const override;
  CokernelPair cokernel(const Mor& u) const override;
  Biproduct biproduct(const Obj& a, const Obj& b) const override;
  std::optional<Mor> factor_through_mono(const Mor& mono, const Mor& v) const override;
  std::optional<Mor> factor_through_epi(const Mor& epi, const Mor& w) const override;
  std::optional<Mor> inverse(const Mor& u) const override;
  std::optional<std::vector<Mor>> enumerate_hom(const Obj& a, const Obj& b,
                                                std::size_t budget) const override;
  Mor random_morphism(const Obj& a, const Obj& b, Rng& rng) const override;
  Obj random_object(int size_bound, Rng& rng) const override;
  std::vector<Obj> enumerate_objects(int size_bound) const override;
  std::vector<Obj> probe_objects(const std::vector<Obj>& context) const override;
  std::vector<SubobjectPair> strict_subobjects(const Obj& a) const override;
  SubobjectPair random_strict_subobject(const Obj& a, Rng& rng) const override;

private:
  const Category* base_;
};

}  // namespace semikern

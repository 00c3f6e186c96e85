#include "semikern/homcheck.hpp"

#include <set>

namespace semikern {

HomGroup realize_hom(const Category& c, const Obj& src, const Obj& dst, std::size_t budget) {
  HomGroup g;
  g.source = src;
  g.target = dst;
  g.elements = c.enumerate_hom(src, dst, budget);
  if (!g.elements)
    g.note = "Mor(" + c.describe_object(src) + ", " + c.describe_object(dst) +
             ") exceeds the enumeration budget";
  return g;
}

Mor induced_post(const Category& c, const Mor& u, const Mor& v) { return c.compose(u, v); }

Mor induced_pre(const Category& c, const Mor& u, const Mor& w) { return c.compose(w, u); }

bool induced_maps_additive(const Category& c, const Mor& u, const Obj& probe,
                           std::size_t budget) {
  HomGroup in = realize_hom(c, probe, u.src, budget);
  if (!in.complete()) return false;
  for (const auto& v1 : *in.elements)
    for (const auto& v2 : *in.elements) {
      Mor lhs = induced_post(c, u, c.add(v1, v2));
      Mor rhs = c.add(induced_post(c, u, v1), induced_post(c, u, v2));
      if (!c.morphisms_equal(lhs, rhs)) return false;
    }
  HomGroup out = realize_hom(c, u.dst, probe, budget);
  if (!out.complete()) return false;
  for (const auto& w1 : *out.elements)
    for (const auto& w2 : *out.elements) {
      Mor lhs = induced_pre(c, u, c.add(w1, w2));
      Mor rhs = c.add(induced_pre(c, u, w1), induced_pre(c, u, w2));
      if (!c.morphisms_equal(lhs, rhs)) return false;
    }
  return true;
}

bool hom_sequence_exact(const Category& c, const Obj& probe, const std::vector<Mor>& seq,
                        std::size_t budget) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const Mor& in = seq[i];
    const Mor& out = seq[i + 1];
    HomGroup src_hom = realize_hom(c, probe, in.src, budget);
    HomGroup mid_hom = realize_hom(c, probe, in.dst, budget);
    if (!src_hom.complete() || !mid_hom.complete()) return false;
    std::set<std::string> image;
    for (const auto& v : *src_hom.elements)
      image.insert(c.describe_morphism(induced_post(c, in, v)));
    std::set<std::string> kernel;
    Mor zero = c.zero_morphism(probe, out.dst);
    for (const auto& w : *mid_hom.elements)
      if (c.morphisms_equal(induced_post(c, out, w), zero))
        kernel.insert(c.describe_morphism(w));
    if (image != kernel) return false;
  }
  return true;
}

VerifyResult verify_kernel(const Category& c, const Mor& u, const SubobjectPair& cand,
                           const std::vector<Obj>& probes, std::size_t budget) {
  VerifyResult r;
  if (!c.objects_equal(cand.embed.dst, u.src)) {
    r.detail = "candidate is not a subobject of the source";
    return r;
  }
  if (!c.valid_morphism(cand.embed)) {
    r.detail = "candidate embedding is not a morphism of the instance";
    return r;
  }
  // condition: u kills the candidate
  if (!c.morphisms_equal(c.compose(u, cand.embed), c.zero_morphism(cand.sub, u.dst))) {
    r.detail = "u does not vanish on the candidate";
    return r;
  }
  for (const auto& probe : probes) {
    HomGroup into_cand = realize_hom(c, probe, cand.sub, budget);
    HomGroup into_src = realize_hom(c, probe, u.src, budget);
    if (!into_cand.complete() || !into_src.complete()) {
      r.complete = false;
      r.detail = "enumeration budget exceeded at probe " + c.describe_object(probe);
      return r;
    }
    // left cancellation of the embedding on probe morphisms
    std::set<std::string> seen;
    for (const auto& w : *into_cand.elements) {
      std::string key = c.describe_morphism(c.compose(cand.embed, w));
      if (!seen.insert(key).second) {
        r.detail = "embedding not left-cancellable at probe " + c.describe_object(probe);
        return r;
      }
    }
    // factorization of every probe morphism killed by u
    Mor zero = c.zero_morphism(probe, u.dst);
    for (const auto& v : *into_src.elements) {
      if (!c.morphisms_equal(c.compose(u, v), zero)) continue;
      auto w = c.factor_through_mono(cand.embed, v);
      if (!w || !c.morphisms_equal(c.compose(cand.embed, *w), v)) {
        r.detail = "no factorization for probe " + c.describe_object(probe) +
                   " morphism " + c.describe_morphism(v);
        return r;
      }
    }
  }
  r.ok = true;
  return r;
}

VerifyResult verify_cokernel(const Category& c, const Mor& u, const QuotientPair& cand,
                             const std::vector<Obj>& probes, std::size_t budget) {
  DualCategory d(c);
  Mor du{u.dst, u.src, u.payload};
  SubobjectPair dual_cand{cand.quot, Mor{cand.quot, cand.project.src, cand.project.payload}};
  return verify_kernel(d, du, dual_cand, probes, budget);
}

}  // namespace semikern

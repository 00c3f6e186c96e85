#pragma once

#include "semikern/category.hpp"

namespace semikern {

// Decoration transformer: objects of the decorated category are pairs
// (A, U) with U a canonical subobject of the base object A, read as the
// minimal open subgroup/subspace of a linear topology.  Morphisms are base
// morphisms f: A -> B with f(U_A) <= U_B (continuity).  Cokernels do not
// close up: the decorated quotient carries the pushed-forward decoration
// as-is, which is what makes bijective-but-not-invertible morphisms appear.
class DecoratedCategory final : public Category {
public:
  DecoratedCategory(const Category& base, std::string name);

  const Category& base() const { return *base_; }

  // canonicalizes the decoration via the base image construction
  Obj object(const Obj& base_obj, const SubobjectPair& open) const;
  Obj object_discrete(const Obj& base_obj) const;     // open = whole object
  Obj object_indiscrete(const Obj& base_obj) const;   // open = zero

  Mor morphism(const Obj& src, const Obj& dst, const Mor& base_mor) const;

  static const Obj& base_of(const Obj& a);
  static const SubobjectPair& open_of(const Obj& a);

  Mor to_base(const Mor& m) const;
  Mor from_base(const Obj& src, const Obj& dst, const Mor& base_mor) const;

  bool continuous(const Obj& src, const Obj& dst, const Mor& base_mor) const;

  std::string name() const override;
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
  // meet of the decoration with a base subobject (S, i), returned as a
  // canonical subobject of S
  SubobjectPair induced_open(const SubobjectPair& open, const Mor& sub_embed) const;

  const Category* base_;
  std::string name_;
};

}  // namespace semikern

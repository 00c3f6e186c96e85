#pragma once

#include "semikern/category.hpp"
#include "semikern/fp.hpp"

namespace semikern {

// Finite-dimensional vector spaces over F_p.  Objects are dimensions,
// morphisms are matrices acting on column vectors.
class VectCategory final : public Category {
public:
  explicit VectCategory(long long p);

  long long prime() const { return p_; }

  Obj object(std::size_t dim) const;
  Mor morphism(const Obj& src, const Obj& dst, const FpMatrix& m) const;

  static std::size_t dim_of(const Obj& a);
  static const FpMatrix& matrix_of(const Mor& m);

  // subobject handle for a subspace (canonical RREF embed)
  SubobjectPair subobject(const Subspace& s) const;
  static Subspace subspace_of(const SubobjectPair& s);

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
  void check_endpoints(const Mor& m) const;
  long long p_;
};

}  // namespace semikern

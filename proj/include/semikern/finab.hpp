#pragma once

#include "semikern/category.hpp"
#include "semikern/intmat.hpp"

namespace semikern {

// Finite abelian groups in invariant-factor form d_1 | d_2 | ... | d_k,
// each factor >= 2.  A morphism A -> B is an integer matrix acting on the
// generator coordinates, entries of row j reduced modulo the j-th factor of
// B; well-definedness requires d_i * m_ji = 0 mod d'_j.
class FinabCategory final : public Category {
public:
  FinabCategory();

  // canonical invariant-factor chain of an arbitrary factor list
  static std::vector<Int> canonical_factors(const std::vector<Int>& factors);

  Obj object(const std::vector<Int>& invariant_factors) const;
  Mor morphism(const Obj& src, const Obj& dst, const IntMatrix& m) const;

  static const std::vector<Int>& factors_of(const Obj& a);
  static const IntMatrix& matrix_of(const Mor& m);
  static Int order_of(const Obj& a);

  // canonical subobject generated by the columns of gens (coordinates in
  // the ambient object)
  SubobjectPair subgroup(const Obj& ambient, const IntMatrix& gens) const;

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
  IntMatrix reduce(const IntMatrix& m, const std::vector<Int>& dst_factors) const;
};

}  // namespace semikern

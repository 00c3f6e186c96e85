#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semikern/rng.hpp"

namespace semikern {

bool is_prime(long long p);

// Dense matrix over the prime field F_p.  Row-major storage; morphisms act
// on column vectors, so a map F_p^m -> F_p^n is an n x m matrix and
// composition is matrix product.  Entries are kept reduced into [0, p).
class FpMatrix {
public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, long long p);

  static FpMatrix identity(std::size_t n, long long p);
  static FpMatrix from_rows(const std::vector<std::vector<long long>>& rows, long long p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long long prime() const { return p_; }

  long long at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long v);

  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-() const;
  FpMatrix operator*(const FpMatrix& o) const;
  bool operator==(const FpMatrix& o) const;
  bool operator!=(const FpMatrix& o) const { return !(*this == o); }

  FpMatrix transpose() const;
  bool is_zero() const;

  // stack o below / to the right of *this
  FpMatrix vstack(const FpMatrix& o) const;
  FpMatrix hstack(const FpMatrix& o) const;

  std::string to_string() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  long long p_ = 2;
  std::vector<long long> e_;
};

// Unique reduced row echelon form (zero rows kept, at the bottom).
FpMatrix rref(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

// Canonical basis of a subspace of F_p^n: RREF matrix whose rows are the
// basis vectors, no zero rows.  Two subspaces are equal iff their canonical
// bases are identical.
struct Subspace {
  std::size_t ambient = 0;
  long long p = 2;
  FpMatrix basis;  // RREF, rank rows, `ambient` columns

  std::size_t dim() const { return basis.rows(); }
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  std::string to_string() const;
};

Subspace span_of_rows(const FpMatrix& rows);
Subspace zero_subspace(std::size_t ambient, long long p);
Subspace full_subspace(std::size_t ambient, long long p);

// Null space of m (column-vector convention): {x : m x = 0}.
Subspace kernel_basis(const FpMatrix& m);
// Column space of m.
Subspace image_basis(const FpMatrix& m);

Subspace subspace_meet(const Subspace& s, const Subspace& t);
Subspace subspace_join(const Subspace& s, const Subspace& t);

bool contains(const Subspace& s, const std::vector<long long>& v);
bool subspace_leq(const Subspace& s, const Subspace& t);

// One solution x of m x = b, if any.
std::optional<FpMatrix> solve(const FpMatrix& m, const FpMatrix& b);
// X with m X = b (columnwise), if any.
std::optional<FpMatrix> solve_matrix(const FpMatrix& m, const FpMatrix& b);

std::optional<FpMatrix> fp_inverse(const FpMatrix& m);

FpMatrix random_fp_matrix(std::size_t rows, std::size_t cols, long long p, Rng& rng);

// All subspaces of F_p^n, sorted canonically.  Desk scale only.
std::vector<Subspace> enumerate_subspaces(std::size_t n, long long p);

}  // namespace semikern

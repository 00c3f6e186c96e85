#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace semikern {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries.  Same column-vector
// convention as FpMatrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Int>& d);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  Int& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-() const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix transpose() const;
  IntMatrix hstack(const IntMatrix& o) const;
  IntMatrix vstack(const IntMatrix& o) const;
  bool is_zero() const;

  std::string to_string() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

struct SnfResult {
  IntMatrix u;  // unimodular, rows() x rows() of input
  IntMatrix d;  // diagonal, same shape as input, d_i | d_{i+1}, entries >= 0
  IntMatrix v;  // unimodular, cols() x cols() of input
};

// u * m * v = d with the divisibility chain on the diagonal.  Pivot choice is
// smallest nonzero magnitude, which keeps coefficients tame and the output
// deterministic.
SnfResult snf(const IntMatrix& m);

Int det(const IntMatrix& m);  // via fraction-free elimination; square only

// Column-style Hermite normal form of the lattice spanned by the columns of
// m: unimodular column operations only; pivots positive, entries to the left
// of a pivot reduced into [0, pivot); zero columns dropped.  Unique per
// lattice.
IntMatrix hnf_columns(const IntMatrix& m);

// Basis (as columns) of the integer kernel {x : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// One integer solution of m x = b, columnwise, if any.
std::optional<IntMatrix> integer_solve(const IntMatrix& m, const IntMatrix& b);

}  // namespace semikern

#include "semikern/intmat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace semikern {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix+: shape mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix*: shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hstack: row mismatch");
  IntMatrix r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vstack: column mismatch");
  IntMatrix r(rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Int& v) { return v == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

Int floordiv(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void addmul_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += f * m.at(src, j);
}

void addmul_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += f * m.at(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t t_max = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < t_max; ++t) {
    for (;;) {
      // smallest nonzero magnitude in the trailing submatrix
      bool found = false;
      std::size_t pi = t, pj = t;
      Int best = 0;
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
          if (d.at(i, j) == 0) continue;
          Int mag = abs(d.at(i, j));
          if (!found || mag < best) {
            found = true;
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (!found) {
        // remaining block already zero
        t = t_max;
        break;
      }
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        addmul_row(d, i, t, -q);
        addmul_row(u, i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        addmul_col(d, j, t, -q);
        addmul_col(v, j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility of the trailing block by the pivot
      bool fixed = false;
      for (std::size_t i = t + 1; i < d.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < d.cols() && !fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            addmul_row(d, t, i, 1);
            addmul_row(u, t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (t >= t_max) break;
    if (d.at(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  // normalize signs of any pivots placed before an early exit
  for (std::size_t t = 0; t < t_max; ++t)
    if (d.at(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  return SnfResult{u, d, v};
}

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrices only");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntMatrix a = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a.at(s, k) == 0) ++s;
      if (s == n) return 0;
      swap_rows(a, k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

IntMatrix hnf_columns(const IntMatrix& m) {
  IntMatrix h = m;
  std::size_t c = 0;  // next pivot column
  for (std::size_t r = 0; r < h.rows() && c < h.cols(); ++r) {
    // gcd-eliminate row r across columns >= c
    for (;;) {
      std::size_t nonzero = 0, best_col = c;
      Int best = 0;
      for (std::size_t j = c; j < h.cols(); ++j) {
        if (h.at(r, j) == 0) continue;
        ++nonzero;
        Int mag = abs(h.at(r, j));
        if (nonzero == 1 || mag < best) {
          best = mag;
          best_col = j;
        }
      }
      if (nonzero == 0) break;
      swap_cols(h, c, best_col);
      if (nonzero == 1) break;
      for (std::size_t j = c + 1; j < h.cols(); ++j) {
        if (h.at(r, j) == 0) continue;
        Int q = h.at(r, j) / h.at(r, c);
        addmul_col(h, j, c, -q);
      }
    }
    if (h.at(r, c) == 0) continue;  // no pivot in this row
    if (h.at(r, c) < 0)
      for (std::size_t i = 0; i < h.rows(); ++i) h.at(i, c) = -h.at(i, c);
    // reduce earlier columns against this pivot for uniqueness
    for (std::size_t j = 0; j < c; ++j) {
      Int q = floordiv(h.at(r, j), h.at(r, c));
      addmul_col(h, j, c, -q);
    }
    ++c;
  }
  // drop zero columns (all at positions >= c)
  IntMatrix out(h.rows(), c);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < c; ++j) out.at(i, j) = h.at(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  SnfResult s = snf(m);
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool zero_diag = j >= std::min(m.rows(), m.cols()) || s.d.at(j, j) == 0;
    if (zero_diag) free_cols.push_back(j);
  }
  IntMatrix k(m.cols(), free_cols.size());
  for (std::size_t c = 0; c < free_cols.size(); ++c)
    for (std::size_t i = 0; i < m.cols(); ++i) k.at(i, c) = s.v.at(i, free_cols[c]);
  return k;
}

std::optional<IntMatrix> integer_solve(const IntMatrix& m, const IntMatrix& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("integer_solve: shape mismatch");
  SnfResult s = snf(m);
  IntMatrix ub = s.u * b;
  IntMatrix z(m.cols(), b.cols());
  std::size_t t_max = std::min(m.rows(), m.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Int diag = (i < t_max) ? s.d.at(i, i) : Int(0);
      if (diag == 0) {
        if (ub.at(i, c) != 0) return std::nullopt;
      } else {
        if (ub.at(i, c) % diag != 0) return std::nullopt;
        z.at(i, c) = ub.at(i, c) / diag;
      }
    }
  }
  return s.v * z;
}

}  // namespace semikern

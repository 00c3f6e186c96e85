#include "semikern/fp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace semikern {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

long long mod_inverse(long long a, long long p) {
  // extended Euclid; a nonzero mod p, p prime
  long long t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("mod_inverse: not invertible");
  return ((t % p) + p) % p;
}

void check_same_field(const FpMatrix& a, const FpMatrix& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("FpMatrix: prime mismatch");
}

}  // namespace

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, long long p)
    : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {
  if (!is_prime(p)) throw std::invalid_argument("FpMatrix: p must be prime");
  if (p > (1LL << 31)) throw std::invalid_argument("FpMatrix: p exceeds supported range");
}

FpMatrix FpMatrix::identity(std::size_t n, long long p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<long long>>& rows, long long p) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  FpMatrix m(r, c, p);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, long long v) {
  e_[r * cols_ + c] = ((v % p_) + p_) % p_;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  check_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("FpMatrix+: shape mismatch");
  FpMatrix r(rows_, cols_, p_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = (e_[i] + o.e_[i]) % p_;
  return r;
}

FpMatrix FpMatrix::operator-() const {
  FpMatrix r(rows_, cols_, p_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = (p_ - e_[i]) % p_;
  return r;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  check_same_field(*this, o);
  if (cols_ != o.rows_) throw std::invalid_argument("FpMatrix*: shape mismatch");
  FpMatrix r(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      long long a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.e_[i * o.cols_ + j] = (r.e_[i * o.cols_ + j] + a * o.at(k, j)) % p_;
    }
  return r;
}

bool FpMatrix::operator==(const FpMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && e_ == o.e_;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix r(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

bool FpMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](long long v) { return v == 0; });
}

FpMatrix FpMatrix::vstack(const FpMatrix& o) const {
  check_same_field(*this, o);
  if (cols_ != o.cols_) throw std::invalid_argument("vstack: column mismatch");
  FpMatrix r(rows_ + o.rows_, cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(rows_ + i, j, o.at(i, j));
  return r;
}

FpMatrix FpMatrix::hstack(const FpMatrix& o) const {
  check_same_field(*this, o);
  if (rows_ != o.rows_) throw std::invalid_argument("hstack: row mismatch");
  FpMatrix r(rows_, cols_ + o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (std::size_t j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
  }
  return r;
}

std::string FpMatrix::to_string() const {
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

FpMatrix rref(const FpMatrix& m) {
  FpMatrix a = m;
  const long long p = a.prime();
  std::size_t lead = 0;
  for (std::size_t r = 0; r < a.rows() && lead < a.cols(); ++r) {
    std::size_t i = r;
    while (i < a.rows() && a.at(i, lead) == 0) ++i;
    if (i == a.rows()) {
      ++lead;
      --r;
      continue;
    }
    if (i != r)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        long long t = a.at(r, j);
        a.set(r, j, a.at(i, j));
        a.set(i, j, t);
      }
    long long inv = mod_inverse(a.at(r, lead), p);
    for (std::size_t j = 0; j < a.cols(); ++j) a.set(r, j, a.at(r, j) * inv % p);
    for (std::size_t k = 0; k < a.rows(); ++k) {
      if (k == r) continue;
      long long f = a.at(k, lead);
      if (f == 0) continue;
      for (std::size_t j = 0; j < a.cols(); ++j)
        a.set(k, j, a.at(k, j) - f * a.at(r, j));
    }
    ++lead;
  }
  return a;
}

std::size_t rank(const FpMatrix& m) {
  FpMatrix r = rref(m);
  std::size_t n = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0) {
        nz = true;
        break;
      }
    if (nz) ++n;
  }
  return n;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient == o.ambient && p == o.p && basis == o.basis;
}

std::string Subspace::to_string() const { return basis.to_string(); }

Subspace span_of_rows(const FpMatrix& rows) {
  FpMatrix r = rref(rows);
  std::size_t rk = 0;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0) {
        rk = i + 1;
        break;
      }
  FpMatrix basis(rk, rows.cols(), rows.prime());
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) basis.set(i, j, r.at(i, j));
  return Subspace{rows.cols(), rows.prime(), basis};
}

Subspace zero_subspace(std::size_t ambient, long long p) {
  return Subspace{ambient, p, FpMatrix(0, ambient, p)};
}

Subspace full_subspace(std::size_t ambient, long long p) {
  return Subspace{ambient, p, FpMatrix::identity(ambient, p)};
}

Subspace kernel_basis(const FpMatrix& m) {
  // solutions of m x = 0 read off the RREF free columns
  FpMatrix r = rref(m);
  std::size_t nc = m.cols();
  std::vector<long long> pivot_of_col(nc, -1);
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < nc; ++j)
      if (r.at(i, j) != 0) {
        pivot_of_col[j] = static_cast<long long>(i);
        pivots.push_back(j);
        break;
      }
  std::vector<std::vector<long long>> basis_rows;
  for (std::size_t j = 0; j < nc; ++j) {
    if (pivot_of_col[j] >= 0) continue;  // pivot column
    std::vector<long long> v(nc, 0);
    v[j] = 1;
    for (std::size_t pj = 0; pj < nc; ++pj) {
      long long pi = pivot_of_col[pj];
      if (pi >= 0) v[pj] = (m.prime() - r.at(static_cast<std::size_t>(pi), j)) % m.prime();
    }
    basis_rows.push_back(v);
  }
  if (basis_rows.empty()) return zero_subspace(nc, m.prime());
  return span_of_rows(FpMatrix::from_rows(basis_rows, m.prime()));
}

Subspace image_basis(const FpMatrix& m) { return span_of_rows(m.transpose()); }

namespace {

// rows spanning the annihilator {y : <y, s> = 0 for every basis row s}
FpMatrix annihilator_rows(const Subspace& s) {
  Subspace k = kernel_basis(s.basis);
  return k.basis;
}

}  // namespace

Subspace subspace_meet(const Subspace& s, const Subspace& t) {
  if (s.ambient != t.ambient || s.p != t.p)
    throw std::invalid_argument("subspace_meet: ambient mismatch");
  FpMatrix constraints = annihilator_rows(s).vstack(annihilator_rows(t));
  return kernel_basis(constraints);
}

Subspace subspace_join(const Subspace& s, const Subspace& t) {
  if (s.ambient != t.ambient || s.p != t.p)
    throw std::invalid_argument("subspace_join: ambient mismatch");
  return span_of_rows(s.basis.vstack(t.basis));
}

bool contains(const Subspace& s, const std::vector<long long>& v) {
  if (v.size() != s.ambient) throw std::invalid_argument("contains: dimension mismatch");
  FpMatrix row = FpMatrix::from_rows({v}, s.p);
  return span_of_rows(s.basis.vstack(row)).dim() == s.dim();
}

bool subspace_leq(const Subspace& s, const Subspace& t) {
  if (s.ambient != t.ambient || s.p != t.p)
    throw std::invalid_argument("subspace_leq: ambient mismatch");
  return subspace_join(s, t).dim() == t.dim();
}

std::optional<FpMatrix> solve(const FpMatrix& m, const FpMatrix& b) { return solve_matrix(m, b); }

std::optional<FpMatrix> solve_matrix(const FpMatrix& m, const FpMatrix& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  FpMatrix aug = rref(m.hstack(b));
  std::size_t nc = m.cols();
  // inconsistent if a pivot falls in the augmented block
  std::vector<long long> pivot_of_col(nc, -1);
  for (std::size_t i = 0; i < aug.rows(); ++i) {
    std::size_t j = 0;
    while (j < aug.cols() && aug.at(i, j) == 0) ++j;
    if (j == aug.cols()) continue;
    if (j >= nc) return std::nullopt;
    pivot_of_col[j] = static_cast<long long>(i);
  }
  FpMatrix x(nc, b.cols(), m.prime());
  for (std::size_t j = 0; j < nc; ++j) {
    long long pi = pivot_of_col[j];
    if (pi < 0) continue;  // free variable: take 0
    for (std::size_t c = 0; c < b.cols(); ++c)
      x.set(j, c, aug.at(static_cast<std::size_t>(pi), nc + c));
  }
  return x;
}

std::optional<FpMatrix> fp_inverse(const FpMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  auto inv = solve_matrix(m, FpMatrix::identity(m.rows(), m.prime()));
  return inv;
}

FpMatrix random_fp_matrix(std::size_t rows, std::size_t cols, long long p, Rng& rng) {
  FpMatrix m(rows, cols, p);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.set(i, j, static_cast<long long>(rng.below(static_cast<std::uint64_t>(p))));
  return m;
}

std::vector<Subspace> enumerate_subspaces(std::size_t n, long long p) {
  // span every k-tuple of vectors, k <= n, and deduplicate canonical bases
  std::vector<std::vector<long long>> vectors;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(p);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<long long> v(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<long long>(c % static_cast<std::size_t>(p));
      c /= static_cast<std::size_t>(p);
    }
    vectors.push_back(v);
  }
  std::vector<Subspace> out;
  std::vector<std::string> seen;
  auto add = [&](const Subspace& s) {
    std::string key = s.to_string();
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      out.push_back(s);
    }
  };
  add(zero_subspace(n, p));
  std::vector<std::size_t> idx;
  // grow spans vector by vector; spans of <= n generators cover everything
  std::vector<Subspace> frontier = {zero_subspace(n, p)};
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<Subspace> next;
    for (const auto& s : frontier)
      for (const auto& v : vectors) {
        FpMatrix row = FpMatrix::from_rows({v}, p);
        Subspace grown = span_of_rows(s.basis.vstack(row));
        std::string key = grown.to_string();
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
          seen.push_back(key);
          out.push_back(grown);
          next.push_back(grown);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.to_string() < b.to_string();
  });
  return out;
}

}  // namespace semikern

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "semikern/fp.hpp"
#include "semikern/intmat.hpp"
#include "semikern/rng.hpp"

using namespace semikern;

namespace {

// Brute-force oracle: every vector in the row space of m, as a sorted set.
std::set<std::vector<long long>> row_space_elements(const FpMatrix& m) {
  const long long p = m.prime();
  std::set<std::vector<long long>> out;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) combos *= static_cast<std::size_t>(p);
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<long long> v(m.cols(), 0);
    std::size_t c = code;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      long long coeff = static_cast<long long>(c % static_cast<std::size_t>(p));
      c /= static_cast<std::size_t>(p);
      for (std::size_t j = 0; j < m.cols(); ++j) v[j] = (v[j] + coeff * m.at(i, j)) % p;
    }
    out.insert(v);
  }
  return out;
}

std::vector<std::vector<long long>> all_vectors(std::size_t n, long long p) {
  std::vector<std::vector<long long>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(p);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<long long> v(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<long long>(c % static_cast<std::size_t>(p));
      c /= static_cast<std::size_t>(p);
    }
    out.push_back(v);
  }
  return out;
}

std::vector<long long> apply_map(const FpMatrix& m, const std::vector<long long>& x) {
  std::vector<long long> y(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] = (y[i] + m.at(i, j) * x[j]) % m.prime();
  return y;
}

}  // namespace

TEST_CASE("rref on the F_2 rank-1 square matrix") {
  FpMatrix m = FpMatrix::from_rows({{1, 1}, {1, 1}}, 2);
  FpMatrix r = rref(m);
  // oracle: same row space, canonical form
  CHECK(row_space_elements(r) == row_space_elements(m));
  CHECK(r == FpMatrix::from_rows({{1, 1}, {0, 0}}, 2));
}

TEST_CASE("rref fixed points") {
  for (std::size_t n : {1u, 2u, 3u}) {
    CHECK(rref(FpMatrix::identity(n, 3)) == FpMatrix::identity(n, 3));
    CHECK(rref(FpMatrix(n, n, 3)) == FpMatrix(n, n, 3));
  }
}

TEST_CASE("rref idempotent and rank-nullity on sampled matrices") {
  Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    long long p = (it % 2 == 0) ? 2 : 3;
    std::size_t r = rng.below(4), c = rng.below(4);
    FpMatrix m = random_fp_matrix(r, c, p, rng);
    CHECK(rref(rref(m)) == rref(m));
    CHECK(rank(m) + kernel_basis(m).dim() == m.cols());
    // same row space
    CHECK(row_space_elements(rref(m)) == row_space_elements(m));
  }
}

TEST_CASE("kernel_basis against exhaustive enumeration") {
  FpMatrix m = FpMatrix::from_rows({{1, 1}}, 2);
  Subspace k = kernel_basis(m);
  std::set<std::vector<long long>> expected;
  for (const auto& v : all_vectors(2, 2)) {
    auto y = apply_map(m, v);
    if (std::all_of(y.begin(), y.end(), [](long long t) { return t == 0; })) expected.insert(v);
  }
  CHECK(row_space_elements(k.basis) == expected);
  CHECK(k.dim() == 1);
  CHECK(contains(k, {1, 1}));

  CHECK(kernel_basis(FpMatrix::identity(3, 2)).dim() == 0);
  CHECK(kernel_basis(FpMatrix(2, 2, 2)) == full_subspace(2, 2));
}

TEST_CASE("image_basis against exhaustive enumeration") {
  FpMatrix m = FpMatrix::from_rows({{1, 0}, {0, 0}}, 2);
  Subspace im = image_basis(m);
  std::set<std::vector<long long>> expected;
  for (const auto& v : all_vectors(2, 2)) expected.insert(apply_map(m, v));
  CHECK(row_space_elements(im.basis) == expected);
  CHECK(im == span_of_rows(FpMatrix::from_rows({{1, 0}}, 2)));

  CHECK(image_basis(FpMatrix::identity(2, 3)) == full_subspace(2, 3));
  CHECK(image_basis(FpMatrix(2, 3, 2)).dim() == 0);
}

TEST_CASE("meet and join in F_2^3") {
  Subspace s = span_of_rows(FpMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}, 2));
  Subspace t = span_of_rows(FpMatrix::from_rows({{0, 1, 0}, {0, 0, 1}}, 2));
  Subspace meet = subspace_meet(s, t);
  // oracle: membership in both, enumerated
  std::set<std::vector<long long>> expected;
  for (const auto& v : all_vectors(3, 2))
    if (contains(s, v) && contains(t, v)) expected.insert(v);
  CHECK(row_space_elements(meet.basis) == expected);
  CHECK(meet == span_of_rows(FpMatrix::from_rows({{0, 1, 0}}, 2)));

  CHECK(subspace_meet(s, s) == s);
  CHECK(subspace_join(s, s) == s);

  Subspace e1 = span_of_rows(FpMatrix::from_rows({{1, 0}}, 2));
  Subspace e2 = span_of_rows(FpMatrix::from_rows({{0, 1}}, 2));
  CHECK(subspace_join(e1, e2) == full_subspace(2, 2));
}

TEST_CASE("modular dimension law exhaustively over F_2^3") {
  auto subs = enumerate_subspaces(3, 2);
  CHECK(subs.size() == 16);
  for (const auto& s : subs)
    for (const auto& t : subs) {
      Subspace m = subspace_meet(s, t), j = subspace_join(s, t);
      CHECK(j.dim() + m.dim() == s.dim() + t.dim());
    }
}

TEST_CASE("subspace_leq is a partial order over all subspaces of F_2^3") {
  auto subs = enumerate_subspaces(3, 2);
  for (const auto& s : subs) CHECK(subspace_leq(s, s));
  for (const auto& s : subs)
    for (const auto& t : subs) {
      if (subspace_leq(s, t) && subspace_leq(t, s)) CHECK(s == t);
      for (const auto& u : subs)
        if (subspace_leq(s, t) && subspace_leq(t, u)) CHECK(subspace_leq(s, u));
    }
  CHECK(subspace_leq(zero_subspace(3, 2), subs.back()));
  Subspace e1 = span_of_rows(FpMatrix::from_rows({{1, 0}}, 2));
  Subspace e2 = span_of_rows(FpMatrix::from_rows({{0, 1}}, 2));
  CHECK_FALSE(subspace_leq(e1, e2));
}

TEST_CASE("solve and inverse") {
  Rng rng(11);
  for (int it = 0; it < 100; ++it) {
    long long p = (it % 2 == 0) ? 2 : 5;
    std::size_t n = 1 + rng.below(3), m = 1 + rng.below(3);
    FpMatrix a = random_fp_matrix(n, m, p, rng);
    FpMatrix x = random_fp_matrix(m, 2, p, rng);
    FpMatrix b = a * x;
    auto sol = solve_matrix(a, b);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b);
  }
  FpMatrix m = FpMatrix::from_rows({{1, 1}, {0, 1}}, 2);
  auto inv = fp_inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == FpMatrix::identity(2, 2));
  CHECK_FALSE(fp_inverse(FpMatrix::from_rows({{1, 1}, {1, 1}}, 2)).has_value());
}

TEST_CASE("snf fixed examples") {
  {
    IntMatrix m = IntMatrix::diagonal({2, 6});
    SnfResult s = snf(m);
    CHECK(s.d == IntMatrix::diagonal({2, 6}));
  }
  {
    IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
    SnfResult s = snf(m);
    // d1 = gcd of entries = 2, d1*d2 = |det| = 8
    CHECK(s.d == IntMatrix::diagonal({2, 4}));
  }
  {
    IntMatrix m(2, 3);
    SnfResult s = snf(m);
    CHECK(s.d.is_zero());
    CHECK(s.u * m * s.v == s.d);
  }
}

TEST_CASE("snf invariants on sampled matrices") {
  Rng rng(23);
  for (int it = 0; it < 200; ++it) {
    std::size_t r = rng.below(4), c = rng.below(4);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m.at(i, j) = static_cast<long long>(rng.below(21)) - 10;
    SnfResult s = snf(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(abs(det(s.u)) == 1);
    CHECK(abs(det(s.v)) == 1);
    std::size_t t_max = std::min(r, c);
    for (std::size_t t = 0; t < t_max; ++t) {
      CHECK(s.d.at(t, t) >= 0);
      if (t + 1 < t_max && s.d.at(t + 1, t + 1) != 0) {
        if (s.d.at(t, t) != 0) CHECK(s.d.at(t + 1, t + 1) % s.d.at(t, t) == 0);
        else CHECK(s.d.at(t + 1, t + 1) == 0);
      }
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          if (i != j) CHECK(s.d.at(i, j) == 0);
    }
  }
}

TEST_CASE("hnf is canonical per lattice") {
  Rng rng(31);
  for (int it = 0; it < 100; ++it) {
    std::size_t n = 1 + rng.below(3);
    std::size_t k = 1 + rng.below(4);
    IntMatrix g(n, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) g.at(i, j) = static_cast<long long>(rng.below(11)) - 5;
    IntMatrix h1 = hnf_columns(g);
    // same lattice, different generators: append sums of columns and shuffle signs
    IntMatrix g2(n, 2 * k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        g2.at(i, j) = -g.at(i, (j + 1) % k);
        g2.at(i, k + j) = g.at(i, j) + g.at(i, (j + 1) % k);
      }
    CHECK(hnf_columns(g2) == h1);
  }
}

TEST_CASE("integer kernel and solve") {
  Rng rng(41);
  for (int it = 0; it < 100; ++it) {
    std::size_t r = 1 + rng.below(3), c = 1 + rng.below(3);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<long long>(rng.below(9)) - 4;
    IntMatrix k = integer_kernel(m);
    CHECK((m * k).is_zero());
    // m * (random x) must be solvable, and the solution must reproduce b
    IntMatrix x(c, 1);
    for (std::size_t j = 0; j < c; ++j) x.at(j, 0) = static_cast<long long>(rng.below(7)) - 3;
    IntMatrix b = m * x;
    auto sol = integer_solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == b);
  }
  // inconsistent system
  IntMatrix m = IntMatrix::from_rows({{2}});
  IntMatrix b = IntMatrix::from_rows({{1}});
  CHECK_FALSE(integer_solve(m, b).has_value());
}

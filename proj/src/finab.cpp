#include "semikern/finab.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace semikern {

namespace {

struct FinabObj {
  std::vector<Int> factors;
};

Int positive_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// all elements of the group as coordinate tuples; desk scale
std::vector<std::vector<Int>> all_elements(const std::vector<Int>& factors) {
  std::vector<std::vector<Int>> out = {std::vector<Int>(factors.size(), 0)};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<std::vector<Int>> next;
    for (const auto& e : out)
      for (Int v = 0; v < factors[i]; ++v) {
        auto e2 = e;
        e2[i] = v;
        next.push_back(e2);
      }
    out = std::move(next);
  }
  return out;
}

const std::vector<Int> kSamplePool = {2, 3, 4};

}  // namespace

FinabCategory::FinabCategory() = default;

std::vector<Int> FinabCategory::canonical_factors(const std::vector<Int>& factors) {
  for (const auto& f : factors)
    if (f < 1) throw std::invalid_argument("finab: factors must be positive");
  SnfResult s = snf(IntMatrix::diagonal(factors));
  std::vector<Int> out;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (s.d.at(i, i) > 1) out.push_back(s.d.at(i, i));
  return out;
}

Obj FinabCategory::object(const std::vector<Int>& invariant_factors) const {
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (invariant_factors[i] < 2) throw std::invalid_argument("finab: factors must be >= 2");
    if (i + 1 < invariant_factors.size() &&
        invariant_factors[i + 1] % invariant_factors[i] != 0)
      throw std::invalid_argument("finab: divisibility chain violated");
  }
  return Obj{FinabObj{invariant_factors}};
}

Mor FinabCategory::morphism(const Obj& src, const Obj& dst, const IntMatrix& m) const {
  Mor out{src, dst, reduce(m, factors_of(dst))};
  if (!valid_morphism(out))
    throw std::invalid_argument("finab morphism: not well defined on generators");
  return out;
}

const std::vector<Int>& FinabCategory::factors_of(const Obj& a) {
  return std::any_cast<FinabObj>(&a.payload)->factors;
}

const IntMatrix& FinabCategory::matrix_of(const Mor& m) {
  return *std::any_cast<IntMatrix>(&m.payload);
}

Int FinabCategory::order_of(const Obj& a) {
  Int o = 1;
  for (const auto& f : factors_of(a)) o *= f;
  return o;
}

SubobjectPair FinabCategory::subgroup(const Obj& ambient, const IntMatrix& gens) const {
  const std::vector<Int>& d = factors_of(ambient);
  std::size_t m = d.size();
  if (gens.rows() != m) throw std::invalid_argument("subgroup: generator shape mismatch");
  if (m == 0) {
    Obj z = zero_object();
    return SubobjectPair{z, zero_morphism(z, ambient)};
  }
  IntMatrix lattice = gens.hstack(IntMatrix::diagonal(d));
  IntMatrix h = hnf_columns(lattice);  // m x m, full rank
  auto rel = integer_solve(h, IntMatrix::diagonal(d));
  if (!rel) throw std::logic_error("subgroup: relation solve failed");
  SnfResult s = snf(*rel);
  auto uinv = integer_solve(s.u, IntMatrix::identity(m));
  if (!uinv) throw std::logic_error("subgroup: unimodular inverse failed");
  IntMatrix new_gens = h * *uinv;
  std::vector<Int> sub_factors;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m; ++i)
    if (s.d.at(i, i) > 1) {
      sub_factors.push_back(s.d.at(i, i));
      keep.push_back(i);
    }
  Obj sub = object(sub_factors);
  IntMatrix embed(m, keep.size());
  for (std::size_t c = 0; c < keep.size(); ++c)
    for (std::size_t r = 0; r < m; ++r)
      embed.at(r, c) = positive_mod(new_gens.at(r, keep[c]), d[r]);
  return SubobjectPair{sub, morphism(sub, ambient, embed)};
}

std::string FinabCategory::name() const { return "finab"; }

bool FinabCategory::objects_equal(const Obj& a, const Obj& b) const {
  return factors_of(a) == factors_of(b);
}

Obj FinabCategory::zero_object() const { return object({}); }

bool FinabCategory::is_zero_object(const Obj& a) const { return factors_of(a).empty(); }

std::string FinabCategory::describe_object(const Obj& a) const {
  const auto& f = factors_of(a);
  if (f.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "+" : "") << "Z/" << f[i];
  return os.str();
}

bool FinabCategory::valid_morphism(const Mor& m) const {
  const IntMatrix* mat = std::any_cast<IntMatrix>(&m.payload);
  if (!mat) return false;
  const FinabObj* s = std::any_cast<FinabObj>(&m.src.payload);
  const FinabObj* t = std::any_cast<FinabObj>(&m.dst.payload);
  if (!s || !t) return false;
  if (mat->rows() != t->factors.size() || mat->cols() != s->factors.size()) return false;
  for (std::size_t j = 0; j < mat->rows(); ++j)
    for (std::size_t i = 0; i < mat->cols(); ++i) {
      if (mat->at(j, i) < 0 || mat->at(j, i) >= t->factors[j]) return false;
      if ((s->factors[i] * mat->at(j, i)) % t->factors[j] != 0) return false;
    }
  return true;
}

void FinabCategory::check_endpoints(const Mor& m) const {
  if (!valid_morphism(m)) throw std::invalid_argument("finab: invalid morphism payload");
}

IntMatrix FinabCategory::reduce(const IntMatrix& m, const std::vector<Int>& dst_factors) const {
  IntMatrix out = m;
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i)
      out.at(j, i) = positive_mod(m.at(j, i), dst_factors[j]);
  return out;
}

Mor FinabCategory::compose(const Mor& v, const Mor& u) const {
  check_endpoints(v);
  check_endpoints(u);
  if (!objects_equal(u.dst, v.src)) throw std::invalid_argument("compose: endpoint mismatch");
  return Mor{u.src, v.dst, reduce(matrix_of(v) * matrix_of(u), factors_of(v.dst))};
}

Mor FinabCategory::add(const Mor& a, const Mor& b) const {
  check_endpoints(a);
  check_endpoints(b);
  if (!objects_equal(a.src, b.src) || !objects_equal(a.dst, b.dst))
    throw std::invalid_argument("add: endpoint mismatch");
  return Mor{a.src, a.dst, reduce(matrix_of(a) + matrix_of(b), factors_of(a.dst))};
}

Mor FinabCategory::negate(const Mor& a) const {
  check_endpoints(a);
  return Mor{a.src, a.dst, reduce(-matrix_of(a), factors_of(a.dst))};
}

Mor FinabCategory::zero_morphism(const Obj& a, const Obj& b) const {
  return Mor{a, b, IntMatrix(factors_of(b).size(), factors_of(a).size())};
}

Mor FinabCategory::identity(const Obj& a) const {
  return Mor{a, a, IntMatrix::identity(factors_of(a).size())};
}

bool FinabCategory::morphisms_equal(const Mor& a, const Mor& b) const {
  return objects_equal(a.src, b.src) && objects_equal(a.dst, b.dst) &&
         matrix_of(a) == matrix_of(b);
}

std::string FinabCategory::describe_morphism(const Mor& m) const {
  return matrix_of(m).to_string();
}

KernelPair FinabCategory::kernel(const Mor& u) const {
  check_endpoints(u);
  const std::vector<Int>& da = factors_of(u.src);
  const std::vector<Int>& db = factors_of(u.dst);
  std::size_t m = da.size(), n = db.size();
  // {x : U x = 0 mod dB}: project the integer kernel of [U | diag(dB)]
  IntMatrix ext = matrix_of(u).hstack(IntMatrix::diagonal(db));
  IntMatrix k = integer_kernel(ext);  // (m+n) x r
  IntMatrix gens(m, k.cols());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < k.cols(); ++c) gens.at(i, c) = k.at(i, c);
  (void)n;
  return KernelPair{subgroup(u.src, gens)};
}

CokernelPair FinabCategory::cokernel(const Mor& u) const {
  check_endpoints(u);
  const std::vector<Int>& db = factors_of(u.dst);
  std::size_t n = db.size();
  if (n == 0) {
    Obj z = zero_object();
    return CokernelPair{QuotientPair{z, zero_morphism(u.dst, z)}};
  }
  IntMatrix rel = matrix_of(u).hstack(IntMatrix::diagonal(db));
  SnfResult s = snf(rel);  // s.u * rel * s.v = d, all diagonal entries positive
  std::vector<Int> q_factors;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (s.d.at(i, i) > 1) {
      q_factors.push_back(s.d.at(i, i));
      keep.push_back(i);
    }
  Obj quot = object(q_factors);
  IntMatrix proj(keep.size(), n);
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t j = 0; j < n; ++j)
      proj.at(r, j) = positive_mod(s.u.at(keep[r], j), q_factors[r]);
  return CokernelPair{QuotientPair{quot, morphism(u.dst, quot, proj)}};
}

Biproduct FinabCategory::biproduct(const Obj& a, const Obj& b) const {
  std::vector<Int> fa = factors_of(a), fb = factors_of(b);
  std::vector<Int> all = fa;
  all.insert(all.end(), fb.begin(), fb.end());
  Obj ab = object(canonical_factors(all));
  // express the canonical form via the SNF transforms of diag(all)
  SnfResult s = snf(IntMatrix::diagonal(all));
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (s.d.at(i, i) > 1) keep.push_back(i);
  // coordinates: y = U x is an isomorphism Z^k/diag(all) -> Z^k/diag(D)
  auto uinv = integer_solve(s.u, IntMatrix::identity(all.size()));
  if (!uinv) throw std::logic_error("biproduct: unimodular inverse failed");
  std::size_t na = fa.size(), nb = fb.size(), nq = keep.size();
  IntMatrix to_ab_a(nq, na), to_ab_b(nq, nb);   // injections
  IntMatrix from_ab_a(na, nq), from_ab_b(nb, nq);  // projections
  for (std::size_t r = 0; r < nq; ++r) {
    for (std::size_t j = 0; j < na; ++j) to_ab_a.at(r, j) = s.u.at(keep[r], j);
    for (std::size_t j = 0; j < nb; ++j) to_ab_b.at(r, j) = s.u.at(keep[r], na + j);
  }
  for (std::size_t c = 0; c < nq; ++c) {
    for (std::size_t i = 0; i < na; ++i) from_ab_a.at(i, c) = uinv->at(i, keep[c]);
    for (std::size_t i = 0; i < nb; ++i) from_ab_b.at(i, c) = uinv->at(na + i, keep[c]);
  }
  return Biproduct{ab, morphism(ab, a, from_ab_a), morphism(ab, b, from_ab_b),
                   morphism(a, ab, to_ab_a), morphism(b, ab, to_ab_b)};
}

std::optional<Mor> FinabCategory::factor_through_mono(const Mor& mono, const Mor& v) const {
  check_endpoints(mono);
  check_endpoints(v);
  if (!objects_equal(mono.dst, v.dst)) throw std::invalid_argument("factor: ambient mismatch");
  const std::vector<Int>& da = factors_of(mono.dst);
  std::size_t m = da.size();
  std::size_t k = factors_of(mono.src).size();
  std::size_t c = factors_of(v.src).size();
  IntMatrix ext = matrix_of(mono).hstack(IntMatrix::diagonal(da));
  auto sol = integer_solve(ext, matrix_of(v));
  if (!sol) return std::nullopt;
  IntMatrix w(k, c);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < c; ++j) w.at(i, j) = sol->at(i, j);
  (void)m;
  Mor out{v.src, mono.src, reduce(w, factors_of(mono.src))};
  if (!valid_morphism(out)) return std::nullopt;
  if (!morphisms_equal(compose(mono, out), v)) return std::nullopt;
  return out;
}

std::optional<Mor> FinabCategory::factor_through_epi(const Mor& epi, const Mor& w) const {
  check_endpoints(epi);
  check_endpoints(w);
  if (!objects_equal(epi.src, w.src)) throw std::invalid_argument("factor: ambient mismatch");
  const std::vector<Int>& dj = factors_of(epi.dst);
  const std::vector<Int>& db = factors_of(epi.src);
  std::size_t nj = dj.size(), nb = db.size(), nc = factors_of(w.dst).size();
  // preimage of each generator of the quotient target
  IntMatrix ext = matrix_of(epi).hstack(IntMatrix::diagonal(dj));
  auto sol = integer_solve(ext, IntMatrix::identity(nj));
  if (!sol) return std::nullopt;
  IntMatrix pre(nb, nj);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nj; ++j) pre.at(i, j) = sol->at(i, j);
  IntMatrix v = matrix_of(w) * pre;
  (void)nc;
  Mor out{epi.dst, w.dst, reduce(v, factors_of(w.dst))};
  if (!valid_morphism(out)) return std::nullopt;
  if (!morphisms_equal(compose(out, epi), w)) return std::nullopt;
  return out;
}

std::optional<Mor> FinabCategory::inverse(const Mor& u) const {
  check_endpoints(u);
  auto v = factor_through_epi(u, identity(u.src));
  if (!v) return std::nullopt;
  if (!morphisms_equal(compose(u, *v), identity(u.dst))) return std::nullopt;
  return v;
}

std::optional<std::vector<Mor>> FinabCategory::enumerate_hom(const Obj& a, const Obj& b,
                                                             std::size_t budget) const {
  const std::vector<Int>& da = factors_of(a);
  const std::vector<Int>& db = factors_of(b);
  std::size_t n = db.size(), m = da.size();
  // entry (j,i) ranges over multiples of db_j / gcd(da_i, db_j)
  std::vector<Int> steps(n * m), counts(n * m);
  std::size_t total = 1;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      Int g = gcd(da[i], db[j]);
      steps[j * m + i] = db[j] / g;
      counts[j * m + i] = g;
      Int t = Int(total) * g;
      if (t > Int(budget)) return std::nullopt;
      total = static_cast<std::size_t>(t);
    }
  std::vector<Mor> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    IntMatrix mat(n, m);
    std::size_t c = code;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t cnt = static_cast<std::size_t>(counts[j * m + i]);
        mat.at(j, i) = steps[j * m + i] * Int(c % cnt);
        c /= cnt;
      }
    out.push_back(Mor{a, b, mat});
  }
  return out;
}

Mor FinabCategory::random_morphism(const Obj& a, const Obj& b, Rng& rng) const {
  const std::vector<Int>& da = factors_of(a);
  const std::vector<Int>& db = factors_of(b);
  IntMatrix mat(db.size(), da.size());
  for (std::size_t j = 0; j < db.size(); ++j)
    for (std::size_t i = 0; i < da.size(); ++i) {
      Int g = gcd(da[i], db[j]);
      mat.at(j, i) = (db[j] / g) * Int(rng.below(static_cast<std::uint64_t>(g)));
    }
  return Mor{a, b, mat};
}

Obj FinabCategory::random_object(int size_bound, Rng& rng) const {
  std::size_t k = rng.below(static_cast<std::uint64_t>(size_bound) + 1);
  std::vector<Int> fs;
  for (std::size_t i = 0; i < k; ++i) fs.push_back(kSamplePool[rng.below(kSamplePool.size())]);
  return object(canonical_factors(fs));
}

std::vector<Obj> FinabCategory::enumerate_objects(int size_bound) const {
  std::set<std::string> seen;
  std::vector<Obj> out;
  std::vector<std::vector<Int>> pool = {{}};
  for (int round = 0; round < size_bound; ++round) {
    std::vector<std::vector<Int>> next;
    for (const auto& fs : pool)
      for (const auto& f : kSamplePool) {
        auto fs2 = fs;
        fs2.push_back(f);
        next.push_back(fs2);
      }
    pool.insert(pool.end(), next.begin(), next.end());
  }
  for (const auto& fs : pool) {
    Obj o = object(canonical_factors(fs));
    std::string key = describe_object(o);
    if (seen.insert(key).second) out.push_back(o);
  }
  return out;
}

std::vector<Obj> FinabCategory::probe_objects(const std::vector<Obj>& context) const {
  // cyclic groups of prime-power order dividing the exponent generate at
  // this scale
  Int exponent = 1;
  for (const auto& o : context)
    for (const auto& f : factors_of(o)) exponent = lcm(exponent, f);
  std::vector<Obj> out;
  for (Int q = 2; q <= exponent; ++q) {
    if (exponent % q != 0) continue;
    // keep prime powers only
    Int t = q;
    Int p = 0;
    for (Int d = 2; d * d <= t; ++d)
      if (t % d == 0) {
        p = d;
        break;
      }
    if (p == 0) p = t;
    while (t % p == 0) t /= p;
    if (t == 1) out.push_back(object({q}));
  }
  if (out.empty()) out.push_back(object({2}));
  return out;
}

std::vector<SubobjectPair> FinabCategory::strict_subobjects(const Obj& a) const {
  const std::vector<Int>& d = factors_of(a);
  auto elements = all_elements(d);
  std::set<std::string> seen;
  std::vector<SubobjectPair> out;
  auto key_of = [&](const SubobjectPair& s) {
    return describe_object(s.sub) + "|" + matrix_of(s.embed).to_string();
  };
  std::vector<SubobjectPair> frontier;
  SubobjectPair zero = subgroup(a, IntMatrix(d.size(), 0));
  seen.insert(key_of(zero));
  out.push_back(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    std::vector<SubobjectPair> next;
    for (const auto& s : frontier)
      for (const auto& e : elements) {
        IntMatrix gens = matrix_of(s.embed).hstack(
            IntMatrix::from_rows({e}).transpose());
        SubobjectPair grown = subgroup(a, gens);
        std::string key = key_of(grown);
        if (seen.insert(key).second) {
          out.push_back(grown);
          next.push_back(grown);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

SubobjectPair FinabCategory::random_strict_subobject(const Obj& a, Rng& rng) const {
  const std::vector<Int>& d = factors_of(a);
  std::size_t k = rng.below(d.size() + 1);
  IntMatrix gens(d.size(), k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < d.size(); ++i)
      gens.at(i, c) = Int(rng.below(static_cast<std::uint64_t>(d[i])));
  return subgroup(a, gens);
}

}  // namespace semikern

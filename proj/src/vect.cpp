#include "semikern/vect.hpp"

#include <stdexcept>

namespace semikern {

namespace {

struct VectObj {
  std::size_t dim;
  long long p;
};

}  // namespace

VectCategory::VectCategory(long long p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("VectCategory: p must be prime");
}

Obj VectCategory::object(std::size_t dim) const { return Obj{VectObj{dim, p_}}; }

Mor VectCategory::morphism(const Obj& src, const Obj& dst, const FpMatrix& m) const {
  Mor out{src, dst, m};
  if (!valid_morphism(out)) throw std::invalid_argument("vect morphism: shape/field mismatch");
  return out;
}

std::size_t VectCategory::dim_of(const Obj& a) { return std::any_cast<VectObj>(a.payload).dim; }

const FpMatrix& VectCategory::matrix_of(const Mor& m) {
  return *std::any_cast<FpMatrix>(&m.payload);
}

SubobjectPair VectCategory::subobject(const Subspace& s) const {
  if (s.p != p_) throw std::invalid_argument("vect subobject: field mismatch");
  Obj sub = object(s.dim());
  Obj ambient = object(s.ambient);
  return SubobjectPair{sub, morphism(sub, ambient, s.basis.transpose())};
}

Subspace VectCategory::subspace_of(const SubobjectPair& s) {
  return image_basis(matrix_of(s.embed));
}

std::string VectCategory::name() const { return "vect(p=" + std::to_string(p_) + ")"; }

bool VectCategory::objects_equal(const Obj& a, const Obj& b) const {
  return dim_of(a) == dim_of(b);
}

Obj VectCategory::zero_object() const { return object(0); }

bool VectCategory::is_zero_object(const Obj& a) const { return dim_of(a) == 0; }

std::string VectCategory::describe_object(const Obj& a) const {
  return "F_" + std::to_string(p_) + "^" + std::to_string(dim_of(a));
}

bool VectCategory::valid_morphism(const Mor& m) const {
  const FpMatrix* mat = std::any_cast<FpMatrix>(&m.payload);
  if (!mat) return false;
  return mat->prime() == p_ && mat->rows() == dim_of(m.dst) && mat->cols() == dim_of(m.src);
}

void VectCategory::check_endpoints(const Mor& m) const {
  if (!valid_morphism(m)) throw std::invalid_argument("vect: invalid morphism payload");
}

Mor VectCategory::compose(const Mor& v, const Mor& u) const {
  check_endpoints(v);
  check_endpoints(u);
  if (!objects_equal(u.dst, v.src)) throw std::invalid_argument("compose: endpoint mismatch");
  return Mor{u.src, v.dst, matrix_of(v) * matrix_of(u)};
}

Mor VectCategory::add(const Mor& a, const Mor& b) const {
  check_endpoints(a);
  check_endpoints(b);
  if (!objects_equal(a.src, b.src) || !objects_equal(a.dst, b.dst))
    throw std::invalid_argument("add: endpoint mismatch");
  return Mor{a.src, a.dst, matrix_of(a) + matrix_of(b)};
}

Mor VectCategory::negate(const Mor& a) const {
  check_endpoints(a);
  return Mor{a.src, a.dst, -matrix_of(a)};
}

Mor VectCategory::zero_morphism(const Obj& a, const Obj& b) const {
  return Mor{a, b, FpMatrix(dim_of(b), dim_of(a), p_)};
}

Mor VectCategory::identity(const Obj& a) const {
  return Mor{a, a, FpMatrix::identity(dim_of(a), p_)};
}

bool VectCategory::morphisms_equal(const Mor& a, const Mor& b) const {
  return objects_equal(a.src, b.src) && objects_equal(a.dst, b.dst) &&
         matrix_of(a) == matrix_of(b);
}

std::string VectCategory::describe_morphism(const Mor& m) const {
  return matrix_of(m).to_string();
}

KernelPair VectCategory::kernel(const Mor& u) const {
  check_endpoints(u);
  Subspace k = kernel_basis(matrix_of(u));
  return KernelPair{subobject(k)};
}

CokernelPair VectCategory::cokernel(const Mor& u) const {
  check_endpoints(u);
  // rows spanning the annihilator of the column space; their kernel is Im(u)
  Subspace left_null = kernel_basis(matrix_of(u).transpose());
  Obj quot = object(left_null.dim());
  Mor project{u.dst, quot, left_null.basis};
  return CokernelPair{QuotientPair{quot, project}};
}

Biproduct VectCategory::biproduct(const Obj& a, const Obj& b) const {
  std::size_t da = dim_of(a), db = dim_of(b);
  Obj ab = object(da + db);
  FpMatrix pa(da, da + db, p_), pb(db, da + db, p_);
  FpMatrix qa(da + db, da, p_), qb(da + db, db, p_);
  for (std::size_t i = 0; i < da; ++i) {
    pa.set(i, i, 1);
    qa.set(i, i, 1);
  }
  for (std::size_t i = 0; i < db; ++i) {
    pb.set(i, da + i, 1);
    qb.set(da + i, i, 1);
  }
  return Biproduct{ab, Mor{ab, a, pa}, Mor{ab, b, pb}, Mor{a, ab, qa}, Mor{b, ab, qb}};
}

std::optional<Mor> VectCategory::factor_through_mono(const Mor& mono, const Mor& v) const {
  check_endpoints(mono);
  check_endpoints(v);
  if (!objects_equal(mono.dst, v.dst)) throw std::invalid_argument("factor: ambient mismatch");
  auto w = solve_matrix(matrix_of(mono), matrix_of(v));
  if (!w) return std::nullopt;
  if (matrix_of(mono) * *w != matrix_of(v)) return std::nullopt;
  return Mor{v.src, mono.src, *w};
}

std::optional<Mor> VectCategory::factor_through_epi(const Mor& epi, const Mor& w) const {
  check_endpoints(epi);
  check_endpoints(w);
  if (!objects_equal(epi.src, w.src)) throw std::invalid_argument("factor: ambient mismatch");
  auto xt = solve_matrix(matrix_of(epi).transpose(), matrix_of(w).transpose());
  if (!xt) return std::nullopt;
  FpMatrix x = xt->transpose();
  if (x * matrix_of(epi) != matrix_of(w)) return std::nullopt;
  return Mor{epi.dst, w.dst, x};
}

std::optional<Mor> VectCategory::inverse(const Mor& u) const {
  check_endpoints(u);
  if (dim_of(u.src) != dim_of(u.dst)) return std::nullopt;
  auto inv = fp_inverse(matrix_of(u));
  if (!inv) return std::nullopt;
  return Mor{u.dst, u.src, *inv};
}

std::optional<std::vector<Mor>> VectCategory::enumerate_hom(const Obj& a, const Obj& b,
                                                            std::size_t budget) const {
  std::size_t entries = dim_of(a) * dim_of(b);
  std::size_t total = 1;
  for (std::size_t i = 0; i < entries; ++i) {
    total *= static_cast<std::size_t>(p_);
    if (total > budget) return std::nullopt;
  }
  std::vector<Mor> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    FpMatrix m(dim_of(b), dim_of(a), p_);
    std::size_t c = code;
    for (std::size_t i = 0; i < dim_of(b); ++i)
      for (std::size_t j = 0; j < dim_of(a); ++j) {
        m.set(i, j, static_cast<long long>(c % static_cast<std::size_t>(p_)));
        c /= static_cast<std::size_t>(p_);
      }
    out.push_back(Mor{a, b, m});
  }
  return out;
}

Mor VectCategory::random_morphism(const Obj& a, const Obj& b, Rng& rng) const {
  return Mor{a, b, random_fp_matrix(dim_of(b), dim_of(a), p_, rng)};
}

Obj VectCategory::random_object(int size_bound, Rng& rng) const {
  return object(rng.below(static_cast<std::uint64_t>(size_bound) + 1));
}

std::vector<Obj> VectCategory::enumerate_objects(int size_bound) const {
  std::vector<Obj> out;
  for (int d = 0; d <= size_bound; ++d) out.push_back(object(static_cast<std::size_t>(d)));
  return out;
}

std::vector<Obj> VectCategory::probe_objects(const std::vector<Obj>&) const {
  // F_p generates: every vector space is a coproduct of copies of it
  return {object(1)};
}

std::vector<SubobjectPair> VectCategory::strict_subobjects(const Obj& a) const {
  std::vector<SubobjectPair> out;
  for (const auto& s : enumerate_subspaces(dim_of(a), p_)) out.push_back(subobject(s));
  return out;
}

SubobjectPair VectCategory::random_strict_subobject(const Obj& a, Rng& rng) const {
  std::size_t n = dim_of(a);
  std::size_t k = rng.below(n + 1);
  FpMatrix rows = random_fp_matrix(k, n, p_, rng);
  return subobject(span_of_rows(rows));
}

}  // namespace semikern

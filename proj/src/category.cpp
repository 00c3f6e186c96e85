#include "semikern/category.hpp"

#include <stdexcept>

namespace semikern {

bool is_injective(const Category& c, const Mor& u) {
  return c.is_zero_object(c.kernel(u).pair.sub);
}

bool is_surjective(const Category& c, const Mor& u) {
  return c.is_zero_object(c.cokernel(u).pair.quot);
}

bool is_bijective(const Category& c, const Mor& u) {
  return is_injective(c, u) && is_surjective(c, u);
}

std::optional<Mor> is_isomorphism(const Category& c, const Mor& u) { return c.inverse(u); }

std::optional<Mor> subobject_leq(const Category& c, const SubobjectPair& s1,
                                 const SubobjectPair& s2) {
  if (!c.objects_equal(s1.embed.dst, s2.embed.dst))
    throw std::invalid_argument("subobject_leq: ambient mismatch");
  return c.factor_through_mono(s2.embed, s1.embed);
}

std::optional<Mor> quotient_geq(const Category& c, const QuotientPair& q1,
                                const QuotientPair& q2) {
  if (!c.objects_equal(q1.project.src, q2.project.src))
    throw std::invalid_argument("quotient_geq: ambient mismatch");
  return c.factor_through_epi(q1.project, q2.project);
}

bool subobjects_isomorphic(const Category& c, const SubobjectPair& s1, const SubobjectPair& s2) {
  return subobject_leq(c, s1, s2).has_value() && subobject_leq(c, s2, s1).has_value();
}

bool quotients_isomorphic(const Category& c, const QuotientPair& q1, const QuotientPair& q2) {
  return quotient_geq(c, q1, q2).has_value() && quotient_geq(c, q2, q1).has_value();
}

SubobjectPair image_subobject(const Category& c, const Mor& u) {
  return c.kernel(c.cokernel(u).pair.project).pair;
}

QuotientPair coimage_quotient(const Category& c, const Mor& u) {
  return c.cokernel(c.kernel(u).pair.embed).pair;
}

// ---- DualCategory ----

bool DualCategory::objects_equal(const Obj& a, const Obj& b) const {
  return base_->objects_equal(a, b);
}

Obj DualCategory::zero_object() const { return base_->zero_object(); }

bool DualCategory::is_zero_object(const Obj& a) const { return base_->is_zero_object(a); }

std::string DualCategory::describe_object(const Obj& a) const {
  return base_->describe_object(a);
}

bool DualCategory::valid_morphism(const Mor& m) const {
  return base_->valid_morphism(to_base(m));
}

Mor DualCategory::compose(const Mor& v, const Mor& u) const {
  return from_base(base_->compose(to_base(u), to_base(v)));
}

Mor DualCategory::add(const Mor& a, const Mor& b) const {
  return from_base(base_->add(to_base(a), to_base(b)));
}

Mor DualCategory::negate(const Mor& a) const { return from_base(base_->negate(to_base(a))); }

Mor DualCategory::zero_morphism(const Obj& a, const Obj& b) const {
  return from_base(base_->zero_morphism(b, a));
}

Mor DualCategory::identity(const Obj& a) const { return from_base(base_->identity(a)); }

bool DualCategory::morphisms_equal(const Mor& a, const Mor& b) const {
  return base_->morphisms_equal(to_base(a), to_base(b));
}

std::string DualCategory::describe_morphism(const Mor& m) const {
  return base_->describe_morphism(to_base(m));
}

KernelPair DualCategory::kernel(const Mor& u) const {
  CokernelPair ck = base_->cokernel(to_base(u));
  return KernelPair{SubobjectPair{ck.pair.quot, from_base(ck.pair.project)}};
}

CokernelPair DualCategory::cokernel(const Mor& u) const {
  KernelPair k = base_->kernel(to_base(u));
  return CokernelPair{QuotientPair{k.pair.sub, from_base(k.pair.embed)}};
}

Biproduct DualCategory::biproduct(const Obj& a, const Obj& b) const {
  Biproduct bp = base_->biproduct(a, b);
  // projections and injections trade places
  return Biproduct{bp.object, from_base(bp.q_a), from_base(bp.q_b), from_base(bp.p_a),
                   from_base(bp.p_b)};
}

std::optional<Mor> DualCategory::factor_through_mono(const Mor& mono, const Mor& v) const {
  auto r = base_->factor_through_epi(to_base(mono), to_base(v));
  if (!r) return std::nullopt;
  return from_base(*r);
}

std::optional<Mor> DualCategory::factor_through_epi(const Mor& epi, const Mor& w) const {
  auto r = base_->factor_through_mono(to_base(epi), to_base(w));
  if (!r) return std::nullopt;
  return from_base(*r);
}

std::optional<Mor> DualCategory::inverse(const Mor& u) const {
  auto r = base_->inverse(to_base(u));
  if (!r) return std::nullopt;
  return from_base(*r);
}

std::optional<std::vector<Mor>> DualCategory::enumerate_hom(const Obj& a, const Obj& b,
                                                            std::size_t budget) const {
  auto homs = base_->enumerate_hom(b, a, budget);
  if (!homs) return std::nullopt;
  std::vector<Mor> out;
  out.reserve(homs->size());
  for (const auto& m : *homs) out.push_back(from_base(m));
  return out;
}

Mor DualCategory::random_morphism(const Obj& a, const Obj& b, Rng& rng) const {
  return from_base(base_->random_morphism(b, a, rng));
}

Obj DualCategory::random_object(int size_bound, Rng& rng) const {
  return base_->random_object(size_bound, rng);
}

std::vector<Obj> DualCategory::enumerate_objects(int size_bound) const {
  return base_->enumerate_objects(size_bound);
}

std::vector<Obj> DualCategory::probe_objects(const std::vector<Obj>& context) const {
  return base_->probe_objects(context);
}

std::vector<SubobjectPair> DualCategory::strict_subobjects(const Obj& a) const {
  // strict subobjects here are the strict quotients of the base object,
  // i.e. cokernels of base strict subobjects
  std::vector<SubobjectPair> out;
  for (const auto& s : base_->strict_subobjects(a)) {
    CokernelPair ck = base_->cokernel(s.embed);
    out.push_back(SubobjectPair{ck.pair.quot, from_base(ck.pair.project)});
  }
  return out;
}

SubobjectPair DualCategory::random_strict_subobject(const Obj& a, Rng& rng) const {
  SubobjectPair s = base_->random_strict_subobject(a, rng);
  CokernelPair ck = base_->cokernel(s.embed);
  return SubobjectPair{ck.pair.quot, from_base(ck.pair.project)};
}

}  // namespace semikern

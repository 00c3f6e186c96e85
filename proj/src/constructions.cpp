#include "semikern/constructions.hpp"

#include <stdexcept>

namespace semikern {

FactorizationReport canonical_factor(const Category& c, const Mor& u) {
  FactorizationReport r;
  r.ker = c.kernel(u);
  r.coker = c.cokernel(u);
  r.coim = c.cokernel(r.ker.pair.embed).pair;
  r.im = c.kernel(r.coker.pair.project).pair;
  // u kills its kernel, so it descends along j'; the descent lands in Im(u)
  auto v = c.factor_through_epi(r.coim.project, u);
  if (!v) throw std::logic_error("canonical_factor: descent along the coimage failed");
  auto ubar = c.factor_through_mono(r.im.embed, *v);
  if (!ubar) throw std::logic_error("canonical_factor: lift into the image failed");
  r.u_bar = *ubar;
  Mor rebuilt = c.compose(r.im.embed, c.compose(r.u_bar, r.coim.project));
  if (!c.morphisms_equal(rebuilt, u))
    throw std::logic_error("canonical_factor: factorization identity violated");
  r.injective = c.is_zero_object(r.ker.pair.sub);
  r.surjective = c.is_zero_object(r.coker.pair.quot);
  r.bijective = r.injective && r.surjective;
  r.u_bar_bijective = is_bijective(c, r.u_bar);
  r.u_bar_inverse = c.inverse(r.u_bar);
  r.strict = r.u_bar_inverse.has_value();
  return r;
}

bool is_strict(const Category& c, const Mor& u) { return canonical_factor(c, u).strict; }

OrthogonalityReport orthogonality_check(const Category& c, const Mor& u, const Mor& v) {
  if (!c.objects_equal(u.dst, v.src))
    throw std::invalid_argument("orthogonality_check: endpoint mismatch");
  OrthogonalityReport r;
  r.composite_zero = c.morphisms_equal(c.compose(v, u), c.zero_morphism(u.src, v.dst));
  r.image_in_kernel =
      subobject_leq(c, image_subobject(c, u), c.kernel(v).pair).has_value();
  r.coimage_in_cokernel =
      quotient_geq(c, c.cokernel(u).pair, coimage_quotient(c, v)).has_value();
  return r;
}

namespace {

void require_strict_subobject(const Category& c, const SubobjectPair& s, const char* who) {
  if (!is_strict(c, s.embed)) throw std::invalid_argument(std::string(who) + ": subobject embedding is not strict");
}

}  // namespace

MeetJoinResult meet_subobjects(const Category& c, const SubobjectPair& s1,
                               const SubobjectPair& s2) {
  if (!c.objects_equal(s1.embed.dst, s2.embed.dst))
    throw std::invalid_argument("meet_subobjects: ambient mismatch");
  require_strict_subobject(c, s1, "meet_subobjects");
  require_strict_subobject(c, s2, "meet_subobjects");
  Mor jprime = c.cokernel(s1.embed).pair.project;
  Mor v = c.compose(jprime, s2.embed);
  KernelPair k = c.kernel(v);  // subobject of s2.sub
  Mor into_ambient = c.compose(s2.embed, k.pair.embed);
  auto to_first = c.factor_through_mono(s1.embed, into_ambient);
  if (!to_first) throw std::logic_error("meet_subobjects: mediator into the first leg missing");
  MeetJoinResult r;
  r.sub = SubobjectPair{k.pair.sub, into_ambient};
  r.first_mediator = *to_first;
  r.second_mediator = k.pair.embed;
  return r;
}

MeetJoinResult join_subobjects(const Category& c, const SubobjectPair& s1,
                               const SubobjectPair& s2) {
  if (!c.objects_equal(s1.embed.dst, s2.embed.dst))
    throw std::invalid_argument("join_subobjects: ambient mismatch");
  require_strict_subobject(c, s1, "join_subobjects");
  require_strict_subobject(c, s2, "join_subobjects");
  Biproduct bp = c.biproduct(s1.sub, s2.sub);
  Mor h = c.add(c.compose(s1.embed, bp.p_a), c.compose(s2.embed, bp.p_b));
  SubobjectPair im = image_subobject(c, h);
  auto from_first = c.factor_through_mono(im.embed, s1.embed);
  auto from_second = c.factor_through_mono(im.embed, s2.embed);
  if (!from_first || !from_second)
    throw std::logic_error("join_subobjects: legs do not land in the image");
  return MeetJoinResult{im, *from_first, *from_second};
}

MeetJoinResult join_subobjects_via_dual(const Category& c, const SubobjectPair& s1,
                                        const SubobjectPair& s2) {
  if (!c.objects_equal(s1.embed.dst, s2.embed.dst))
    throw std::invalid_argument("join_subobjects_via_dual: ambient mismatch");
  require_strict_subobject(c, s1, "join_subobjects_via_dual");
  require_strict_subobject(c, s2, "join_subobjects_via_dual");
  // the supremum of subobjects is the infimum of the associated quotients,
  // computed in the dual category and pulled back as a kernel
  DualCategory d(c);
  QuotientPair q1 = c.cokernel(s1.embed).pair;
  QuotientPair q2 = c.cokernel(s2.embed).pair;
  SubobjectPair d1{q1.quot, Mor{q1.project.dst, q1.project.src, q1.project.payload}};
  SubobjectPair d2{q2.quot, Mor{q2.project.dst, q2.project.src, q2.project.payload}};
  MeetJoinResult dual_meet = meet_subobjects(d, d1, d2);
  // dual_meet.sub.embed is a base epi A -> M; its kernel is the join
  Mor base_epi{dual_meet.sub.embed.dst, dual_meet.sub.embed.src, dual_meet.sub.embed.payload};
  KernelPair k = c.kernel(base_epi);
  auto from_first = c.factor_through_mono(k.pair.embed, s1.embed);
  auto from_second = c.factor_through_mono(k.pair.embed, s2.embed);
  if (!from_first || !from_second)
    throw std::logic_error("join_subobjects_via_dual: legs do not land in the kernel");
  return MeetJoinResult{k.pair, *from_first, *from_second};
}

QuotientPair quotient_by(const Category& c, const SubobjectPair& s) {
  require_strict_subobject(c, s, "quotient_by");
  return c.cokernel(s.embed).pair;
}

RefinementResult refinement(const Category& c, const SubobjectPair& s1,
                            const SubobjectPair& s2) {
  if (!c.objects_equal(s1.embed.dst, s2.embed.dst))
    throw std::invalid_argument("refinement: ambient mismatch");
  if (!subobject_leq(c, s1, s2).has_value())
    throw std::invalid_argument("refinement: first subobject is not below the second");
  RefinementResult r;
  r.by_first = quotient_by(c, s1);
  r.by_second = quotient_by(c, s2);
  auto v = c.factor_through_epi(r.by_first.project, r.by_second.project);
  if (!v) throw std::logic_error("refinement: induced morphism missing");
  r.v = *v;
  return r;
}

SecondIsoReport second_iso(const Category& c, const SubobjectPair& s1,
                           const SubobjectPair& s2) {
  SecondIsoReport r;
  r.meet = meet_subobjects(c, s1, s2);
  r.join = join_subobjects(c, s1, s2);
  // left side: A'' modulo the meet (the meet sits inside A'' by construction)
  r.lhs = c.cokernel(r.meet.second_mediator).pair;
  // right side: the join modulo A' (A' embedded via its join mediator)
  r.rhs = c.cokernel(r.join.first_mediator).pair;
  Mor u = c.compose(r.rhs.project, r.join.second_mediator);  // A'' -> rhs
  auto theta = c.factor_through_epi(r.lhs.project, u);
  if (!theta) throw std::logic_error("second_iso: theta does not descend");
  r.theta = *theta;
  r.bijective = is_bijective(c, r.theta);
  r.inverse = c.inverse(r.theta);
  r.iso = r.inverse.has_value();
  return r;
}

ThirdIsoReport third_iso(const Category& c, const SubobjectPair& outer,
                         const SubobjectPair& inner) {
  if (!c.objects_equal(inner.embed.dst, outer.sub))
    throw std::invalid_argument("third_iso: inner subobject must live in the outer one");
  require_strict_subobject(c, outer, "third_iso");
  require_strict_subobject(c, inner, "third_iso");
  ThirdIsoReport r;
  Mor inner_in_ambient = c.compose(outer.embed, inner.embed);  // A' -> A
  SubobjectPair inner_amb{inner.sub, inner_in_ambient};
  r.quot_inner = quotient_by(c, inner_amb);  // A/A'
  r.quot_outer = quotient_by(c, outer);      // A/A''
  r.alpha = c.compose(r.quot_inner.project, outer.embed);  // A'' -> A/A'
  auto v = c.factor_through_epi(r.quot_inner.project, r.quot_outer.project);
  if (!v) throw std::logic_error("third_iso: refinement morphism missing");
  r.v = *v;
  r.ker_v = c.kernel(r.v);
  // the proof's two identifications, witnessed by mutual inclusion
  SubobjectPair im_inner = image_subobject(c, inner.embed);
  r.im_inner_is_ker_alpha = subobjects_isomorphic(c, im_inner, c.kernel(r.alpha).pair);
  SubobjectPair im_alpha = image_subobject(c, r.alpha);
  r.im_alpha_is_ker_v = subobjects_isomorphic(c, im_alpha, r.ker_v.pair);
  // bijection A''/A' -> Ker(v): factor alpha, then slide the image into the
  // kernel along the inclusion witness
  FactorizationReport fa = canonical_factor(c, r.alpha);
  r.lhs = fa.coim;
  auto slide = subobject_leq(c, fa.im, r.ker_v.pair);
  if (!slide) throw std::logic_error("third_iso: image of alpha does not sit in Ker(v)");
  r.theta = c.compose(*slide, fa.u_bar);
  r.bijective = is_bijective(c, r.theta);
  // (A/A')/Ker(v) ~ A/A''
  r.double_quot = quotient_by(c, r.ker_v.pair);
  auto w = c.factor_through_epi(r.double_quot.project, r.v);
  if (!w) throw std::logic_error("third_iso: outer descent missing");
  r.iso_witness = *w;
  r.iso_inverse = c.inverse(r.iso_witness);
  r.iso = r.iso_inverse.has_value();
  return r;
}

}  // namespace semikern

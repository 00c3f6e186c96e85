#include "semikern/decorate.hpp"

#include <stdexcept>

namespace semikern {

namespace {

struct DecObj {
  Obj base;
  SubobjectPair open;
};

}  // namespace

DecoratedCategory::DecoratedCategory(const Category& base, std::string name)
    : base_(&base), name_(std::move(name)) {}

Obj DecoratedCategory::object(const Obj& base_obj, const SubobjectPair& open) const {
  if (!base_->objects_equal(open.embed.dst, base_obj))
    throw std::invalid_argument("decorated object: open subobject ambient mismatch");
  SubobjectPair canon = image_subobject(*base_, open.embed);
  return Obj{DecObj{base_obj, canon}};
}

Obj DecoratedCategory::object_discrete(const Obj& base_obj) const {
  return object(base_obj, SubobjectPair{base_obj, base_->identity(base_obj)});
}

Obj DecoratedCategory::object_indiscrete(const Obj& base_obj) const {
  Obj z = base_->zero_object();
  return object(base_obj, SubobjectPair{z, base_->zero_morphism(z, base_obj)});
}

Mor DecoratedCategory::morphism(const Obj& src, const Obj& dst, const Mor& base_mor) const {
  if (!base_->valid_morphism(base_mor) || !base_->objects_equal(base_mor.src, base_of(src)) ||
      !base_->objects_equal(base_mor.dst, base_of(dst)))
    throw std::invalid_argument("decorated morphism: base endpoint mismatch");
  if (!continuous(src, dst, base_mor))
    throw std::invalid_argument("decorated morphism: not continuous");
  return Mor{src, dst, base_mor.payload};
}

const Obj& DecoratedCategory::base_of(const Obj& a) {
  return std::any_cast<DecObj>(&a.payload)->base;
}

const SubobjectPair& DecoratedCategory::open_of(const Obj& a) {
  return std::any_cast<DecObj>(&a.payload)->open;
}

Mor DecoratedCategory::to_base(const Mor& m) const {
  return Mor{base_of(m.src), base_of(m.dst), m.payload};
}

Mor DecoratedCategory::from_base(const Obj& src, const Obj& dst, const Mor& base_mor) const {
  return Mor{src, dst, base_mor.payload};
}

bool DecoratedCategory::continuous(const Obj& src, const Obj& dst, const Mor& base_mor) const {
  Mor restricted = base_->compose(base_mor, open_of(src).embed);
  return base_->factor_through_mono(open_of(dst).embed, restricted).has_value();
}

std::string DecoratedCategory::name() const { return name_; }

bool DecoratedCategory::objects_equal(const Obj& a, const Obj& b) const {
  return base_->objects_equal(base_of(a), base_of(b)) &&
         base_->objects_equal(open_of(a).sub, open_of(b).sub) &&
         base_->morphisms_equal(open_of(a).embed, open_of(b).embed);
}

Obj DecoratedCategory::zero_object() const {
  return object_indiscrete(base_->zero_object());
}

bool DecoratedCategory::is_zero_object(const Obj& a) const {
  return base_->is_zero_object(base_of(a));
}

std::string DecoratedCategory::describe_object(const Obj& a) const {
  return base_->describe_object(base_of(a)) + "{open=" +
         base_->describe_object(open_of(a).sub) + " via " +
         base_->describe_morphism(open_of(a).embed) + "}";
}

bool DecoratedCategory::valid_morphism(const Mor& m) const {
  if (!std::any_cast<DecObj>(&m.src.payload) || !std::any_cast<DecObj>(&m.dst.payload))
    return false;
  Mor b = to_base(m);
  if (!base_->valid_morphism(b)) return false;
  return continuous(m.src, m.dst, b);
}

Mor DecoratedCategory::compose(const Mor& v, const Mor& u) const {
  if (!objects_equal(u.dst, v.src)) throw std::invalid_argument("compose: endpoint mismatch");
  return from_base(u.src, v.dst, base_->compose(to_base(v), to_base(u)));
}

Mor DecoratedCategory::add(const Mor& a, const Mor& b) const {
  return from_base(a.src, a.dst, base_->add(to_base(a), to_base(b)));
}

Mor DecoratedCategory::negate(const Mor& a) const {
  return from_base(a.src, a.dst, base_->negate(to_base(a)));
}

Mor DecoratedCategory::zero_morphism(const Obj& a, const Obj& b) const {
  return from_base(a, b, base_->zero_morphism(base_of(a), base_of(b)));
}

Mor DecoratedCategory::identity(const Obj& a) const {
  return from_base(a, a, base_->identity(base_of(a)));
}

bool DecoratedCategory::morphisms_equal(const Mor& a, const Mor& b) const {
  return objects_equal(a.src, b.src) && objects_equal(a.dst, b.dst) &&
         base_->morphisms_equal(to_base(a), to_base(b));
}

std::string DecoratedCategory::describe_morphism(const Mor& m) const {
  return base_->describe_morphism(to_base(m));
}

SubobjectPair DecoratedCategory::induced_open(const SubobjectPair& open,
                                              const Mor& sub_embed) const {
  // meet of the open subobject with (S, i), carried back into S: pass to the
  // quotient by S and take the kernel of the composite on the open part
  Mor jprime = base_->cokernel(sub_embed).pair.project;
  Mor v = base_->compose(jprime, open.embed);
  KernelPair m = base_->kernel(v);  // subobject of the open part
  Mor into_ambient = base_->compose(open.embed, m.pair.embed);
  auto into_sub = base_->factor_through_mono(sub_embed, into_ambient);
  if (!into_sub) throw std::logic_error("induced_open: meet mediator missing");
  return image_subobject(*base_, *into_sub);
}

KernelPair DecoratedCategory::kernel(const Mor& u) const {
  KernelPair k = base_->kernel(to_base(u));
  Obj sub = object(k.pair.sub, induced_open(open_of(u.src), k.pair.embed));
  return KernelPair{SubobjectPair{sub, morphism(sub, u.src, k.pair.embed)}};
}

CokernelPair DecoratedCategory::cokernel(const Mor& u) const {
  CokernelPair ck = base_->cokernel(to_base(u));
  // push the decoration forward; no closure is taken
  Mor pushed = base_->compose(ck.pair.project, open_of(u.dst).embed);
  Obj quot = object(ck.pair.quot, image_subobject(*base_, pushed));
  return CokernelPair{QuotientPair{quot, morphism(u.dst, quot, ck.pair.project)}};
}

Biproduct DecoratedCategory::biproduct(const Obj& a, const Obj& b) const {
  Biproduct bp = base_->biproduct(base_of(a), base_of(b));
  const SubobjectPair& ua = open_of(a);
  const SubobjectPair& ub = open_of(b);
  Biproduct bpu = base_->biproduct(ua.sub, ub.sub);
  Mor h = base_->add(
      base_->compose(base_->compose(bp.q_a, ua.embed), bpu.p_a),
      base_->compose(base_->compose(bp.q_b, ub.embed), bpu.p_b));
  Obj ab = object(bp.object, image_subobject(*base_, h));
  return Biproduct{ab, morphism(ab, a, bp.p_a), morphism(ab, b, bp.p_b),
                   morphism(a, ab, bp.q_a), morphism(b, ab, bp.q_b)};
}

std::optional<Mor> DecoratedCategory::factor_through_mono(const Mor& mono, const Mor& v) const {
  auto w = base_->factor_through_mono(to_base(mono), to_base(v));
  if (!w) return std::nullopt;
  if (!continuous(v.src, mono.src, *w)) return std::nullopt;
  return from_base(v.src, mono.src, *w);
}

std::optional<Mor> DecoratedCategory::factor_through_epi(const Mor& epi, const Mor& w) const {
  auto v = base_->factor_through_epi(to_base(epi), to_base(w));
  if (!v) return std::nullopt;
  if (!continuous(epi.dst, w.dst, *v)) return std::nullopt;
  return from_base(epi.dst, w.dst, *v);
}

std::optional<Mor> DecoratedCategory::inverse(const Mor& u) const {
  if (!valid_morphism(u)) return std::nullopt;
  auto inv = base_->inverse(to_base(u));
  if (!inv) return std::nullopt;
  if (!continuous(u.dst, u.src, *inv)) return std::nullopt;
  return from_base(u.dst, u.src, *inv);
}

std::optional<std::vector<Mor>> DecoratedCategory::enumerate_hom(const Obj& a, const Obj& b,
                                                                 std::size_t budget) const {
  auto homs = base_->enumerate_hom(base_of(a), base_of(b), budget);
  if (!homs) return std::nullopt;
  std::vector<Mor> out;
  for (const auto& m : *homs)
    if (continuous(a, b, m)) out.push_back(from_base(a, b, m));
  return out;
}

Mor DecoratedCategory::random_morphism(const Obj& a, const Obj& b, Rng& rng) const {
  for (int tries = 0; tries < 64; ++tries) {
    Mor m = base_->random_morphism(base_of(a), base_of(b), rng);
    if (continuous(a, b, m)) return from_base(a, b, m);
  }
  auto homs = enumerate_hom(a, b, 4096);
  if (homs && !homs->empty()) return (*homs)[rng.below(homs->size())];
  return zero_morphism(a, b);
}

Obj DecoratedCategory::random_object(int size_bound, Rng& rng) const {
  Obj b = base_->random_object(size_bound, rng);
  return object(b, base_->random_strict_subobject(b, rng));
}

std::vector<Obj> DecoratedCategory::enumerate_objects(int size_bound) const {
  std::vector<Obj> out;
  for (const auto& b : base_->enumerate_objects(size_bound))
    for (const auto& s : base_->strict_subobjects(b)) out.push_back(object(b, s));
  return out;
}

std::vector<Obj> DecoratedCategory::probe_objects(const std::vector<Obj>& context) const {
  std::vector<Obj> base_ctx;
  for (const auto& o : context) base_ctx.push_back(base_of(o));
  std::vector<Obj> out;
  for (const auto& p : base_->probe_objects(base_ctx)) {
    // the indiscrete copy sees the underlying map, the discrete copy sees
    // the decoration
    out.push_back(object_indiscrete(p));
    out.push_back(object_discrete(p));
  }
  return out;
}

std::vector<SubobjectPair> DecoratedCategory::strict_subobjects(const Obj& a) const {
  std::vector<SubobjectPair> out;
  for (const auto& s : base_->strict_subobjects(base_of(a))) {
    Obj sub = object(s.sub, induced_open(open_of(a), s.embed));
    out.push_back(SubobjectPair{sub, morphism(sub, a, s.embed)});
  }
  return out;
}

SubobjectPair DecoratedCategory::random_strict_subobject(const Obj& a, Rng& rng) const {
  SubobjectPair s = base_->random_strict_subobject(base_of(a), rng);
  Obj sub = object(s.sub, induced_open(open_of(a), s.embed));
  return SubobjectPair{sub, morphism(sub, a, s.embed)};
}

}  // namespace semikern

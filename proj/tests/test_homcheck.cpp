#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "semikern/decorate.hpp"
#include "semikern/finab.hpp"
#include "semikern/homcheck.hpp"
#include "semikern/vect.hpp"

using namespace semikern;

TEST_CASE("hom group sizes on pinned examples") {
  VectCategory v(2);
  HomGroup g = realize_hom(v, v.object(1), v.object(2));
  REQUIRE(g.complete());
  CHECK(g.elements->size() == 4);

  HomGroup trivial = realize_hom(v, v.object(0), v.object(3));
  REQUIRE(trivial.complete());
  CHECK(trivial.elements->size() == 1);

  DecoratedCategory lin(v, "lintop(p=2)");
  HomGroup only_zero =
      realize_hom(lin, lin.object_discrete(v.object(1)), lin.object_indiscrete(v.object(1)));
  REQUIRE(only_zero.complete());
  CHECK(only_zero.elements->size() == 1);

  // budget blowout is loud, not truncated
  HomGroup big = realize_hom(v, v.object(3), v.object(3), 100);
  CHECK_FALSE(big.complete());
  CHECK_FALSE(big.note.empty());
}

TEST_CASE("induced maps are group homomorphisms") {
  VectCategory v(3);
  FinabCategory fin;
  Rng rng(61);
  for (int it = 0; it < 20; ++it) {
    Mor u = v.random_morphism(v.object(2), v.object(2), rng);
    CHECK(induced_maps_additive(v, u, v.object(1)));
    Mor w = fin.random_morphism(fin.random_object(2, rng), fin.random_object(2, rng), rng);
    CHECK(induced_maps_additive(fin, w, fin.object({2})));
  }
}

TEST_CASE("hom sequence exactness through the kernel") {
  VectCategory v(2);
  Obj a = v.object(2), b = v.object(1);
  Mor u = v.morphism(a, b, FpMatrix::from_rows({{1, 1}}, 2));
  KernelPair k = v.kernel(u);
  Obj probe = v.object(1);
  // 0 -> Hom(C, Ker u) -> Hom(C, A) -> Hom(C, B)
  std::vector<Mor> seq = {v.zero_morphism(v.zero_object(), k.pair.sub), k.pair.embed, u};
  CHECK(hom_sequence_exact(v, probe, seq));
  // a wrong middle object breaks exactness
  std::vector<Mor> bad = {v.zero_morphism(v.zero_object(), a), v.identity(a), u};
  CHECK_FALSE(hom_sequence_exact(v, probe, bad));
  // injective u: 0 -> Hom(C,A) -> Hom(C,B) exact
  Mor mono = v.morphism(b, a, FpMatrix::from_rows({{1}, {0}}, 2));
  std::vector<Mor> inj = {v.zero_morphism(v.zero_object(), b), mono};
  CHECK(hom_sequence_exact(v, probe, inj));
}

TEST_CASE("instance kernels and cokernels pass verification exhaustively") {
  VectCategory v(2);
  auto probes = v.probe_objects({});
  for (const auto& a : v.enumerate_objects(2))
    for (const auto& b : v.enumerate_objects(2)) {
      auto homs = *v.enumerate_hom(a, b, 1u << 16);
      for (const auto& u : homs) {
        CHECK(verify_kernel(v, u, v.kernel(u).pair, probes).ok);
        CHECK(verify_cokernel(v, u, v.cokernel(u).pair, probes).ok);
      }
    }
}

TEST_CASE("instance kernels pass verification in finab and the decorated instances") {
  VectCategory v2(2);
  FinabCategory fin;
  DecoratedCategory lin(v2, "lintop(p=2)");
  DecoratedCategory top(fin, "topab");
  Rng rng(67);
  std::vector<const Category*> cats = {&fin, &lin, &top};
  for (const Category* cp : cats) {
    const Category& c = *cp;
    for (int it = 0; it < 40; ++it) {
      Obj a = c.random_object(2, rng), b = c.random_object(2, rng);
      Mor u = c.random_morphism(a, b, rng);
      auto probes = c.probe_objects({a, b});
      VerifyResult kr = verify_kernel(c, u, c.kernel(u).pair, probes);
      CHECK(kr.ok);
      VerifyResult cr = verify_cokernel(c, u, c.cokernel(u).pair, probes);
      CHECK(cr.ok);
    }
  }
}

TEST_CASE("wrong kernel candidates are rejected with a reason") {
  VectCategory v(2);
  Obj a = v.object(2), b = v.object(1);
  // zero subobject is not the kernel of the zero morphism
  Mor z = v.zero_morphism(a, b);
  SubobjectPair wrong = v.subobject(zero_subspace(2, 2));
  VerifyResult r = verify_kernel(v, z, wrong, v.probe_objects({}));
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.detail.empty());
  // a subspace u does not kill fails the vanishing condition
  Mor u = v.morphism(a, b, FpMatrix::from_rows({{1, 1}}, 2));
  VerifyResult r2 =
      verify_kernel(v, u, v.subobject(span_of_rows(FpMatrix::from_rows({{1, 0}}, 2))),
                    v.probe_objects({}));
  CHECK_FALSE(r2.ok);
  // too-small candidate inside the true kernel fails factorization
  VerifyResult r3 = verify_kernel(v, z, v.subobject(span_of_rows(FpMatrix::from_rows({{1, 0}}, 2))),
                                  v.probe_objects({}));
  CHECK_FALSE(r3.ok);
}

TEST_CASE("wrongly decorated kernel candidates are rejected") {
  VectCategory v(2);
  DecoratedCategory lin(v, "lintop(p=2)");
  Obj base2 = v.object(2);
  // u: (F_2^2, open full) -> (F_2, full), kernel base = span{e2}, induced open = itself
  Obj a = lin.object_discrete(base2);
  Obj b = lin.object_discrete(v.object(1));
  Mor u = lin.morphism(a, b, v.morphism(base2, v.object(1), FpMatrix::from_rows({{1, 0}}, 2)));
  KernelPair good = lin.kernel(u);
  auto probes = lin.probe_objects({a, b});
  CHECK(verify_kernel(lin, u, good.pair, probes).ok);
  // corrupt the decoration: indiscrete kernel object instead of the induced one
  Obj corrupted = lin.object_indiscrete(DecoratedCategory::base_of(good.pair.sub));
  SubobjectPair bad{corrupted, Mor{corrupted, a, lin.to_base(good.pair.embed).payload}};
  REQUIRE(lin.valid_morphism(bad.embed));  // still a morphism, but the wrong kernel
  VerifyResult r = verify_kernel(lin, u, bad, probes);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.detail.empty());
  // corrupt the other way: discrete decoration makes the embedding discontinuous
  Obj amb = lin.object(base2, v.subobject(span_of_rows(FpMatrix::from_rows({{1, 1}}, 2))));
  Mor u2 = lin.morphism(amb, b, v.morphism(base2, v.object(1), FpMatrix::from_rows({{1, 0}}, 2)));
  KernelPair k2 = lin.kernel(u2);
  Obj overdec = lin.object_discrete(DecoratedCategory::base_of(k2.pair.sub));
  SubobjectPair bad2{overdec, Mor{overdec, amb, lin.to_base(k2.pair.embed).payload}};
  VerifyResult r2 = verify_kernel(lin, u2, bad2, probes);
  CHECK_FALSE(r2.ok);
}

TEST_CASE("corrupted candidates are detected across random samples") {
  VectCategory v(2);
  DecoratedCategory lin(v, "lintop(p=2)");
  Rng rng(71);
  int corrupted_tested = 0;
  for (int it = 0; it < 200 && corrupted_tested < 60; ++it) {
    Obj a = lin.random_object(2, rng), b = lin.random_object(2, rng);
    Mor u = lin.random_morphism(a, b, rng);
    KernelPair good = lin.kernel(u);
    // swap in a random strict subobject; skip ones that coincide with the truth
    SubobjectPair fake = lin.random_strict_subobject(a, rng);
    if (subobjects_isomorphic(lin, fake, good.pair)) continue;
    ++corrupted_tested;
    auto probes = lin.probe_objects({a, b});
    CHECK_FALSE(verify_kernel(lin, u, fake, probes).ok);
  }
  CHECK(corrupted_tested >= 50);
}

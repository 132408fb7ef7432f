#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tautilt/corpus.hpp"
#include "tautilt/dell.hpp"

using namespace tautilt;
using F2 = Fp<2>;

namespace {

struct Fx {
  AlgebraPtr<F2> a2 = build_corpus_algebra<F2>(linear_a(2));
  AlgebraPtr<F2> a3z = build_corpus_algebra<F2>(zero_relation_a3());
  AlgebraPtr<F2> n32 = build_corpus_algebra<F2>(nakayama_cyclic(3, 2));

  Module<F2> tstar() const {
    auto projs = projective_modules(a3z);
    auto s = simple_modules(a3z);
    return direct_sum(a3z, Side::Left, {projs[0].mod, s[0], s[2]}).mod;
  }
  Module<F2> apr_tilt() const {
    auto projs = projective_modules(a2);
    auto s = simple_modules(a2);
    return direct_sum(a2, Side::Left, {projs[0].mod, s[0]}).mod;
  }
};

}  // namespace

TEST_CASE("ambient relative syzygy reduces as expected") {
  Fx f;
  auto ctx = ambient_context(f.a2);
  auto s = simple_modules(f.a2);
  auto sz = rel_syzygy(ctx, s[0]);
  auto projs = projective_modules(f.a2);
  CHECK(is_isomorphic(sz, projs[1].mod) == Tri::Yes);  // P2
  auto red = reduce_mod_projectives(ctx, sz);
  REQUIRE(red.has_value());
  CHECK(red->dim == 0);
}

TEST_CASE("fac(A) syzygies agree with ambient syzygies modulo projectives") {
  Fx f;
  auto reg = regular_module(f.a3z);
  auto amb = ambient_context(f.a3z);
  auto facA = fac_context(reg);
  for (const auto& m : simple_modules(f.a3z)) {
    auto z1 = reduce_mod_projectives(amb, rel_syzygy(amb, m));
    auto z2 = reduce_mod_projectives(facA, rel_syzygy(facA, m));
    REQUIRE(z1.has_value());
    REQUIRE(z2.has_value());
    CHECK(z1->dim == z2->dim);
    if (z1->dim > 0) CHECK(is_isomorphic(*z1, *z2) == Tri::Yes);
  }
}

TEST_CASE("right approximation of D(A/I) by T* is surjective with kernel in fac") {
  Fx f;
  auto t = f.tstar();
  auto dabar = dual_of_quotient(annihilator(t));
  CHECK(fac_contains(t, dabar));
  auto ap = right_approx(t, dabar);
  CHECK(image(ap.map).dim() == dabar.dim);
  auto ker = submodule(ap.source, kernel(ap.map)).mod;
  if (ker.dim > 0) CHECK(fac_contains(t, ker));
}

TEST_CASE("syzygy chain stabilization") {
  Fx f;
  // self-injective: every module is a syzygy, the chain stabilizes at level 0
  auto ctx32 = ambient_context(f.n32);
  std::vector<Module<F2>> pool32 = simple_modules(f.n32);
  for (auto& p : projective_modules(f.n32)) pool32.push_back(p.mod);
  auto chain32 = syzygy_chain(ctx32, pool32, 4);
  CHECK(!chain32.uncertain);
  CHECK(chain32.stabilized);
  CHECK(chain32.stable_at == 0);

  // hereditary A2: level 1 holds projectives only
  auto ctx2 = ambient_context(f.a2);
  std::vector<Module<F2>> pool2 = simple_modules(f.a2);
  for (auto& p : projective_modules(f.a2)) pool2.push_back(p.mod);
  auto chain2 = syzygy_chain(ctx2, pool2, 4);
  CHECK(chain2.stabilized);
  REQUIRE(chain2.levels.size() >= 2);
  for (const auto& m : chain2.levels[1]) CHECK(is_projective(m));

  // pool of projectives only: every level is the projectives
  auto chain_proj = syzygy_chain(ctx2, {}, 3);
  CHECK(chain_proj.stabilized);
  CHECK(chain_proj.stable_at == 0);
  for (const auto& lvl : chain_proj.levels) CHECK(lvl.size() == 2);
}

TEST_CASE("dell of projectives is zero") {
  Fx f;
  auto ctx = ambient_context(f.a2);
  for (auto& p : projective_modules(f.a2)) {
    auto r = dell_upper(ctx, p.mod);
    CHECK(r.bounded());
    CHECK(r.level == 0);
    CHECK(r.exact);
  }
}

TEST_CASE("dell over the self-injective Nakayama algebra is 0 everywhere") {
  Fx f;
  auto ctx = ambient_context(f.n32);
  std::vector<Module<F2>> pool = simple_modules(f.n32);
  for (auto& p : projective_modules(f.n32)) pool.push_back(p.mod);
  for (const auto& m : pool) {
    auto r = dell_upper(ctx, m);  // candidate search, no pool needed
    CHECK(r.bounded());
    CHECK(r.level == 0);
    CHECK(verify_dell_witness(ctx, m, r.level, r.witness));
    auto rx = dell_upper(ctx, m, {}, &pool);  // exhaustive route agrees
    CHECK(rx.bounded());
    CHECK(rx.level == 0);
    CHECK(rx.exact);
  }
}

TEST_CASE("dell(S1) over A2 is exactly 1") {
  Fx f;
  auto ctx = ambient_context(f.a2);
  auto s = simple_modules(f.a2);
  std::vector<Module<F2>> pool = {s[0], s[1]};
  for (auto& p : projective_modules(f.a2)) {
    bool dup = false;
    for (const auto& m : pool)
      if (is_isomorphic(m, p.mod) == Tri::Yes) dup = true;
    if (!dup) pool.push_back(p.mod);
  }
  REQUIRE(pool.size() == 3);  // complete finite-type pool
  auto r = dell_upper(ctx, s[0], {}, &pool);
  CHECK(r.bounded());
  CHECK(r.level == 1);
  CHECK(r.exact);  // level 0 exhaustively refuted
  // the plain candidate search gives the same upper bound
  auto ru = dell_upper(ctx, s[0]);
  CHECK(ru.bounded());
  CHECK(ru.level == 1);
}

TEST_CASE("dell is bounded by finite projective dimension") {
  Fx f;
  auto ctx = ambient_context(f.a3z);
  std::vector<Module<F2>> pool = simple_modules(f.a3z);
  for (auto& p : projective_modules(f.a3z)) pool.push_back(p.mod);
  for (const auto& m : pool) {
    auto pd = pd_up_to(m, 10);
    REQUIRE(pd.finite);  // gl.dim A3Z = 2
    auto r = dell_upper(ctx, m);
    CHECK(r.bounded());
    CHECK(r.level <= pd.value);
  }
}

TEST_CASE("ext2 vanishing via dell") {
  Fx f;
  // T = A: everything trivially certified
  auto reg = regular_module(f.a2);
  auto ctx = ambient_context(f.a2);
  auto s = simple_modules(f.a2);
  auto v1 = ext2_vanishing_via_dell(reg, s[0], ctx);
  CHECK(v1.applicable);
  CHECK(v1.certified);
  CHECK(v1.consistent);
  CHECK(v1.shift_identities_ok);

  // T = P1 + S1 over A2, X = D(A): pd T = 1 finite forces Ext^2(T, X) = 0
  auto t = f.apr_tilt();
  auto facT = fac_context(t);
  auto da = dual(regular_module(f.a2, Side::Right));
  CHECK(fac_contains(t, da));
  auto v2 = ext2_vanishing_via_dell(t, da, facT);
  CHECK(v2.applicable);
  CHECK(v2.certified);
  CHECK(v2.route == "finite-pd");
  CHECK(v2.consistent);
  CHECK(v2.shift_identities_ok);

  // T* is not self-orthogonal: inapplicable
  auto tst = f.tstar();
  auto facStar = fac_context(tst);
  auto v3 = ext2_vanishing_via_dell(tst, dual_of_quotient(annihilator(tst)), facStar);
  CHECK(!v3.applicable);
}

TEST_CASE("endomorphism transfer of the regular module") {
  Fx f;
  auto tr = endo_transfer(regular_module(f.a2));
  CHECK(tr.b->dim == 3);  // B = End(A)^op has the dimension of A
  CHECK(tr.b->simple_count() == 2);
  REQUIRE(tr.b->radical.has_value());
  CHECK(tr.b->radical->dim() == 1);
}

TEST_CASE("endomorphism transfer of the APR tilt") {
  Fx f;
  auto t = f.apr_tilt();
  auto tr = endo_transfer(t);
  CHECK(tr.b->dim == 3);  // path algebra of an A2 quiver again
  CHECK(tr.b->simple_count() == 2);
  // F(D(A/Ann)) = D(T) as B-modules
  auto dabar = dual_of_quotient(annihilator(t));
  auto fd = tr.apply(dabar);
  auto dt = tr.dual_t();
  CHECK(fd.dim == dt.dim);
  CHECK(is_isomorphic(fd, dt) == Tri::Yes);
  // the functor preserves Hom dimensions on fac(T) pairs
  auto s = simple_modules(f.a2);
  std::vector<Module<F2>> fac_objs = {t, s[0], dabar};
  for (const auto& x : fac_objs)
    for (const auto& y : fac_objs)
      CHECK(hom_dim(x, y) == hom_dim(tr.apply(x), tr.apply(y)));
}

TEST_CASE("endomorphism transfer of T* over A3Z") {
  Fx f;
  auto t = f.tstar();
  auto tr = endo_transfer(t);
  CHECK(tr.b->dim == 4);  // (path algebra of A2) x k
  CHECK(tr.b->simple_count() == 3);
  auto dabar = dual_of_quotient(annihilator(t));
  CHECK(is_isomorphic(tr.apply(dabar), tr.dual_t()) == Tri::Yes);
}

TEST_CASE("theorem III on corpus instances") {
  Fx f;
  // T = A over A2 with the complete pool: all routes certify, bridge equal
  std::vector<Module<F2>> pool = simple_modules(f.a2);
  for (auto& p : projective_modules(f.a2)) {
    bool dup = false;
    for (const auto& m : pool)
      if (is_isomorphic(m, p.mod) == Tri::Yes) dup = true;
    if (!dup) pool.push_back(p.mod);
  }
  auto r1 = check_one_tilting_via_dell(regular_module(f.a2), {}, {}, &pool);
  CHECK(r1.verdict.applicable);
  CHECK(r1.verdict.consistent);
  CHECK(r1.pd.finite);
  REQUIRE(r1.dell_fac.has_value());
  REQUIRE(r1.dell_b.has_value());
  CHECK(r1.dell_fac->bounded());
  CHECK(r1.dell_b->bounded());
  if (r1.dell_fac->exact && r1.dell_b->exact)
    CHECK(r1.dell_fac->level == r1.dell_b->level);

  // the APR tilt: self-orthogonal tau-tilting, certified 1-tilting
  auto r2 = check_one_tilting_via_dell(f.apr_tilt(), {}, {}, &pool);
  CHECK(r2.verdict.applicable);
  CHECK(r2.verdict.consistent);

  // T*: hypothesis fails, recorded not asserted
  auto r3 = check_one_tilting_via_dell(f.tstar());
  CHECK(!r3.verdict.applicable);
}

TEST_CASE("the shift identity needs self-orthogonality of the context-projectives") {
  // T = P1 + P2 + S2 over the self-injective cyclic Nakayama algebra is
  // tau-tilting but Ext^3(T, T) != 0; the dimension-shift identity then
  // genuinely fails at i = 3, so the hypothesis cannot be dropped.
  Fx f;
  auto projs = projective_modules(f.n32);
  auto s = simple_modules(f.n32);
  auto t = direct_sum(f.n32, Side::Left, {projs[0].mod, projs[1].mod, s[1]}).mod;
  auto rep = classify(t);
  CHECK(rep.tau_tilting);
  CHECK(rep.self_orthogonal.fails());
  CHECK(rep.self_orthogonal.fail_degree == 3);
  auto ctx = fac_context(t);
  auto y = direct_sum(f.n32, Side::Left, {s[0], s[1]}).mod;
  REQUIRE(fac_contains(t, y));
  auto oy = rel_syzygy(ctx, y);
  MinimalResolution<F2> res(t);
  CHECK(ext_dim(res, y, 3) == 1);
  CHECK(ext_dim(res, oy, 4) == 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tautilt/corpus.hpp"
#include "tautilt/module.hpp"

using namespace tautilt;
using F2 = Fp<2>;

namespace {

struct A2Fixture {
  AlgebraPtr<F2> alg = build_corpus_algebra<F2>(linear_a(2));
  std::vector<ProjectiveModule<F2>> projs = projective_modules(alg);
  std::vector<Module<F2>> simples = simple_modules(alg);
  std::vector<Module<F2>> injectives = injective_modules(alg);
};

struct A3ZFixture {
  AlgebraPtr<F2> alg = build_corpus_algebra<F2>(zero_relation_a3());
  std::vector<ProjectiveModule<F2>> projs = projective_modules(alg);
  std::vector<Module<F2>> simples = simple_modules(alg);
  std::vector<Module<F2>> injectives = injective_modules(alg);
};

}  // namespace

TEST_CASE("standard modules over A2") {
  A2Fixture f;
  CHECK(f.projs[0].mod.dim == 2);  // P1 = span{e1, a}
  CHECK(f.projs[1].mod.dim == 1);  // P2 = S2
  CHECK(f.simples[0].dim == 1);
  CHECK(f.simples[1].dim == 1);
  CHECK(f.injectives[0].dim == 1);  // I1 = S1 (vertex 1 is a source)
  CHECK(f.injectives[1].dim == 2);  // I2 = P1 (projective-injective)
  CHECK(is_isomorphic(f.projs[0].mod, f.injectives[1]) == Tri::Yes);
  CHECK(is_isomorphic(f.projs[1].mod, f.simples[1]) == Tri::Yes);
  CHECK(is_isomorphic(f.projs[0].mod, f.simples[0]) == Tri::No);
}

TEST_CASE("injectives of A3Z are S1, P1, P2") {
  A3ZFixture f;
  CHECK(is_isomorphic(f.injectives[0], f.simples[0]) == Tri::Yes);
  CHECK(is_isomorphic(f.injectives[1], f.projs[0].mod) == Tri::Yes);
  CHECK(is_isomorphic(f.injectives[2], f.projs[1].mod) == Tri::Yes);
}

TEST_CASE("hom spaces over A2") {
  A2Fixture f;
  CHECK(hom_dim(f.projs[0].mod, f.simples[0]) == 1);  // projection to the top
  CHECK(hom_dim(f.simples[0], f.simples[1]) == 0);
  // identity is always an intertwiner
  auto endos = hom_space(f.projs[0].mod, f.projs[0].mod);
  bool has_id = false;
  for (const auto& e : endos)
    if (mat_equal(e, Mat<F2>(Mat<F2>::Identity(2, 2)))) has_id = true;
  CHECK(has_id);
}

TEST_CASE("hom parent mismatch") {
  A2Fixture f;
  A3ZFixture g;
  CHECK_THROWS_AS(hom_space(f.simples[0], g.simples[0]), DimensionError);
}

TEST_CASE("decompose P1 + P1 + S1 over A2") {
  A2Fixture f;
  auto sum3 = direct_sum(f.alg, Side::Left, {f.projs[0].mod, f.projs[0].mod, f.simples[0]});
  auto dec = decompose(sum3.mod);
  REQUIRE(dec.certified);
  CHECK(dec.iso_class_count() == 2);
  CHECK(dec.total_multiplicity() == 3);
  bool saw_p1 = false, saw_s1 = false;
  for (const auto& [rep, mult] : dec.summands) {
    if (indec_isomorphic(rep, f.projs[0].mod)) {
      saw_p1 = true;
      CHECK(mult == 2);
    }
    if (indec_isomorphic(rep, f.simples[0])) {
      saw_s1 = true;
      CHECK(mult == 1);
    }
  }
  CHECK(saw_p1);
  CHECK(saw_s1);
  // reassembled direct sum is isomorphic to the input
  std::vector<Module<F2>> parts;
  for (const auto& [rep, mult] : dec.summands)
    for (int c = 0; c < mult; ++c) parts.push_back(rep);
  CHECK(is_isomorphic(direct_sum(f.alg, Side::Left, parts).mod, sum3.mod) == Tri::Yes);
}

TEST_CASE("count of regular module summands equals vertex count") {
  A3ZFixture f;
  auto reg = regular_module(f.alg);
  auto cnt = count_summands(reg);
  REQUIRE(cnt.has_value());
  CHECK(*cnt == 3);
}

TEST_CASE("make_basic collapses repeated summands") {
  A2Fixture f;
  auto sum3 = direct_sum(f.alg, Side::Left, {f.projs[0].mod, f.projs[0].mod, f.simples[0]});
  auto basic = make_basic(sum3.mod);
  CHECK(basic.dim == 3);
  auto cnt = count_summands(basic);
  REQUIRE(cnt.has_value());
  CHECK(*cnt == 2);
}

TEST_CASE("dual is a duality") {
  A3ZFixture f;
  for (const auto& m : f.simples) {
    auto d = dual(m);
    CHECK(d.side == Side::Right);
    CHECK(d.dim == m.dim);
    auto dd = dual(d);
    CHECK(is_isomorphic(dd, m) == Tri::Yes);
  }
  // dim Hom(M, N) = dim Hom(DN, DM)
  auto m = f.projs[0].mod;
  auto n = f.simples[0];
  CHECK(hom_dim(m, n) == hom_dim(dual(n), dual(m)));
}

TEST_CASE("radical, top and covers") {
  A2Fixture f;
  auto rad = radical_submodule(f.projs[0].mod);
  CHECK(rad.dim() == 1);
  auto top = top_module(f.projs[0].mod);
  CHECK(top.mod.dim == 1);
  CHECK(is_isomorphic(top.mod, f.simples[0]) == Tri::Yes);

  auto cover = projective_cover(f.simples[0], f.projs);
  CHECK(cover.proj.dim == 2);
  CHECK(cover.copy_vertex == std::vector<int>{0});
  // minimality: top(P(M)) and top(M) have the same dimension
  CHECK(top_module(cover.proj).mod.dim == top_module(f.simples[0]).mod.dim);
}

TEST_CASE("syzygies") {
  A2Fixture f;
  auto sz = syzygy(f.simples[0]);
  CHECK(is_isomorphic(sz, f.projs[1].mod) == Tri::Yes);  // Omega S1 = P2
  CHECK(syzygy(f.projs[0].mod).dim == 0);
  CHECK(is_projective(f.projs[0].mod));
  CHECK(!is_projective(f.simples[0]));

  A3ZFixture g;
  auto sz1 = syzygy(g.simples[0]);
  CHECK(is_isomorphic(sz1, g.simples[1]) == Tri::Yes);  // Omega S1 = S2, not projective
  CHECK(!is_projective(sz1));
}

TEST_CASE("tau on projectives and simples") {
  A2Fixture f;
  CHECK(tau(f.projs[0].mod).dim == 0);
  CHECK(tau(f.projs[1].mod).dim == 0);
  auto t1 = tau(f.simples[0]);
  CHECK(is_isomorphic(t1, f.simples[1]) == Tri::Yes);  // tau S1 = S2

  A3ZFixture g;
  CHECK(is_isomorphic(tau(g.simples[0]), g.simples[1]) == Tri::Yes);
  CHECK(is_isomorphic(tau(g.simples[1]), g.simples[2]) == Tri::Yes);  // tau S2 = S3
  CHECK(tau(g.simples[2]).dim == 0);                                  // S3 = P3
}

TEST_CASE("tau vanishes exactly on projectives in the standard pool") {
  for (const auto& entry :
       {linear_a(2), linear_a(3), zero_relation_a3(), truncated_local(2), nakayama_cyclic(3, 2)}) {
    auto alg = build_corpus_algebra<F2>(entry);
    std::vector<Module<F2>> pool = simple_modules(alg);
    for (auto& p : projective_modules(alg)) pool.push_back(p.mod);
    for (auto& i : injective_modules(alg)) pool.push_back(i);
    for (const auto& m : pool) CHECK((tau(m).dim == 0) == is_projective(m));
  }
}

TEST_CASE("trace ideals over A2") {
  A2Fixture f;
  auto reg = regular_module(f.alg);
  CHECK(trace_ideal(reg).space.is_full());

  auto tr1 = trace_ideal(f.projs[0].mod);
  CHECK(tr1.dim() == 2);  // span{e1, a} = A e1 A
  auto aea = ideal_from_generators<F2>(f.alg, {f.alg->idempotents[0]});
  CHECK(tr1.space == aea.space);

  auto tr2 = trace_ideal(f.projs[1].mod);
  CHECK(tr2.dim() == 2);  // span{e2, a}
  auto aeb = ideal_from_generators<F2>(f.alg, {f.alg->idempotents[1]});
  CHECK(tr2.space == aeb.space);

  CHECK_THROWS_AS(trace_ideal(f.simples[0]), PreconditionError);
}

TEST_CASE("tr(P) P = P for all corpus indecomposable projectives") {
  for (const auto& entry :
       {linear_a(2), linear_a(3), zero_relation_a3(), truncated_local(2), truncated_local(3),
        nakayama_cyclic(3, 2)}) {
    auto alg = build_corpus_algebra<F2>(entry);
    for (auto& p : projective_modules(alg)) {
      auto tr = trace_ideal(p.mod);
      // tr(P) . P inside A: span of products of tr-basis with the subspace A e_v
      std::vector<Vec<F2>> prods;
      for (Index r = 0; r < tr.space.dim(); ++r)
        for (Index j = 0; j < p.mod.dim; ++j)
          prods.push_back(mul(*alg, tr.space.basis_vector(r), Vec<F2>(p.embed.col(j))));
      auto trp = Subspace<F2>::from_vectors(prods, alg->dim);
      auto pspace = image(p.embed);
      CHECK(trp == pspace);
    }
  }
}

TEST_CASE("quotient transport") {
  A3ZFixture f;
  auto ib = ideal_from_generators<F2>(f.alg, {basis_element(*f.alg, 4)});  // span{b}
  REQUIRE(f.alg->basis_labels[4] == "b");
  auto q = quotient_algebra<F2>(f.alg, ib);
  // S1 is killed by b: restricts to the quotient and inflates back
  auto s1_bar = restrict_to_quotient(f.simples[0], q);
  CHECK(s1_bar.dim == 1);
  auto back = inflate_from_quotient(s1_bar, q);
  CHECK(is_isomorphic(back, f.simples[0]) == Tri::Yes);
  // P2 has b acting nontrivially: restriction must fail
  CHECK_THROWS_AS(restrict_to_quotient(f.projs[1].mod, q), PreconditionError);
}

TEST_CASE("module_from_representation matches standard modules") {
  A2Fixture f;
  // P1 as a representation: V1 = V2 = k, arrow the identity
  Mat<F2> arrow(1, 1);
  arrow << F2(1);
  auto p1 = module_from_representation<F2>(f.alg, {1, 1}, {arrow});
  CHECK(is_isomorphic(p1, f.projs[0].mod) == Tri::Yes);
  // S1: V1 = k, V2 = 0
  auto s1 = module_from_representation<F2>(f.alg, {1, 0}, {Mat<F2>(0, 1)});
  CHECK(is_isomorphic(s1, f.simples[0]) == Tri::Yes);
  CHECK(dimension_vector(p1) == std::vector<Index>{1, 1});
  CHECK(dimension_vector(s1) == std::vector<Index>{1, 0});
}

TEST_CASE("module validation catches bad actions") {
  A2Fixture f;
  // making the arrow act as an identity on P1's basis is inconsistent
  std::vector<Mat<F2>> act = f.projs[0].mod.act;
  act[2] = Mat<F2>::Identity(2, 2);
  CHECK_THROWS_AS(Module<F2>::make(f.alg, Side::Left, act, Check::Full), ValidationError);
}

TEST_CASE("summand counts are subadditive with equality iff classes are disjoint") {
  A2Fixture f;
  auto p1 = f.projs[0].mod;
  auto s1 = f.simples[0];
  auto both = direct_sum(f.alg, Side::Left, {p1, s1}).mod;
  auto twice = direct_sum(f.alg, Side::Left, {p1, p1}).mod;
  auto mixed = direct_sum(f.alg, Side::Left, {both, p1}).mod;
  REQUIRE(count_summands(both).has_value());
  CHECK(*count_summands(both) == 2);   // disjoint classes: equality
  CHECK(*count_summands(twice) == 1);  // shared class: strict drop
  CHECK(*count_summands(mixed) == 2);
  CHECK(*count_summands(mixed) <= *count_summands(both) + *count_summands(p1));
}

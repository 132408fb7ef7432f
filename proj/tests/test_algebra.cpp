#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tautilt/corpus.hpp"

using namespace tautilt;
using F2 = Fp<2>;
using F3 = Fp<3>;

namespace {

template <class S>
Index label_index(const Algebra<S>& a, const std::string& label) {
  auto it = std::find(a.basis_labels.begin(), a.basis_labels.end(), label);
  REQUIRE(it != a.basis_labels.end());
  return static_cast<Index>(it - a.basis_labels.begin());
}

template <class S>
Vec<S> elem(const AlgebraPtr<S>& a, const std::string& label) {
  return basis_element(*a, label_index(*a, label));
}

}  // namespace

TEST_CASE("A2 path algebra") {
  auto a2 = build_corpus_algebra<F2>(linear_a(2));
  CHECK(a2->dim == 3);
  CHECK(a2->simple_count() == 2);
  CHECK(label_index(*a2, "e1") >= 0);
  CHECK(label_index(*a2, "e2") >= 0);
  CHECK(label_index(*a2, "a1") >= 0);
  // a = a*e1 = e2*a
  auto a = elem<F2>(a2, "a1");
  CHECK(is_zero_vec<F2>(Vec<F2>(mul(*a2, a, elem<F2>(a2, "e1")) - a)));
  CHECK(is_zero_vec<F2>(Vec<F2>(mul(*a2, elem<F2>(a2, "e2"), a) - a)));
  CHECK(is_zero_vec<F2>(mul(*a2, a, elem<F2>(a2, "e2"))));
}

TEST_CASE("zero relation A3 over F2") {
  auto a3z = build_corpus_algebra<F2>(zero_relation_a3());
  CHECK(a3z->dim == 5);
  CHECK(a3z->simple_count() == 3);
  for (const char* l : {"e1", "e2", "e3", "a", "b"}) CHECK(label_index(*a3z, l) >= 0);
  // the relation kills b*a
  auto a = elem<F2>(a3z, "a");
  auto b = elem<F2>(a3z, "b");
  CHECK(is_zero_vec<F2>(mul(*a3z, b, a)));
  CHECK(a3z->radical.has_value());
  CHECK(a3z->radical->dim() == 2);
}

TEST_CASE("local truncated algebras") {
  auto loc2 = build_corpus_algebra<F2>(truncated_local(2));
  CHECK(loc2->dim == 2);
  auto x = elem<F2>(loc2, "x");
  CHECK(is_zero_vec<F2>(mul(*loc2, x, x)));

  auto loc3 = build_corpus_algebra<F3>(truncated_local(3));
  CHECK(loc3->dim == 3);
  auto y = elem<F3>(loc3, "x");
  CHECK(!is_zero_vec<F3>(mul(*loc3, y, y)));
  CHECK(is_zero_vec<F3>(mul(*loc3, y, mul(*loc3, y, y))));
}

TEST_CASE("nakayama cyclic dimensions") {
  auto n32 = build_corpus_algebra<F2>(nakayama_cyclic(3, 2));
  CHECK(n32->dim == 6);
  CHECK(n32->simple_count() == 3);
}

TEST_CASE("non-admissible relations are rejected") {
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows.push_back(ArrowSpec{"a", 0, 1});
  q.relations.push_back(Relation{RelationTerm{1, {0}}});  // length-1 term
  q.nilpotency = 2;
  CHECK_THROWS_AS(build_algebra<F2>(q, "bad"), ValidationError);

  QuiverPresentation r;
  r.vertices = {"1"};
  r.arrows.push_back(ArrowSpec{"a", 0, 5});  // endpoint outside the vertex set
  r.nilpotency = 2;
  CHECK_THROWS_AS(build_algebra<F2>(r, "bad2"), ValidationError);
}

TEST_CASE("ideal generation, products and powers over A3Z") {
  auto a3z = build_corpus_algebra<F2>(zero_relation_a3());
  auto b = elem<F2>(a3z, "b");

  auto ib = ideal_from_generators<F2>(a3z, {b});
  CHECK(ib.dim() == 1);  // b*e2=b, a*b and b*b vanish
  CHECK(ib.space.contains(b));

  auto ib2 = ideal_power(ib, 2);
  CHECK(ib2.dim() == 0);

  auto full = ideal_from_generators<F2>(a3z, {a3z->unit});
  CHECK(full.dim() == 5);

  CHECK(is_nilpotent(ib));
  CHECK(!is_idempotent(ib));
  CHECK(is_nilpotent(zero_ideal<F2>(a3z)));
  CHECK(is_idempotent(zero_ideal<F2>(a3z)));
  CHECK(is_idempotent(full));
  CHECK(!is_nilpotent(full));
}

TEST_CASE("stable parts") {
  auto a3z = build_corpus_algebra<F2>(zero_relation_a3());
  auto ib = ideal_from_generators<F2>(a3z, {elem<F2>(a3z, "b")});
  CHECK(stable_part(ib).dim() == 0);
  auto full = full_ideal<F2>(a3z);
  CHECK(stable_part(full).space == full.space);

  auto a2 = build_corpus_algebra<F2>(linear_a(2));
  REQUIRE(a2->radical.has_value());
  Ideal<F2> arrow{a2, *a2->radical};
  CHECK(stable_part(arrow).dim() == 0);
}

TEST_CASE("stable index and quotient simple counts") {
  auto a3z = build_corpus_algebra<F2>(zero_relation_a3());
  CHECK(stable_index(zero_ideal<F2>(a3z)) == 0);
  auto ib = ideal_from_generators<F2>(a3z, {elem<F2>(a3z, "b")});
  CHECK(stable_index(ib) == 0);
  auto q = quotient_algebra<F2>(a3z, ib);
  CHECK(q.algebra->dim == 4);
  CHECK(q.algebra->simple_count() == 3);  // |A/I| = 3 = |A|
}

TEST_CASE("quotient of A3Z by span{b} is A2 x k") {
  auto a3z = build_corpus_algebra<F2>(zero_relation_a3());
  auto ib = ideal_from_generators<F2>(a3z, {elem<F2>(a3z, "b")});
  auto q = quotient_algebra<F2>(a3z, ib);
  const auto& labels = q.algebra->basis_labels;
  CHECK(labels == std::vector<std::string>{"e1", "e2", "e3", "a"});
  // e3 is a central primitive idempotent: e3 * a = a * e3 = 0
  auto e3 = basis_element(*q.algebra, 2);
  auto a = basis_element(*q.algebra, 3);
  CHECK(is_zero_vec<F2>(mul(*q.algebra, e3, a)));
  CHECK(is_zero_vec<F2>(mul(*q.algebra, a, e3)));
  // section columns are genuine coset representatives
  for (Index i = 0; i < q.algebra->dim; ++i) {
    Vec<F2> rep = q.section.col(i);
    CHECK((q.proj * rep)[i] == F2(1));
  }
}

TEST_CASE("opposite algebra reverses multiplication") {
  auto a3 = build_corpus_algebra<F2>(linear_a(3));
  auto op = opposite_algebra(a3);
  auto a1 = elem<F2>(a3, "a1");
  auto a2 = elem<F2>(a3, "a2");
  // in A: the composite "a1 then a2" is a2*a1 != 0, the other order dies
  CHECK(!is_zero_vec<F2>(mul(*a3, a2, a1)));
  CHECK(is_zero_vec<F2>(mul(*a3, a1, a2)));
  CHECK(!is_zero_vec<F2>(mul(*op, a1, a2)));
  CHECK(is_zero_vec<F2>(mul(*op, a2, a1)));
  // op of op is the original
  auto opop = opposite_algebra(op);
  CHECK(same_algebra(opop, a3));
}

TEST_CASE("|A| = |A/I| + st(I) over all basis-subset ideals") {
  for (const auto& entry :
       {linear_a(2), zero_relation_a3(), truncated_local(2), nakayama_cyclic(3, 2)}) {
    auto alg = build_corpus_algebra<F2>(entry);
    const Index n = alg->dim;
    REQUIRE(n <= 6);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Vec<F2>> gens;
      for (Index i = 0; i < n; ++i)
        if (mask & (1u << i)) gens.push_back(basis_element(*alg, i));
      auto ideal = ideal_from_generators<F2>(alg, gens);
      auto i0 = stable_part(ideal);
      auto q = quotient_algebra<F2>(alg, ideal);
      auto q0 = quotient_algebra<F2>(alg, i0);
      const Index st = stable_index(ideal);
      CHECK(alg->simple_count() == q.algebra->simple_count() + st);
      CHECK(alg->simple_count() == q0.algebra->simple_count() + st);
      CHECK(stable_index(i0) == st);
      CHECK((alg->simple_count() == q.algebra->simple_count()) == is_nilpotent(ideal));
      // the stable part is idempotent and contained in I
      CHECK(is_idempotent(i0));
      CHECK(ideal.space.contains(i0.space));
    }
  }
}

TEST_CASE("stable part is the largest idempotent subideal (exhaustive, small)") {
  for (const auto& entry : {truncated_local(2), linear_a(2)}) {
    auto alg = build_corpus_algebra<F2>(entry);
    const Index n = alg->dim;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Vec<F2>> gens;
      for (Index i = 0; i < n; ++i)
        if (mask & (1u << i)) gens.push_back(basis_element(*alg, i));
      auto ideal = ideal_from_generators<F2>(alg, gens);
      auto i0 = stable_part(ideal);
      for (unsigned m2 = 0; m2 < (1u << n); ++m2) {
        std::vector<Vec<F2>> g2;
        for (Index i = 0; i < n; ++i)
          if (m2 & (1u << i)) g2.push_back(basis_element(*alg, i));
        auto j = ideal_from_generators<F2>(alg, g2);
        if (is_idempotent(j) && ideal.space.contains(j.space)) CHECK(i0.space.contains(j.space));
      }
    }
  }
}

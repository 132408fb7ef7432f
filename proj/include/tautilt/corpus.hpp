// Built-in algebra families used by the verification suites and the CLI.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautilt/algebra.hpp"

namespace tautilt {

/// A family member expanded to a presentation. `indec_dim_bound`, when set,
/// is a proven bound on the dimension of every indecomposable module, so a
/// pool enumerated up to that bound is complete (used for exact delooping
/// levels and finite-type detection).
struct CorpusEntry {
  std::string name;
  QuiverPresentation pres;
  std::optional<int> indec_dim_bound;
};

/// A_n quiver 1 -> 2 -> ... -> n, no relations. Indecomposables are the
/// interval modules, of dimension at most n.
inline CorpusEntry linear_a(int n) {
  if (n < 1) throw ValidationError("linear_a: n must be >= 1");
  QuiverPresentation q;
  for (int v = 1; v <= n; ++v) q.vertices.push_back(std::to_string(v));
  for (int v = 1; v < n; ++v)
    q.arrows.push_back(ArrowSpec{"a" + std::to_string(v), v - 1, v});
  q.nilpotency = std::max(2, n);
  return CorpusEntry{"LinearA(" + std::to_string(n) + ")", q, n};
}

/// Cyclic Nakayama algebra on n vertices with rad^t = 0. Indecomposables are
/// the uniserial modules P_i / rad^s, s <= t.
inline CorpusEntry nakayama_cyclic(int n, int t) {
  if (n < 1 || t < 2) throw ValidationError("nakayama_cyclic: need n >= 1, t >= 2");
  QuiverPresentation q;
  for (int v = 1; v <= n; ++v) q.vertices.push_back(std::to_string(v));
  for (int v = 0; v < n; ++v)
    q.arrows.push_back(ArrowSpec{"a" + std::to_string(v + 1), v, (v + 1) % n});
  q.nilpotency = t;
  return CorpusEntry{"NakayamaCyclic(" + std::to_string(n) + "," + std::to_string(t) + ")", q, t};
}

/// Local truncated polynomial algebra k[x]/(x^n). Indecomposables are the
/// nilpotent Jordan blocks of size at most n.
inline CorpusEntry truncated_local(int n) {
  if (n < 2) throw ValidationError("truncated_local: n must be >= 2");
  QuiverPresentation q;
  q.vertices.push_back("1");
  q.arrows.push_back(ArrowSpec{"x", 0, 0});
  q.nilpotency = n;
  return CorpusEntry{"TruncatedLocal(" + std::to_string(n) + ")", q, n};
}

/// 1 -> 2 -> 3 with the length-two path set to zero. A string algebra whose
/// indecomposables (the five strings) have dimension at most 2.
inline CorpusEntry zero_relation_a3() {
  QuiverPresentation q;
  q.vertices = {"1", "2", "3"};
  q.arrows.push_back(ArrowSpec{"a", 0, 1});
  q.arrows.push_back(ArrowSpec{"b", 1, 2});
  q.relations.push_back(Relation{RelationTerm{1, {0, 1}}});  // b*a (a applied first)
  q.nilpotency = 3;
  return CorpusEntry{"ZeroRelationA3", q, 2};
}

/// The corpus the verification suites sweep by default.
inline std::vector<CorpusEntry> standard_corpus() {
  return {linear_a(2),          linear_a(3),        zero_relation_a3(),
          truncated_local(2),   truncated_local(3), nakayama_cyclic(3, 2)};
}

template <class S>
AlgebraPtr<S> build_corpus_algebra(const CorpusEntry& e) {
  return build_algebra<S>(e.pres, e.name);
}

}  // namespace tautilt

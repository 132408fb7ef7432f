// Finite-dimensional algebras presented by quivers with admissible relations:
// construction, two-sided ideals, products/powers/stable parts, quotient and
// opposite algebras. The path convention is fixed once: composition is
// right-to-left ("b*a" applies a first), arrows act from their source vertex
// component to their target component, and Ae_i is spanned by paths whose
// source is i.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tautilt/linalg.hpp"

namespace tautilt {

struct ArrowSpec {
  std::string name;
  int src = 0;
  int tgt = 0;
};

/// One summand of a relation; `arrows` are stored in application order
/// (first applied first), i.e. the reverse of the "b*a" display order.
struct RelationTerm {
  int coeff = 1;
  std::vector<int> arrows;
};

using Relation = std::vector<RelationTerm>;

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::vector<Relation> relations;
  int nilpotency = 2;  // all paths of length >= nilpotency lie in the ideal
};

/// Representative path of a basis element: source vertex plus arrows in
/// application order. Trivial paths have an empty arrow list.
struct PathRep {
  int source = 0;
  std::vector<int> arrows;
};

template <class S>
struct Algebra;
template <class S>
using AlgebraPtr = std::shared_ptr<const Algebra<S>>;

template <class S>
struct Algebra {
  std::string name;
  Index dim = 0;
  std::vector<std::string> basis_labels;
  // left_mult[i](k, j) = coefficient of b_k in b_i * b_j
  std::vector<Mat<S>> left_mult;
  Vec<S> unit;
  std::vector<Vec<S>> idempotents;  // complete set of primitive orthogonal idempotents
  std::vector<Vec<S>> generators;   // spanning generating set (idempotents included)
  std::optional<Subspace<S>> radical;
  // Quiver provenance, present when built from a presentation.
  std::optional<QuiverPresentation> presentation;
  std::vector<PathRep> basis_paths;

  Index simple_count() const { return static_cast<Index>(idempotents.size()); }
};

template <class S>
bool same_algebra(const AlgebraPtr<S>& a, const AlgebraPtr<S>& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->dim != b->dim) return false;
  for (Index i = 0; i < a->dim; ++i)
    if (!mat_equal(a->left_mult[static_cast<size_t>(i)], b->left_mult[static_cast<size_t>(i)]))
      return false;
  if (a->idempotents.size() != b->idempotents.size()) return false;
  for (size_t i = 0; i < a->idempotents.size(); ++i)
    if (!is_zero_vec<S>(Vec<S>(a->idempotents[i] - b->idempotents[i]))) return false;
  return true;
}

template <class S>
Vec<S> basis_element(const Algebra<S>& a, Index i) {
  Vec<S> v = Vec<S>::Zero(a.dim);
  v[i] = S(1);
  return v;
}

/// Matrix of left multiplication by the element x on the regular module.
template <class S>
Mat<S> left_mult_of(const Algebra<S>& a, const Vec<S>& x) {
  if (x.size() != a.dim) throw DimensionError("left_mult_of: element outside algebra");
  Mat<S> m = Mat<S>::Zero(a.dim, a.dim);
  for (Index i = 0; i < a.dim; ++i)
    if (x[i] != S(0)) m += a.left_mult[static_cast<size_t>(i)] * x[i];
  return m;
}

/// Matrix of right multiplication by x: y -> y * x.
template <class S>
Mat<S> right_mult_of(const Algebra<S>& a, const Vec<S>& x) {
  if (x.size() != a.dim) throw DimensionError("right_mult_of: element outside algebra");
  Mat<S> m(a.dim, a.dim);
  for (Index j = 0; j < a.dim; ++j) m.col(j) = a.left_mult[static_cast<size_t>(j)] * x;
  return m;
}

template <class S>
Vec<S> mul(const Algebra<S>& a, const Vec<S>& x, const Vec<S>& y) {
  return left_mult_of(a, x) * y;
}

template <class S>
void validate_algebra(const Algebra<S>& a) {
  const Index n = a.dim;
  if (static_cast<Index>(a.left_mult.size()) != n || a.unit.size() != n)
    throw ValidationError("algebra '" + a.name + "': inconsistent table sizes");
  // unit laws
  for (Index i = 0; i < n; ++i) {
    Vec<S> b = basis_element(a, i);
    if (!is_zero_vec<S>(Vec<S>(mul(a, a.unit, b) - b)) ||
        !is_zero_vec<S>(Vec<S>(mul(a, b, a.unit) - b)))
      throw ValidationError("algebra '" + a.name + "': unit law fails");
  }
  // associativity on basis triples: (b_i b_j) b_k == b_i (b_j b_k)
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vec<S> ij = a.left_mult[static_cast<size_t>(i)].col(j);
      for (Index k = 0; k < n; ++k) {
        Vec<S> jk = a.left_mult[static_cast<size_t>(j)].col(k);
        Vec<S> lhs = mul(a, ij, basis_element(a, k));
        Vec<S> rhs = mul(a, basis_element(a, i), jk);
        if (!is_zero_vec<S>(Vec<S>(lhs - rhs)))
          throw ValidationError("algebra '" + a.name + "': associativity fails");
      }
    }
  // idempotents: orthogonal, idempotent, summing to the unit
  Vec<S> total = Vec<S>::Zero(n);
  for (size_t i = 0; i < a.idempotents.size(); ++i) {
    for (size_t j = 0; j < a.idempotents.size(); ++j) {
      Vec<S> prod = mul(a, a.idempotents[i], a.idempotents[j]);
      Vec<S> expect = (i == j) ? a.idempotents[i] : Vec<S>(Vec<S>::Zero(n));
      if (!is_zero_vec<S>(Vec<S>(prod - expect)))
        throw ValidationError("algebra '" + a.name + "': idempotent laws fail");
    }
    total += a.idempotents[i];
  }
  if (!is_zero_vec<S>(Vec<S>(total - a.unit)))
    throw ValidationError("algebra '" + a.name + "': idempotents do not sum to 1");
}

// ---------------------------------------------------------------------------
// Ideals

template <class S>
struct Ideal {
  AlgebraPtr<S> alg;
  Subspace<S> space;

  Index dim() const { return space.dim(); }
};

template <class S>
bool same_ideal(const Ideal<S>& a, const Ideal<S>& b) {
  return same_algebra(a.alg, b.alg) && a.space == b.space;
}

/// Smallest two-sided ideal containing the given elements.
template <class S>
Ideal<S> ideal_from_generators(const AlgebraPtr<S>& alg, const std::vector<Vec<S>>& gens) {
  const Algebra<S>& a = *alg;
  for (const auto& g : gens)
    if (g.size() != a.dim) throw DimensionError("ideal_from_generators: element outside algebra");
  Subspace<S> space = Subspace<S>::from_vectors(gens, a.dim);
  for (;;) {
    std::vector<Vec<S>> next;
    for (Index r = 0; r < space.dim(); ++r) {
      Vec<S> v = space.basis_vector(r);
      next.push_back(v);
      for (const auto& g : a.generators) {
        next.push_back(mul(a, g, v));
        next.push_back(mul(a, v, g));
      }
    }
    Subspace<S> grown = Subspace<S>::from_vectors(next, a.dim);
    if (grown.dim() == space.dim()) break;
    space = std::move(grown);
  }
  return Ideal<S>{alg, std::move(space)};
}

template <class S>
Ideal<S> ideal_product(const Ideal<S>& i, const Ideal<S>& j) {
  if (!same_algebra(i.alg, j.alg)) throw DimensionError("ideal_product: parent mismatch");
  const Algebra<S>& a = *i.alg;
  std::vector<Vec<S>> prods;
  for (Index r = 0; r < i.space.dim(); ++r)
    for (Index s = 0; s < j.space.dim(); ++s)
      prods.push_back(mul(a, i.space.basis_vector(r), j.space.basis_vector(s)));
  return Ideal<S>{i.alg, Subspace<S>::from_vectors(prods, a.dim)};
}

template <class S>
Ideal<S> ideal_power(const Ideal<S>& i, int k) {
  if (k < 1) throw PreconditionError("ideal_power: exponent must be >= 1");
  Ideal<S> acc = i;
  for (int e = 1; e < k; ++e) acc = ideal_product(acc, i);
  return acc;
}

/// Largest idempotent ideal contained in I: the fixed point of k -> I^k.
template <class S>
Ideal<S> stable_part(const Ideal<S>& i) {
  Ideal<S> cur = i;
  for (;;) {
    Ideal<S> next = ideal_product(cur, i);
    if (next.space == cur.space) return cur;
    cur = std::move(next);
  }
}

template <class S>
bool is_nilpotent(const Ideal<S>& i) {
  return stable_part(i).dim() == 0;
}

template <class S>
bool is_idempotent(const Ideal<S>& i) {
  return ideal_product(i, i).space == i.space;
}

template <class S>
Ideal<S> zero_ideal(const AlgebraPtr<S>& alg) {
  return Ideal<S>{alg, Subspace<S>::zero(alg->dim)};
}

template <class S>
Ideal<S> full_ideal(const AlgebraPtr<S>& alg) {
  return Ideal<S>{alg, Subspace<S>::full(alg->dim)};
}

/// Number of primitive idempotents e with I * (A e) = A e.
template <class S>
Index stable_index(const Ideal<S>& i) {
  const Algebra<S>& a = *i.alg;
  Index count = 0;
  for (const auto& e : a.idempotents) {
    Mat<S> ae = right_mult_of(a, e);  // columns span A e
    const Index full = image(ae).dim();
    std::vector<Vec<S>> ie;
    for (Index r = 0; r < i.space.dim(); ++r) ie.push_back(mul(a, i.space.basis_vector(r), e));
    if (Subspace<S>::from_vectors(ie, a.dim).dim() == full) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Quotient and opposite algebras

template <class S>
struct QuotientAlgebra {
  AlgebraPtr<S> parent;
  AlgebraPtr<S> algebra;
  Mat<S> proj;     // parent -> quotient coordinates
  Mat<S> section;  // coset representatives back into the parent
};

template <class S>
QuotientAlgebra<S> quotient_algebra(const AlgebraPtr<S>& alg, const Ideal<S>& ideal) {
  if (!same_algebra(alg, ideal.alg)) throw DimensionError("quotient_algebra: parent mismatch");
  const Algebra<S>& a = *alg;
  auto qm = quotient_maps(ideal.space);
  const Index q = qm.proj.rows();

  auto out = std::make_shared<Algebra<S>>();
  out->name = a.name + "/I";
  out->dim = q;
  for (Index t = 0; t < q; ++t)
    out->basis_labels.push_back(
        a.basis_labels.empty() ? "q" + std::to_string(t)
                               : a.basis_labels[static_cast<size_t>(qm.free_cols[static_cast<size_t>(t)])]);
  out->left_mult.assign(static_cast<size_t>(q), Mat<S>::Zero(q, q));
  for (Index i = 0; i < q; ++i) {
    Vec<S> xi = qm.section.col(i);
    Mat<S> lx = left_mult_of(a, xi);
    for (Index j = 0; j < q; ++j)
      out->left_mult[static_cast<size_t>(i)].col(j) = qm.proj * (lx * Vec<S>(qm.section.col(j)));
  }
  out->unit = qm.proj * a.unit;
  for (const auto& e : a.idempotents) {
    Vec<S> img = qm.proj * e;
    if (!is_zero_vec<S>(img)) out->idempotents.push_back(img);
  }
  for (const auto& g : a.generators) {
    Vec<S> img = qm.proj * g;
    if (!is_zero_vec<S>(img)) out->generators.push_back(img);
  }
  if (a.radical) {
    Mat<S> rows_mat(a.radical->dim(), q);
    for (Index r = 0; r < a.radical->dim(); ++r)
      rows_mat.row(r) = (qm.proj * a.radical->basis_vector(r)).transpose();
    out->radical = Subspace<S>::from_rows(rows_mat);
  }
  if (q > 0) validate_algebra(*out);
  return QuotientAlgebra<S>{alg, out, qm.proj, qm.section};
}

template <class S>
AlgebraPtr<S> opposite_algebra(const AlgebraPtr<S>& alg) {
  const Algebra<S>& a = *alg;
  auto out = std::make_shared<Algebra<S>>();
  out->name = a.name + "^op";
  out->dim = a.dim;
  out->basis_labels = a.basis_labels;
  out->left_mult.assign(static_cast<size_t>(a.dim), Mat<S>::Zero(a.dim, a.dim));
  for (Index i = 0; i < a.dim; ++i)
    for (Index j = 0; j < a.dim; ++j)
      out->left_mult[static_cast<size_t>(i)].col(j) = a.left_mult[static_cast<size_t>(j)].col(i);
  out->unit = a.unit;
  out->idempotents = a.idempotents;
  out->generators = a.generators;
  out->radical = a.radical;
  if (a.presentation) {
    QuiverPresentation rev = *a.presentation;
    for (auto& arr : rev.arrows) std::swap(arr.src, arr.tgt);
    for (auto& rel : rev.relations)
      for (auto& term : rel) std::reverse(term.arrows.begin(), term.arrows.end());
    out->presentation = std::move(rev);
    out->basis_paths.reserve(a.basis_paths.size());
    for (const auto& p : a.basis_paths) {
      PathRep rp;
      rp.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
      int v = p.source;
      for (int arr : p.arrows) v = a.presentation->arrows[static_cast<size_t>(arr)].tgt;
      rp.source = v;
      out->basis_paths.push_back(std::move(rp));
    }
  }
  validate_algebra(*out);
  return out;
}

// ---------------------------------------------------------------------------
// Bound quiver algebra construction

inline int path_target(const QuiverPresentation& q, const PathRep& p) {
  int v = p.source;
  for (int a : p.arrows) v = q.arrows[static_cast<size_t>(a)].tgt;
  return v;
}

inline std::string path_label(const QuiverPresentation& q, const PathRep& p) {
  if (p.arrows.empty()) return "e" + q.vertices[static_cast<size_t>(p.source)];
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += q.arrows[static_cast<size_t>(*it)].name;
  }
  return s;
}

inline void validate_presentation(const QuiverPresentation& q) {
  const int nv = static_cast<int>(q.vertices.size());
  if (nv == 0) throw ValidationError("quiver: no vertices");
  if (q.nilpotency < 2) throw ValidationError("quiver: nilpotency bound must be >= 2");
  for (const auto& a : q.arrows)
    if (a.src < 0 || a.src >= nv || a.tgt < 0 || a.tgt >= nv)
      throw ValidationError("quiver: arrow '" + a.name + "' has endpoints outside the vertex set");
  for (const auto& rel : q.relations) {
    int src = -1, tgt = -1;
    bool first = true;
    for (const auto& term : rel) {
      if (term.arrows.size() < 2)
        throw ValidationError("quiver: relation term of length < 2 is not admissible");
      for (int a : term.arrows)
        if (a < 0 || a >= static_cast<int>(q.arrows.size()))
          throw ValidationError("quiver: relation references an unknown arrow");
      for (size_t k = 0; k + 1 < term.arrows.size(); ++k)
        if (q.arrows[static_cast<size_t>(term.arrows[k])].tgt !=
            q.arrows[static_cast<size_t>(term.arrows[k + 1])].src)
          throw ValidationError("quiver: relation term is not a composable path");
      const int s = q.arrows[static_cast<size_t>(term.arrows.front())].src;
      const int t = q.arrows[static_cast<size_t>(term.arrows.back())].tgt;
      if (first) {
        src = s;
        tgt = t;
        first = false;
      } else if (s != src || t != tgt) {
        throw ValidationError("quiver: relation mixes non-parallel paths");
      }
    }
  }
}

/// Basis = residue classes of paths of length < nilpotency modulo the
/// two-sided ideal generated by the relations. The construction builds the
/// truncated path algebra and quotients it by that ideal.
template <class S>
AlgebraPtr<S> build_algebra(const QuiverPresentation& q, const std::string& name) {
  validate_presentation(q);
  const int nv = static_cast<int>(q.vertices.size());

  // Paths of length < L, ordered by length then discovery order.
  std::vector<PathRep> paths;
  std::map<std::pair<int, std::vector<int>>, Index> index_of;
  for (int v = 0; v < nv; ++v) {
    paths.push_back(PathRep{v, {}});
    index_of[{v, {}}] = static_cast<Index>(paths.size()) - 1;
  }
  size_t level_begin = 0;
  for (int len = 1; len < q.nilpotency; ++len) {
    const size_t level_end = paths.size();
    for (size_t p = level_begin; p < level_end; ++p) {
      const int tgt = path_target(q, paths[p]);
      for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        if (q.arrows[static_cast<size_t>(a)].src != tgt) continue;
        PathRep np = paths[p];
        np.arrows.push_back(a);
        index_of[{np.source, np.arrows}] = static_cast<Index>(paths.size());
        paths.push_back(std::move(np));
      }
    }
    level_begin = level_end;
  }

  const Index n = static_cast<Index>(paths.size());
  auto trunc = std::make_shared<Algebra<S>>();
  trunc->name = name + "<trunc>";
  trunc->dim = n;
  for (const auto& p : paths) trunc->basis_labels.push_back(path_label(q, p));
  trunc->left_mult.assign(static_cast<size_t>(n), Mat<S>::Zero(n, n));
  for (Index i = 0; i < n; ++i) {
    const PathRep& pi = paths[static_cast<size_t>(i)];
    for (Index j = 0; j < n; ++j) {
      const PathRep& pj = paths[static_cast<size_t>(j)];
      // b_i * b_j applies p_j first; composable iff target(p_j) == source(p_i).
      if (path_target(q, pj) != pi.source) continue;
      if (static_cast<int>(pi.arrows.size() + pj.arrows.size()) >= q.nilpotency) continue;
      PathRep comp{pj.source, pj.arrows};
      comp.arrows.insert(comp.arrows.end(), pi.arrows.begin(), pi.arrows.end());
      trunc->left_mult[static_cast<size_t>(i)](index_of.at({comp.source, comp.arrows}), j) = S(1);
    }
  }
  trunc->unit = Vec<S>::Zero(n);
  for (int v = 0; v < nv; ++v) {
    Vec<S> e = basis_element(*trunc, index_of.at({v, {}}));
    trunc->idempotents.push_back(e);
    trunc->unit += e;
    trunc->generators.push_back(e);
  }
  for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
    trunc->generators.push_back(
        basis_element(*trunc, index_of.at({q.arrows[static_cast<size_t>(a)].src, {a}})));
  {
    Mat<S> rad_rows = Mat<S>::Zero(n - nv, n);
    Index r = 0;
    for (Index i = 0; i < n; ++i)
      if (!paths[static_cast<size_t>(i)].arrows.empty()) rad_rows(r++, i) = S(1);
    trunc->radical = Subspace<S>::from_rows(rad_rows);
  }
  validate_algebra(*trunc);

  std::vector<Vec<S>> rel_elems;
  for (const auto& rel : q.relations) {
    Vec<S> elem = Vec<S>::Zero(n);
    for (const auto& term : rel) {
      if (static_cast<int>(term.arrows.size()) >= q.nilpotency) continue;  // already zero
      PathRep p{q.arrows[static_cast<size_t>(term.arrows.front())].src, term.arrows};
      elem[index_of.at({p.source, p.arrows})] += S(term.coeff);
    }
    rel_elems.push_back(std::move(elem));
  }

  Ideal<S> rel_ideal = ideal_from_generators<S>(trunc, rel_elems);
  auto quo = quotient_algebra<S>(trunc, rel_ideal);
  auto out = std::make_shared<Algebra<S>>(*quo.algebra);
  out->name = name;
  out->presentation = q;
  {
    auto qm = quotient_maps(rel_ideal.space);
    for (Index f : qm.free_cols) out->basis_paths.push_back(paths[static_cast<size_t>(f)]);
  }
  if (static_cast<Index>(out->idempotents.size()) != nv)
    throw ValidationError("quiver '" + name + "': relations are not admissible (an idempotent died)");
  return out;
}

}  // namespace tautilt

// Finite-dimensional modules as action-matrix representations: Hom spaces,
// isomorphism testing, decomposition into indecomposables (Fitting's lemma
// with an exhaustive fallback and an explicit Unknown outcome), duals,
// projective covers, syzygies, transpose and the Auslander-Reiten translate.
//
// Right modules are left modules over the opposite algebra in disguise: a
// Module with side == Right keeps the original algebra as parent and its
// action matrices satisfy act(i) act(j) = act(b_j * b_i).
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tautilt/algebra.hpp"

namespace tautilt {

enum class Side { Left, Right };
enum class Check { Full, Light };
enum class Tri { Yes, No, Unknown };

template <class S>
struct Module {
  AlgebraPtr<S> alg;
  Side side = Side::Left;
  Index dim = 0;
  std::vector<Mat<S>> act;  // one matrix per algebra basis element

  static Module make(AlgebraPtr<S> alg, Side side, std::vector<Mat<S>> act,
                     Check check = Check::Full) {
    Module m;
    m.alg = std::move(alg);
    m.side = side;
    m.act = std::move(act);
    m.dim = m.act.empty() ? 0 : m.act.front().rows();
    m.validate(check);
    return m;
  }

  void validate(Check check) const {
    const Algebra<S>& a = *alg;
    if (static_cast<Index>(act.size()) != a.dim)
      throw ValidationError("module: one action matrix per basis element required");
    for (const auto& m : act)
      if (m.rows() != dim || m.cols() != dim)
        throw ValidationError("module: action matrices must be square of equal size");
    // rho(1) = identity
    Mat<S> one = Mat<S>::Zero(dim, dim);
    for (Index k = 0; k < a.dim; ++k)
      if (a.unit[k] != S(0)) one += act[static_cast<size_t>(k)] * a.unit[k];
    if (!mat_equal(one, Mat<S>(Mat<S>::Identity(dim, dim))))
      throw ValidationError("module: unit does not act as the identity");
    if (check == Check::Light) return;
    // rho(b_i) rho(b_j) = rho(b_i b_j), with the product reversed on the right side
    for (Index i = 0; i < a.dim; ++i)
      for (Index j = 0; j < a.dim; ++j) {
        Vec<S> c = (side == Side::Left) ? Vec<S>(a.left_mult[static_cast<size_t>(i)].col(j))
                                        : Vec<S>(a.left_mult[static_cast<size_t>(j)].col(i));
        Mat<S> expected = Mat<S>::Zero(dim, dim);
        for (Index k = 0; k < a.dim; ++k)
          if (c[k] != S(0)) expected += act[static_cast<size_t>(k)] * c[k];
        if (!mat_equal(Mat<S>(act[static_cast<size_t>(i)] * act[static_cast<size_t>(j)]), expected))
          throw ValidationError("module: action does not respect the structure constants at (" +
                                a.basis_labels[static_cast<size_t>(i)] + ", " +
                                a.basis_labels[static_cast<size_t>(j)] + ")");
      }
  }
};

template <class S>
bool same_parent(const Module<S>& m, const Module<S>& n) {
  return m.side == n.side && same_algebra(m.alg, n.alg);
}

/// Action of the algebra element w: for left modules the matrix of w ., for
/// right modules the matrix of . w.
template <class S>
Mat<S> action_of_element(const Module<S>& m, const Vec<S>& w) {
  if (w.size() != m.alg->dim) throw DimensionError("action_of_element: element outside algebra");
  Mat<S> out = Mat<S>::Zero(m.dim, m.dim);
  for (Index k = 0; k < w.size(); ++k)
    if (w[k] != S(0)) out += m.act[static_cast<size_t>(k)] * w[k];
  return out;
}

template <class S>
Module<S> zero_module(const AlgebraPtr<S>& alg, Side side = Side::Left) {
  std::vector<Mat<S>> act(static_cast<size_t>(alg->dim), Mat<S>(0, 0));
  return Module<S>::make(alg, side, std::move(act), Check::Light);
}

template <class S>
Module<S> regular_module(const AlgebraPtr<S>& alg, Side side = Side::Left) {
  std::vector<Mat<S>> act;
  act.reserve(static_cast<size_t>(alg->dim));
  for (Index i = 0; i < alg->dim; ++i) {
    if (side == Side::Left)
      act.push_back(alg->left_mult[static_cast<size_t>(i)]);
    else
      act.push_back(right_mult_of(*alg, basis_element(*alg, i)));
  }
  return Module<S>::make(alg, side, std::move(act), Check::Light);
}

/// Matlis dual: transposes every action matrix and flips the side.
template <class S>
Module<S> dual(const Module<S>& m) {
  std::vector<Mat<S>> act;
  act.reserve(m.act.size());
  for (const auto& a : m.act) act.push_back(a.transpose());
  return Module<S>::make(m.alg, m.side == Side::Left ? Side::Right : Side::Left, std::move(act),
                         Check::Light);
}

// ---------------------------------------------------------------------------
// Submodules, quotients, direct sums

template <class S>
struct SubmoduleResult {
  Module<S> mod;
  Mat<S> inclusion;  // parent.dim x sub.dim
};

template <class S>
bool is_invariant(const Module<S>& m, const Subspace<S>& space) {
  for (const auto& g : m.alg->generators) {
    Mat<S> ga = action_of_element(m, g);
    for (Index r = 0; r < space.dim(); ++r)
      if (!space.contains(Vec<S>(ga * space.basis_vector(r)))) return false;
  }
  return true;
}

template <class S>
SubmoduleResult<S> submodule(const Module<S>& m, const Subspace<S>& space) {
  if (space.ambient() != m.dim) throw DimensionError("submodule: ambient mismatch");
  if (!is_invariant(m, space)) throw DimensionError("submodule: subspace is not invariant");
  const Index k = space.dim();
  Mat<S> incl = space.basis().transpose();
  std::vector<Mat<S>> act;
  act.reserve(m.act.size());
  for (const auto& a : m.act) {
    Mat<S> img = a * incl;  // columns stay in the subspace; coords = pivot rows
    Mat<S> sub(k, k);
    for (Index r = 0; r < k; ++r) sub.row(r) = img.row(space.pivots()[static_cast<size_t>(r)]);
    act.push_back(std::move(sub));
  }
  return SubmoduleResult<S>{Module<S>::make(m.alg, m.side, std::move(act), Check::Light),
                            std::move(incl)};
}

template <class S>
struct QuotientModuleResult {
  Module<S> mod;
  Mat<S> projection;  // quo.dim x parent.dim
  Mat<S> section;     // parent.dim x quo.dim
};

template <class S>
QuotientModuleResult<S> quotient_module(const Module<S>& m, const Subspace<S>& space) {
  if (space.ambient() != m.dim) throw DimensionError("quotient_module: ambient mismatch");
  if (!is_invariant(m, space)) throw DimensionError("quotient_module: subspace is not invariant");
  auto qm = quotient_maps(space);
  std::vector<Mat<S>> act;
  act.reserve(m.act.size());
  for (const auto& a : m.act) act.push_back(Mat<S>(qm.proj * a * qm.section));
  return QuotientModuleResult<S>{Module<S>::make(m.alg, m.side, std::move(act), Check::Light),
                                 std::move(qm.proj), std::move(qm.section)};
}

/// Smallest submodule containing the given vectors: the span of all basis
/// translates (one pass suffices since the span of A.v is already invariant).
template <class S>
Subspace<S> module_generated_by(const Module<S>& m, const std::vector<Vec<S>>& vectors) {
  std::vector<Vec<S>> rows;
  for (const auto& v : vectors) {
    if (v.size() != m.dim) throw DimensionError("module_generated_by: vector outside module");
    for (Index k = 0; k < m.alg->dim; ++k) rows.push_back(m.act[static_cast<size_t>(k)] * v);
  }
  return Subspace<S>::from_vectors(rows, m.dim);
}

template <class S>
struct DirectSum {
  Module<S> mod;
  std::vector<Index> offsets;
};

template <class S>
DirectSum<S> direct_sum(const AlgebraPtr<S>& alg, Side side, const std::vector<Module<S>>& parts) {
  Index total = 0;
  std::vector<Index> offsets;
  for (const auto& p : parts) {
    if (!same_algebra(p.alg, alg) || p.side != side)
      throw DimensionError("direct_sum: parent mismatch");
    offsets.push_back(total);
    total += p.dim;
  }
  std::vector<Mat<S>> act(static_cast<size_t>(alg->dim), Mat<S>::Zero(total, total));
  for (size_t pi = 0; pi < parts.size(); ++pi)
    for (Index k = 0; k < alg->dim; ++k)
      act[static_cast<size_t>(k)].block(offsets[pi], offsets[pi], parts[pi].dim, parts[pi].dim) =
          parts[pi].act[static_cast<size_t>(k)];
  return DirectSum<S>{Module<S>::make(alg, side, std::move(act), Check::Light),
                      std::move(offsets)};
}

// ---------------------------------------------------------------------------
// Hom spaces

/// Basis of the intertwiner space Hom(M, N): matrices F with
/// F . act_M(g) = act_N(g) . F for every algebra generator g.
template <class S>
std::vector<Mat<S>> hom_space(const Module<S>& m, const Module<S>& n) {
  if (!same_parent(m, n)) throw DimensionError("hom_space: parent mismatch");
  const Index dm = m.dim, dn = n.dim;
  if (dm == 0 || dn == 0) return {};
  const auto& gens = m.alg->generators;
  Mat<S> sys = Mat<S>::Zero(static_cast<Index>(gens.size()) * dn * dm, dn * dm);
  Index row = 0;
  for (const auto& g : gens) {
    Mat<S> ag = action_of_element(n, g);
    Mat<S> bg = action_of_element(m, g);
    // equation (i, j): sum_k ag(i,k) F(k,j) - sum_l F(i,l) bg(l,j) = 0
    for (Index i = 0; i < dn; ++i)
      for (Index j = 0; j < dm; ++j) {
        for (Index k = 0; k < dn; ++k)
          if (ag(i, k) != S(0)) sys(row, k * dm + j) += ag(i, k);
        for (Index l = 0; l < dm; ++l)
          if (bg(l, j) != S(0)) sys(row, i * dm + l) -= bg(l, j);
        ++row;
      }
  }
  Subspace<S> sols = kernel(sys);
  std::vector<Mat<S>> basis;
  basis.reserve(static_cast<size_t>(sols.dim()));
  for (Index r = 0; r < sols.dim(); ++r) basis.push_back(unvec(sols.basis_vector(r), dn, dm));
  return basis;
}

template <class S>
Index hom_dim(const Module<S>& m, const Module<S>& n) {
  return static_cast<Index>(hom_space(m, n).size());
}

// ---------------------------------------------------------------------------
// Standard modules

template <class S>
struct ProjectiveModule {
  Module<S> mod;
  int vertex = 0;
  Mat<S> embed;      // alg.dim x mod.dim: basis vectors as algebra elements
  Vec<S> generator;  // coordinates of e_vertex inside mod
};

/// Indecomposable projectives: A e_i for left modules, e_i A for right ones.
template <class S>
std::vector<ProjectiveModule<S>> projective_modules(const AlgebraPtr<S>& alg,
                                                    Side side = Side::Left) {
  const Algebra<S>& a = *alg;
  Module<S> reg = regular_module(alg, side);
  std::vector<ProjectiveModule<S>> out;
  for (size_t v = 0; v < a.idempotents.size(); ++v) {
    const Vec<S>& e = a.idempotents[v];
    Mat<S> span_cols =
        (side == Side::Left) ? right_mult_of(a, e) : left_mult_of(a, e);  // columns span Ae / eA
    Subspace<S> space = image(span_cols);
    auto sub = submodule(reg, space);
    ProjectiveModule<S> p;
    p.mod = std::move(sub.mod);
    p.vertex = static_cast<int>(v);
    p.embed = std::move(sub.inclusion);
    p.generator = space.coords(e);
    out.push_back(std::move(p));
  }
  return out;
}

template <class S>
Subspace<S> radical_submodule(const Module<S>& m) {
  if (!m.alg->radical)
    throw UnsupportedAlgebraError("radical unavailable for algebra '" + m.alg->name + "'");
  const Subspace<S>& rad = *m.alg->radical;
  std::vector<Vec<S>> rows;
  for (Index r = 0; r < rad.dim(); ++r) {
    Mat<S> ra = action_of_element(m, rad.basis_vector(r));
    for (Index j = 0; j < m.dim; ++j) rows.push_back(ra.col(j));
  }
  return Subspace<S>::from_vectors(rows, m.dim);
}

template <class S>
QuotientModuleResult<S> top_module(const Module<S>& m) {
  return quotient_module(m, radical_submodule(m));
}

template <class S>
std::vector<Module<S>> simple_modules(const AlgebraPtr<S>& alg, Side side = Side::Left) {
  std::vector<Module<S>> out;
  for (auto& p : projective_modules(alg, side)) out.push_back(top_module(p.mod).mod);
  return out;
}

template <class S>
std::vector<Module<S>> injective_modules(const AlgebraPtr<S>& alg, Side side = Side::Left) {
  std::vector<Module<S>> out;
  for (auto& p :
       projective_modules(alg, side == Side::Left ? Side::Right : Side::Left))
    out.push_back(dual(p.mod));
  return out;
}

// ---------------------------------------------------------------------------
// Projective covers, syzygies, presentations

template <class S>
struct Cover {
  Module<S> proj;                 // P(M)
  std::vector<int> copy_vertex;   // vertex per indecomposable copy
  std::vector<Index> copy_offset; // block offset per copy
  Mat<S> map;                     // M.dim x P.dim, onto M
};

/// Minimal projective cover, assembled from a basis of top(M).
template <class S>
Cover<S> projective_cover(const Module<S>& m,
                          const std::vector<ProjectiveModule<S>>& projs) {
  auto top = top_module(m);
  std::vector<int> copy_vertex;
  std::vector<Vec<S>> copy_target;  // generator image in M per copy
  for (size_t v = 0; v < m.alg->idempotents.size(); ++v) {
    Mat<S> etop = action_of_element(top.mod, m.alg->idempotents[v]);
    Subspace<S> part = image(etop);
    for (Index r = 0; r < part.dim(); ++r) {
      // lift the top basis vector through the projection, inside the e_v part
      auto x = solve(top.projection, Mat<S>(part.basis_vector(r)));
      if (!x) throw ValidationError("projective_cover: top projection not surjective");
      Vec<S> lift = action_of_element(m, m.alg->idempotents[v]) * Vec<S>(x->col(0));
      copy_vertex.push_back(static_cast<int>(v));
      copy_target.push_back(std::move(lift));
    }
  }
  std::vector<Module<S>> parts;
  for (int v : copy_vertex) parts.push_back(projs[static_cast<size_t>(v)].mod);
  auto ds = direct_sum(m.alg, m.side, parts);
  Mat<S> map = Mat<S>::Zero(m.dim, ds.mod.dim);
  for (size_t c = 0; c < copy_vertex.size(); ++c) {
    const auto& p = projs[static_cast<size_t>(copy_vertex[c])];
    for (Index j = 0; j < p.mod.dim; ++j)
      map.col(ds.offsets[c] + j) = action_of_element(m, Vec<S>(p.embed.col(j))) * copy_target[c];
  }
  if (image(map).dim() != m.dim) throw ValidationError("projective_cover: map not surjective");
  return Cover<S>{std::move(ds.mod), std::move(copy_vertex), std::move(ds.offsets),
                  std::move(map)};
}

template <class S>
Cover<S> projective_cover(const Module<S>& m) {
  return projective_cover(m, projective_modules(m.alg, m.side));
}

template <class S>
SubmoduleResult<S> syzygy_with_inclusion(const Module<S>& m,
                                         const std::vector<ProjectiveModule<S>>& projs) {
  auto cover = projective_cover(m, projs);
  return submodule(cover.proj, kernel(cover.map));
}

template <class S>
Module<S> syzygy(const Module<S>& m) {
  return syzygy_with_inclusion(m, projective_modules(m.alg, m.side)).mod;
}

template <class S>
bool is_projective(const Module<S>& m) {
  if (m.dim == 0) return true;
  return syzygy(m).dim == 0;
}

template <class S>
struct ProjPresentation {
  Cover<S> p0;       // P0 -> M
  Cover<S> p1;       // P1 -> Omega(M), as a cover of the syzygy
  Mat<S> d;          // P0.dim x P1.dim, the composite P1 -> Omega(M) -> P0
  Module<S> omega;   // the syzygy itself
};

/// Minimal projective presentation P1 -> P0 -> M -> 0.
template <class S>
ProjPresentation<S> min_proj_presentation(const Module<S>& m,
                                          const std::vector<ProjectiveModule<S>>& projs) {
  ProjPresentation<S> out{projective_cover(m, projs), Cover<S>{}, Mat<S>(), Module<S>{}};
  auto sz = submodule(out.p0.proj, kernel(out.p0.map));
  out.omega = sz.mod;
  out.p1 = projective_cover(sz.mod, projs);
  out.d = sz.inclusion * out.p1.map;
  return out;
}

template <class S>
ProjPresentation<S> min_proj_presentation(const Module<S>& m) {
  return min_proj_presentation(m, projective_modules(m.alg, m.side));
}

// ---------------------------------------------------------------------------
// Transpose and the Auslander-Reiten translate

namespace detail {

/// Coordinates of `target` in the span of `basis` (each a matrix of the same
/// shape); throws if outside the span.
template <class S>
Vec<S> express_in_matrix_basis(const std::vector<Mat<S>>& basis, const Mat<S>& target) {
  const Index n = static_cast<Index>(basis.size());
  if (n == 0) {
    if (!is_zero_mat(target))
      throw DimensionError("express_in_matrix_basis: nonzero target, empty basis");
    return Vec<S>(0);
  }
  Mat<S> sys(basis.front().rows() * basis.front().cols(), n);
  for (Index c = 0; c < n; ++c) sys.col(c) = vec_of(basis[static_cast<size_t>(c)]);
  auto x = solve(sys, Mat<S>(vec_of(target)));
  if (!x) throw DimensionError("express_in_matrix_basis: target outside span");
  return x->col(0);
}

}  // namespace detail

/// Hom(P, A) for a left module P, as a right module: basis of intertwiners
/// into the left regular module, with (F . a) = right_mult(a) o F.
template <class S>
Module<S> hom_into_regular(const Module<S>& p, std::vector<Mat<S>>* basis_out = nullptr) {
  if (p.side != Side::Left) throw PreconditionError("hom_into_regular: left modules only");
  Module<S> reg = regular_module(p.alg, Side::Left);
  std::vector<Mat<S>> basis = hom_space(p, reg);
  const Index h = static_cast<Index>(basis.size());
  std::vector<Mat<S>> act(static_cast<size_t>(p.alg->dim), Mat<S>::Zero(h, h));
  for (Index i = 0; i < p.alg->dim; ++i) {
    Mat<S> ra = right_mult_of(*p.alg, basis_element(*p.alg, i));
    for (Index u = 0; u < h; ++u)
      act[static_cast<size_t>(i)].col(u) =
          detail::express_in_matrix_basis(basis, Mat<S>(ra * basis[static_cast<size_t>(u)]));
  }
  if (basis_out) *basis_out = std::move(basis);
  return Module<S>::make(p.alg, Side::Right, std::move(act), Check::Light);
}

/// Auslander-Bridger transpose from the minimal projective presentation:
/// the cokernel of Hom(P0, A) -> Hom(P1, A), a right module.
template <class S>
Module<S> transpose_module(const Module<S>& m) {
  if (m.side != Side::Left) throw PreconditionError("transpose_module: left modules only");
  auto pres = min_proj_presentation(m);
  std::vector<Mat<S>> basis0, basis1;
  Module<S> h0 = hom_into_regular(pres.p0.proj, &basis0);
  Module<S> h1 = hom_into_regular(pres.p1.proj, &basis1);
  // dstar: F -> F o d in the chosen bases
  Mat<S> dstar = Mat<S>::Zero(h1.dim, h0.dim);
  for (Index u = 0; u < h0.dim; ++u)
    dstar.col(u) =
        detail::express_in_matrix_basis(basis1, Mat<S>(basis0[static_cast<size_t>(u)] * pres.d));
  Subspace<S> img = image(dstar);
  return quotient_module(h1, img).mod;
}

/// tau = D Tr on a minimal presentation; vanishes exactly on projectives.
template <class S>
Module<S> tau(const Module<S>& m) {
  return dual(transpose_module(m));
}

// ---------------------------------------------------------------------------
// Isomorphism testing and decomposition

struct SearchOptions {
  std::uint64_t seed = 1;
  int samples = 200;          // randomized budget before reporting Unknown
  unsigned exhaust_bits = 16; // enumerate coefficient space when p^h <= 2^bits
};

namespace detail {

inline bool exhaustible(unsigned p, size_t h, unsigned bits) {
  double cost = 1.0;
  for (size_t i = 0; i < h; ++i) {
    cost *= p;
    if (cost > static_cast<double>(1ull << bits)) return false;
  }
  return true;
}

template <class S>
Mat<S> combo(const std::vector<Mat<S>>& basis, const std::vector<unsigned>& coeff) {
  Mat<S> f = Mat<S>::Zero(basis.front().rows(), basis.front().cols());
  for (size_t i = 0; i < basis.size(); ++i)
    if (coeff[i]) f += basis[i] * S(coeff[i]);
  return f;
}

template <class S, class Fn>
bool for_each_combo(const std::vector<Mat<S>>& basis, Fn&& fn) {
  std::vector<unsigned> coeff(basis.size(), 0);
  for (;;) {
    size_t at = 0;
    while (at < coeff.size() && coeff[at] + 1 == S::modulus) coeff[at++] = 0;
    if (at == coeff.size()) return false;
    ++coeff[at];
    if (fn(combo(basis, coeff))) return true;
  }
}

}  // namespace detail

/// Deterministic isomorphism test for modules already certified
/// indecomposable: some pairwise composite of Hom bases is invertible iff the
/// modules are isomorphic (local endomorphism rings).
template <class S>
bool indec_isomorphic(const Module<S>& x, const Module<S>& y) {
  if (x.dim != y.dim) return false;
  if (x.dim == 0) return true;
  auto fwd = hom_space(x, y);
  if (fwd.empty()) return false;
  auto bwd = hom_space(y, x);
  for (const auto& g : bwd)
    for (const auto& f : fwd)
      if (is_invertible(Mat<S>(g * f))) return true;
  return false;
}

template <class S>
struct Decomposition {
  std::vector<std::pair<Module<S>, int>> summands;  // representative, multiplicity
  bool certified = true;

  Index iso_class_count() const { return static_cast<Index>(summands.size()); }
  int total_multiplicity() const {
    int t = 0;
    for (const auto& s : summands) t += s.second;
    return t;
  }
};

namespace detail {

template <class S>
std::optional<std::pair<Module<S>, Module<S>>> fitting_split(const Module<S>& m,
                                                             const Mat<S>& f) {
  Mat<S> g = f;
  Index r = rank_of(g);
  for (;;) {
    Mat<S> g2 = g * g;
    Index r2 = rank_of(g2);
    if (r2 == r) break;
    g = std::move(g2);
    r = r2;
  }
  if (r == 0 || r == m.dim) return std::nullopt;
  Subspace<S> ker = kernel(g);
  Subspace<S> img = image(g);
  return std::make_pair(submodule(m, ker).mod, submodule(m, img).mod);
}

// Splits M or certifies it indecomposable; Unknown only past every budget.
template <class S>
void decompose_rec(const Module<S>& m, const SearchOptions& opts, Rng& rng,
                   std::vector<Module<S>>& atoms, bool& certified) {
  if (m.dim == 0) return;
  std::vector<Mat<S>> endos = hom_space(m, m);
  const size_t h = endos.size();
  auto try_split = [&](const Mat<S>& f) -> bool {
    auto split = fitting_split(m, f);
    if (!split) return false;
    decompose_rec(split->first, opts, rng, atoms, certified);
    decompose_rec(split->second, opts, rng, atoms, certified);
    return true;
  };
  if (h == 1) {  // End = F_p id: local
    atoms.push_back(m);
    return;
  }
  for (const auto& f : endos)
    if (try_split(f)) return;
  for (size_t i = 0; i < h; ++i)
    for (size_t j = 0; j < h; ++j)
      if (try_split(Mat<S>(endos[i] * endos[j]))) return;
  if (detail::exhaustible(S::modulus, h, opts.exhaust_bits)) {
    bool found = detail::for_each_combo<S>(endos, [&](const Mat<S>& f) { return try_split(f); });
    if (!found) atoms.push_back(m);  // every endo invertible or nilpotent: End local
    return;
  }
  for (int t = 0; t < opts.samples; ++t) {
    std::vector<unsigned> coeff(h);
    for (auto& c : coeff) c = static_cast<unsigned>(rng.below(S::modulus));
    if (try_split(detail::combo(endos, coeff))) return;
  }
  certified = false;  // budget exhausted without a verdict
  atoms.push_back(m);
}

}  // namespace detail

/// Split into indecomposables via Fitting decompositions of sampled
/// endomorphisms; exhaustive over the endomorphism ring when small enough,
/// otherwise explicit Unknown (certified = false) rather than a silent guess.
template <class S>
Decomposition<S> decompose(const Module<S>& m, const SearchOptions& opts = {}) {
  Rng rng(opts.seed);
  std::vector<Module<S>> atoms;
  Decomposition<S> out;
  detail::decompose_rec(m, opts, rng, atoms, out.certified);
  for (auto& a : atoms) {
    bool merged = false;
    if (out.certified) {  // uncertified atoms are never merged into classes
      for (auto& [rep, mult] : out.summands)
        if (indec_isomorphic(rep, a)) {
          ++mult;
          merged = true;
          break;
        }
    }
    if (!merged) out.summands.emplace_back(std::move(a), 1);
  }
  return out;
}

/// |M|: the number of isomorphism classes of indecomposable summands, when
/// the decomposition could be certified.
template <class S>
std::optional<Index> count_summands(const Module<S>& m, const SearchOptions& opts = {}) {
  auto dec = decompose(m, opts);
  if (!dec.certified) return std::nullopt;
  return dec.iso_class_count();
}

template <class S>
Module<S> make_basic(const Module<S>& m, const SearchOptions& opts = {}) {
  auto dec = decompose(m, opts);
  if (!dec.certified) throw PreconditionError("make_basic: decomposition not certified");
  std::vector<Module<S>> parts;
  for (auto& [rep, mult] : dec.summands) parts.push_back(rep);
  return direct_sum(m.alg, m.side, parts).mod;
}

/// Isomorphism test with the Unknown discipline: decomposition matching when
/// both sides certify, otherwise exhaustive/sampled search for an invertible
/// element of Hom(M, N).
template <class S>
Tri is_isomorphic(const Module<S>& m, const Module<S>& n, const SearchOptions& opts = {}) {
  if (!same_parent(m, n)) throw DimensionError("is_isomorphic: parent mismatch");
  if (m.dim != n.dim) return Tri::No;
  if (m.dim == 0) return Tri::Yes;
  for (const auto& e : m.alg->idempotents)
    if (rank_of(action_of_element(m, e)) != rank_of(action_of_element(n, e))) return Tri::No;
  auto dm = decompose(m, opts);
  auto dn = decompose(n, opts);
  if (dm.certified && dn.certified) {
    if (dm.summands.size() != dn.summands.size()) return Tri::No;
    std::vector<bool> used(dn.summands.size(), false);
    for (const auto& [rep, mult] : dm.summands) {
      bool matched = false;
      for (size_t j = 0; j < dn.summands.size(); ++j) {
        if (used[j] || dn.summands[j].second != mult) continue;
        if (indec_isomorphic(rep, dn.summands[j].first)) {
          used[j] = true;
          matched = true;
          break;
        }
      }
      if (!matched) return Tri::No;
    }
    return Tri::Yes;
  }
  // fallback: search Hom(M, N) for an invertible element
  auto homs = hom_space(m, n);
  if (homs.empty()) return Tri::No;
  if (detail::exhaustible(S::modulus, homs.size(), opts.exhaust_bits)) {
    bool found = detail::for_each_combo<S>(homs, [&](const Mat<S>& f) { return is_invertible(f); });
    return found ? Tri::Yes : Tri::No;
  }
  Rng rng(opts.seed);
  for (int t = 0; t < opts.samples; ++t) {
    std::vector<unsigned> coeff(homs.size());
    for (auto& c : coeff) c = static_cast<unsigned>(rng.below(S::modulus));
    if (is_invertible(detail::combo(homs, coeff))) return Tri::Yes;
  }
  return Tri::Unknown;
}

// ---------------------------------------------------------------------------
// Quiver representations and quotient-algebra transport

/// Module of a quiver-presented algebra from per-vertex dimensions and one
/// matrix per arrow (rows = target dimension, columns = source dimension).
/// The action of a basis path is the product of its arrow blocks.
template <class S>
Module<S> module_from_representation(const AlgebraPtr<S>& alg, const std::vector<Index>& vdims,
                                     const std::vector<Mat<S>>& arrow_mats,
                                     Check check = Check::Full) {
  if (!alg->presentation)
    throw UnsupportedAlgebraError("module_from_representation: algebra has no quiver presentation");
  const QuiverPresentation& q = *alg->presentation;
  if (vdims.size() != q.vertices.size() || arrow_mats.size() != q.arrows.size())
    throw DimensionError("module_from_representation: dims/matrices count mismatch");
  std::vector<Index> offset(vdims.size() + 1, 0);
  for (size_t v = 0; v < vdims.size(); ++v) offset[v + 1] = offset[v] + vdims[v];
  const Index total = offset.back();
  for (size_t a = 0; a < arrow_mats.size(); ++a)
    if (arrow_mats[a].rows() != vdims[static_cast<size_t>(q.arrows[a].tgt)] ||
        arrow_mats[a].cols() != vdims[static_cast<size_t>(q.arrows[a].src)])
      throw DimensionError("module_from_representation: arrow '" + q.arrows[a].name +
                           "' has wrong shape");
  std::vector<Mat<S>> act;
  act.reserve(alg->basis_paths.size());
  for (const auto& path : alg->basis_paths) {
    Mat<S> full = Mat<S>::Zero(total, total);
    int src = path.source;
    if (path.arrows.empty()) {
      full.block(offset[static_cast<size_t>(src)], offset[static_cast<size_t>(src)],
                 vdims[static_cast<size_t>(src)], vdims[static_cast<size_t>(src)]) =
          Mat<S>::Identity(vdims[static_cast<size_t>(src)], vdims[static_cast<size_t>(src)]);
    } else {
      Mat<S> block = arrow_mats[static_cast<size_t>(path.arrows.front())];
      for (size_t k = 1; k < path.arrows.size(); ++k)
        block = arrow_mats[static_cast<size_t>(path.arrows[k])] * block;
      const int tgt = path_target(q, path);
      full.block(offset[static_cast<size_t>(tgt)], offset[static_cast<size_t>(src)], block.rows(),
                 block.cols()) = block;
    }
    act.push_back(std::move(full));
  }
  return Module<S>::make(alg, Side::Left, std::move(act), check);
}

/// Per-vertex dimension vector (ranks of the idempotent actions).
template <class S>
std::vector<Index> dimension_vector(const Module<S>& m) {
  std::vector<Index> out;
  for (const auto& e : m.alg->idempotents) out.push_back(rank_of(action_of_element(m, e)));
  return out;
}

/// View a module killed by the quotient's ideal as a module over A/I.
template <class S>
Module<S> restrict_to_quotient(const Module<S>& m, const QuotientAlgebra<S>& q) {
  if (!same_algebra(m.alg, q.parent)) throw DimensionError("restrict_to_quotient: parent mismatch");
  // well-definedness: the ideal must act as zero
  for (Index i = 0; i < q.parent->dim; ++i) {
    Vec<S> b = basis_element(*q.parent, i);
    Vec<S> residue = b - q.section * (q.proj * b);
    if (!is_zero_mat(Mat<S>(action_of_element(m, residue))))
      throw PreconditionError("restrict_to_quotient: ideal does not annihilate the module");
  }
  std::vector<Mat<S>> act;
  for (Index t = 0; t < q.algebra->dim; ++t)
    act.push_back(action_of_element(m, Vec<S>(q.section.col(t))));
  return Module<S>::make(q.algebra, m.side, std::move(act), Check::Light);
}

/// Inflate a module over A/I to a module over A along the projection.
template <class S>
Module<S> inflate_from_quotient(const Module<S>& m, const QuotientAlgebra<S>& q) {
  if (!same_algebra(m.alg, q.algebra)) throw DimensionError("inflate_from_quotient: parent mismatch");
  std::vector<Mat<S>> act;
  for (Index i = 0; i < q.parent->dim; ++i)
    act.push_back(action_of_element(m, Vec<S>(q.proj.col(i))));
  return Module<S>::make(q.parent, m.side, std::move(act), Check::Light);
}

// ---------------------------------------------------------------------------
// Trace ideal

/// tr(P) = sum of images of all morphisms P -> A, for projective P.
template <class S>
Ideal<S> trace_ideal(const Module<S>& p) {
  if (p.side != Side::Left) throw PreconditionError("trace_ideal: left modules only");
  if (!is_projective(p)) throw PreconditionError("trace_ideal: module is not projective");
  Module<S> reg = regular_module(p.alg, Side::Left);
  std::vector<Vec<S>> rows;
  for (const auto& f : hom_space(p, reg))
    for (Index j = 0; j < f.cols(); ++j) rows.push_back(f.col(j));
  Subspace<S> space = Subspace<S>::from_vectors(rows, p.alg->dim);
  Ideal<S> out{p.alg, std::move(space)};
  return out;
}

}  // namespace tautilt

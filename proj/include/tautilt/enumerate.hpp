// Exhaustive enumeration of indecomposable modules up to isomorphism, the
// independent oracle behind the verification suites. Candidates are arrow
// tuples in radical-adapted layered form: coordinates are graded by (vertex,
// radical layer), arrows map layer k into layers > k, and the layer sizes
// must match the actual radical filtration. Every module admits such an
// adapted basis, so the scan is complete; the layering keeps the search far
// below the naive p^(D^2 * arrows) while staying exhaustive.
#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tautilt/classify.hpp"

namespace tautilt {

struct EnumerationOptions {
  double cost_limit = 5e7;  // feasibility guard on the layered candidate count
  SearchOptions search;
};

template <class S>
struct EnumeratedPool {
  std::vector<Module<S>> modules;  // indecomposables up to isomorphism
  Index max_dim = 0;
  long long candidates_scanned = 0;
};

namespace detail {

inline void weak_compositions(int total, int slots, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(static_cast<size_t>(slots), 0);
  // odometer over compositions of `total` into `slots` nonnegative parts
  std::function<void(int, int)> rec = [&](int at, int left) {
    if (at == slots - 1) {
      cur[static_cast<size_t>(at)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<size_t>(at)] = v;
      rec(at + 1, left - v);
    }
  };
  if (slots > 0) rec(0, total);
}

/// Free-entry positions of one arrow block matrix under a layering.
struct LayeredArrowShape {
  std::vector<std::pair<Index, Index>> free_entries;  // (row, col) in the arrow matrix
  Index rows = 0, cols = 0;
};

}  // namespace detail

/// All indecomposable left modules of total dimension <= max_dim, up to
/// isomorphism, by exhaustive layered enumeration. Requires a quiver
/// presentation; refuses infeasible inputs with a cost estimate.
template <class S>
EnumeratedPool<S> enumerate_modules(const AlgebraPtr<S>& alg, Index max_dim,
                                    const EnumerationOptions& opts = {}) {
  if (!alg->presentation)
    throw UnsupportedAlgebraError("enumerate_modules: algebra has no quiver presentation");
  const QuiverPresentation& q = *alg->presentation;
  const int nv = static_cast<int>(q.vertices.size());
  const int na = static_cast<int>(q.arrows.size());
  const int slots = q.nilpotency;
  const unsigned p = S::modulus;

  // enumerate (dim vector, per-vertex layering) shapes with their costs
  struct Shape {
    std::vector<Index> vdims;
    std::vector<std::vector<int>> layers;  // layers[v][k]
    std::vector<detail::LayeredArrowShape> arrows;
    double cost = 1.0;
  };
  std::vector<Shape> shapes;
  double total_cost = 0.0;

  std::vector<std::vector<std::vector<int>>> comps_by_dim(static_cast<size_t>(max_dim) + 1);
  for (Index d = 0; d <= max_dim; ++d)
    detail::weak_compositions(static_cast<int>(d), slots, comps_by_dim[static_cast<size_t>(d)]);

  std::vector<Index> vdims(static_cast<size_t>(nv), 0);
  std::function<void(int, Index)> dim_rec = [&](int v, Index left) {
    if (v == nv) {
      Index total = 0;
      for (Index dv : vdims) total += dv;
      if (total == 0) return;
      // all layer assignments for this dimension vector
      std::vector<size_t> pick(static_cast<size_t>(nv), 0);
      std::function<void(int)> layer_rec = [&](int w) {
        if (w == nv) {
          Shape sh;
          sh.vdims = vdims;
          for (int u = 0; u < nv; ++u)
            sh.layers.push_back(
                comps_by_dim[static_cast<size_t>(vdims[static_cast<size_t>(u)])][pick[static_cast<size_t>(u)]]);
          // no layer may be empty below a nonempty one at the same vertex?
          // (not required: the radical filtration constraint below is the
          // real filter; empty middle layers just fail it)
          double cost = 1.0;
          bool feasible = true;
          for (int a = 0; a < na; ++a) {
            const int src = q.arrows[static_cast<size_t>(a)].src;
            const int tgt = q.arrows[static_cast<size_t>(a)].tgt;
            detail::LayeredArrowShape shape;
            shape.rows = vdims[static_cast<size_t>(tgt)];
            shape.cols = vdims[static_cast<size_t>(src)];
            Index row0 = 0;
            for (int kt = 0; kt < slots; ++kt) {
              Index col0 = 0;
              for (int ks = 0; ks < slots; ++ks) {
                if (kt >= ks + 1)
                  for (int r = 0; r < sh.layers[static_cast<size_t>(tgt)][static_cast<size_t>(kt)]; ++r)
                    for (int c = 0; c < sh.layers[static_cast<size_t>(src)][static_cast<size_t>(ks)]; ++c)
                      shape.free_entries.emplace_back(row0 + r, col0 + c);
                col0 += sh.layers[static_cast<size_t>(src)][static_cast<size_t>(ks)];
              }
              row0 += sh.layers[static_cast<size_t>(tgt)][static_cast<size_t>(kt)];
            }
            cost *= std::pow(static_cast<double>(p),
                             static_cast<double>(shape.free_entries.size()));
            if (cost > 1e18) feasible = false;
            sh.arrows.push_back(std::move(shape));
          }
          if (!feasible) {
            total_cost = 1e18;
            return;
          }
          sh.cost = cost;
          total_cost += cost;
          shapes.push_back(std::move(sh));
          return;
        }
        for (size_t c = 0; c < comps_by_dim[static_cast<size_t>(vdims[static_cast<size_t>(w)])].size(); ++c) {
          pick[static_cast<size_t>(w)] = c;
          layer_rec(w + 1);
        }
      };
      layer_rec(0);
      return;
    }
    for (Index dv = 0; dv <= left; ++dv) {
      vdims[static_cast<size_t>(v)] = dv;
      dim_rec(v + 1, left - dv);
    }
  };
  dim_rec(0, max_dim);

  if (total_cost > opts.cost_limit)
    throw PreconditionError("enumerate_modules: estimated " + std::to_string(total_cost) +
                            " layered candidates exceeds the budget of " +
                            std::to_string(opts.cost_limit));

  EnumeratedPool<S> pool;
  pool.max_dim = max_dim;

  // dedup buckets keyed by cheap invariants
  struct Bucket {
    std::vector<size_t> members;
  };
  std::map<std::vector<Index>, Bucket> buckets;

  for (const auto& sh : shapes) {
    // layer size prefix sums per vertex: expected dim of e_v J^s M
    std::vector<std::vector<Index>> expect_tail(static_cast<size_t>(nv),
                                                std::vector<Index>(static_cast<size_t>(slots) + 1, 0));
    for (int v = 0; v < nv; ++v)
      for (int s = slots - 1; s >= 0; --s)
        expect_tail[static_cast<size_t>(v)][static_cast<size_t>(s)] =
            expect_tail[static_cast<size_t>(v)][static_cast<size_t>(s) + 1] +
            sh.layers[static_cast<size_t>(v)][static_cast<size_t>(s)];

    Index total = 0;
    std::vector<Index> offset{0};
    for (Index dv : sh.vdims) {
      total += dv;
      offset.push_back(total);
    }

    Index free_total = 0;
    for (const auto& ash : sh.arrows) free_total += static_cast<Index>(ash.free_entries.size());
    std::vector<unsigned> digits(static_cast<size_t>(free_total), 0);
    bool first = true;
    for (;;) {
      if (!first) {  // advance the odometer; empty digit vectors stop after one pass
        size_t at = 0;
        while (at < digits.size() && digits[at] + 1 == p) digits[at++] = 0;
        if (at == digits.size()) break;
        ++digits[at];
      }
      first = false;
      ++pool.candidates_scanned;

      std::vector<Mat<S>> arrow_mats;
      {
        size_t digit_at = 0;
        for (const auto& ash : sh.arrows) {
          Mat<S> m = Mat<S>::Zero(ash.rows, ash.cols);
          for (const auto& [r, c] : ash.free_entries) m(r, c) = S(digits[digit_at++]);
          arrow_mats.push_back(std::move(m));
        }
      }

      // radical filtration must match the layering, per vertex
      {
        // J^1 M = sum of arrow images inside the total space
        std::vector<Vec<S>> rows;
        auto embed_cols = [&](const Mat<S>& m, int tgt_v, const Mat<S>& basis_cols, int src_v) {
          // basis_cols: total x k matrix of vectors; arrow applies to the
          // src-vertex block and lands in the tgt-vertex block
          for (Index col = 0; col < basis_cols.cols(); ++col) {
            Vec<S> img = Vec<S>::Zero(total);
            img.segment(offset[static_cast<size_t>(tgt_v)], sh.vdims[static_cast<size_t>(tgt_v)]) =
                m * basis_cols.col(col).segment(offset[static_cast<size_t>(src_v)],
                                                sh.vdims[static_cast<size_t>(src_v)]);
            rows.push_back(std::move(img));
          }
        };
        Mat<S> current = Mat<S>::Identity(total, total);
        bool layering_exact = true;
        for (int s = 1; s < slots && layering_exact; ++s) {
          rows.clear();
          for (int a = 0; a < na; ++a)
            embed_cols(arrow_mats[static_cast<size_t>(a)], q.arrows[static_cast<size_t>(a)].tgt,
                       current, q.arrows[static_cast<size_t>(a)].src);
          Subspace<S> js = Subspace<S>::from_vectors(rows, total);
          // per-vertex dimensions of J^s M
          for (int v = 0; v < nv && layering_exact; ++v) {
            Mat<S> vcols = js.basis().block(0, offset[static_cast<size_t>(v)], js.dim(),
                                            sh.vdims[static_cast<size_t>(v)]);
            if (rank_of(vcols) != expect_tail[static_cast<size_t>(v)][static_cast<size_t>(s)])
              layering_exact = false;
          }
          current = js.basis().transpose();
        }
        if (!layering_exact) continue;
      }

      // relations must evaluate to zero
      {
        bool ok = true;
        for (const auto& rel : q.relations) {
          Mat<S> val;
          bool val_set = false;
          for (const auto& term : rel) {
            if (term.arrows.empty()) continue;
            Mat<S> prod = arrow_mats[static_cast<size_t>(term.arrows.front())];
            for (size_t k = 1; k < term.arrows.size(); ++k)
              prod = arrow_mats[static_cast<size_t>(term.arrows[k])] * prod;
            prod *= S(term.coeff);
            if (!val_set) {
              val = prod;
              val_set = true;
            } else {
              val += prod;
            }
          }
          if (val_set && !is_zero_mat(val)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
      }

      Module<S> cand = module_from_representation(alg, sh.vdims, arrow_mats, Check::Light);
      auto dec = decompose(cand, opts.search);
      if (!dec.certified)
        throw PreconditionError("enumerate_modules: decomposition uncertain; oracle exactness lost");
      if (dec.iso_class_count() != 1 || dec.total_multiplicity() != 1) continue;

      // dedup by invariant bucket, then pairwise isomorphism
      std::vector<Index> key = dimension_vector(cand);
      for (const auto& m : arrow_mats) key.push_back(rank_of(m));
      key.push_back(hom_dim(cand, cand));
      auto& bucket = buckets[key];
      bool dup = false;
      for (size_t idx : bucket.members)
        if (indec_isomorphic(pool.modules[idx], cand)) {
          dup = true;
          break;
        }
      if (dup) continue;
      bucket.members.push_back(pool.modules.size());
      pool.modules.push_back(std::move(cand));
    }
  }
  return pool;
}

// ---------------------------------------------------------------------------
// tau-tilting and support tau-tilting enumeration over a pool

template <class S>
struct TauTiltingEnumeration {
  std::vector<std::vector<size_t>> tau_tilting;          // index sets into the pool
  std::vector<std::vector<size_t>> support_tau_tilting;  // includes the empty set
};

/// All basic tau-tilting and support tau-tilting modules assembled from the
/// pool: pairwise tau-rigid combinations with the right summand counts.
template <class S>
TauTiltingEnumeration<S> enumerate_tau_tilting(const AlgebraPtr<S>& alg,
                                               const std::vector<Module<S>>& pool) {
  const size_t n = pool.size();
  std::vector<Module<S>> taus;
  taus.reserve(n);
  for (const auto& m : pool) taus.push_back(tau(m));
  std::vector<std::vector<bool>> compat(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      compat[i][j] = hom_dim(pool[i], taus[j]) == 0;

  TauTiltingEnumeration<S> out;
  const size_t want = static_cast<size_t>(alg->simple_count());
  std::vector<size_t> combo;
  std::function<void(size_t)> rec = [&](size_t start) {
    // check support condition for the current combo
    {
      std::vector<bool> supported(alg->idempotents.size(), false);
      for (size_t i : combo) {
        auto dv = dimension_vector(pool[i]);
        for (size_t v = 0; v < supported.size(); ++v)
          if (dv[static_cast<Index>(v)] > 0) supported[v] = true;
      }
      size_t quot_simples = 0;
      for (bool b : supported)
        if (b) ++quot_simples;
      if (combo.size() == quot_simples) out.support_tau_tilting.push_back(combo);
      if (combo.size() == want) {
        out.tau_tilting.push_back(combo);
        return;  // cannot grow: |T| <= |A|
      }
    }
    for (size_t next = start; next < n; ++next) {
      if (!compat[next][next]) continue;
      bool ok = true;
      for (size_t i : combo)
        if (!compat[i][next] || !compat[next][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      combo.push_back(next);
      rec(next + 1);
      combo.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace tautilt

// Annihilators, fac(T) membership, the classifier battery (rigid, tau-rigid,
// partial/1-tilting, tau-tilting, support tau-tilting, faithful,
// self-orthogonal) and the cross-check harness for the comparison theorems
// between tau-tilting and 1-tilting modules.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tautilt/homology.hpp"

namespace tautilt {

/// Ann(T) = {a : a T = 0}, a two-sided ideal.
template <class S>
Ideal<S> annihilator(const Module<S>& t) {
  const Index n = t.alg->dim;
  Mat<S> sys(t.dim * t.dim, n);
  for (Index i = 0; i < n; ++i) sys.col(i) = vec_of(t.act[static_cast<size_t>(i)]);
  return Ideal<S>{t.alg, kernel(sys)};
}

template <class S>
bool is_faithful(const Module<S>& t) {
  return annihilator(t).dim() == 0;
}

/// The ideal as a right module (a submodule of the right regular module).
template <class S>
Module<S> ideal_as_right_module(const Ideal<S>& i) {
  return submodule(regular_module(i.alg, Side::Right), i.space).mod;
}

/// A/I as a right module.
template <class S>
Module<S> quotient_as_right_module(const Ideal<S>& i) {
  return quotient_module(regular_module(i.alg, Side::Right), i.space).mod;
}

/// D(A/I) as a left module.
template <class S>
Module<S> dual_of_quotient(const Ideal<S>& i) {
  return dual(quotient_as_right_module(i));
}

/// Trace of T in M: the sum of images of all morphisms T -> M.
template <class S>
Subspace<S> trace_in(const Module<S>& t, const Module<S>& m) {
  std::vector<Vec<S>> rows;
  for (const auto& f : hom_space(t, m))
    for (Index j = 0; j < f.cols(); ++j) rows.push_back(f.col(j));
  return Subspace<S>::from_vectors(rows, m.dim);
}

/// M lies in fac(T) iff the trace of T in M is all of M.
template <class S>
bool fac_contains(const Module<S>& t, const Module<S>& m) {
  if (!same_parent(t, m)) throw DimensionError("fac_contains: parent mismatch");
  return trace_in(t, m).dim() == m.dim;
}

/// M lies in add(T) iff every indecomposable summand class of M occurs in T.
template <class S>
Tri add_contains(const Module<S>& t, const Module<S>& m, const SearchOptions& opts = {}) {
  if (!same_parent(t, m)) throw DimensionError("add_contains: parent mismatch");
  auto dm = decompose(m, opts);
  auto dt = decompose(t, opts);
  if (!dm.certified || !dt.certified) return Tri::Unknown;
  for (const auto& [rep, mult] : dm.summands) {
    bool found = false;
    for (const auto& [cand, cmult] : dt.summands)
      if (indec_isomorphic(rep, cand)) {
        found = true;
        break;
      }
    if (!found) return Tri::No;
  }
  return Tri::Yes;
}

template <class S>
bool is_rigid(const Module<S>& t) {
  return ext(t, t, 1) == 0;
}

template <class S>
bool is_tau_rigid(const Module<S>& t) {
  return hom_dim(t, tau(t)) == 0;
}

// ---------------------------------------------------------------------------
// Classification

template <class S>
struct ClassificationReport {
  std::string id;
  Index dim = 0;
  bool faithful = false;
  bool rigid = false;
  bool tau_rigid = false;
  bool partial_one_tilting = false;
  bool one_tilting = false;
  bool tau_tilting = false;
  bool support_tau_tilting = false;
  VanishingVerdict self_orthogonal;
  Index ann_dim = 0;
  bool ann_nilpotent = false;
  std::optional<Index> summand_count;  // |T|, absent when decomposition is Unknown
  int total_multiplicity = 0;
  Index quotient_simple_count = 0;  // |A/Ann T|
  Index tensor_ann_dim = 0;         // dim Ann(T) (x) T
  Index tor1_ann_dim = 0;           // dim Tor_1(Ann T, T)
  Index ext2_to_dabar_dim = 0;      // dim Ext^2(T, D(A/Ann T))
  PdResult pd;
  bool uncertain = false;  // an Unknown decomposition propagated
};

struct ClassifyOptions {
  Index horizon = 20;
  SearchOptions search;
};

template <class S>
ClassificationReport<S> classify(const Module<S>& t, const ClassifyOptions& opts = {}) {
  if (t.side != Side::Left) throw PreconditionError("classify: left modules only");
  ClassificationReport<S> rep;
  rep.dim = t.dim;

  Ideal<S> ann = annihilator(t);
  rep.ann_dim = ann.dim();
  rep.ann_nilpotent = is_nilpotent(ann);
  rep.faithful = rep.ann_dim == 0;
  auto quo = quotient_algebra(t.alg, ann);
  rep.quotient_simple_count = quo.algebra->simple_count();

  auto dec = decompose(t, opts.search);
  if (dec.certified) {
    rep.summand_count = dec.iso_class_count();
    rep.total_multiplicity = dec.total_multiplicity();
  } else {
    rep.uncertain = true;
  }

  rep.tau_rigid = is_tau_rigid(t);
  MinimalResolution<S> res(t);
  ExtComplex<S> self_ext(res, t);
  rep.rigid = t.dim == 0 || self_ext.dim(1) == 0;
  rep.pd = pd_up_to(res, opts.horizon);
  rep.partial_one_tilting = rep.rigid && rep.pd.finite && rep.pd.value <= 1;

  const Index na = t.alg->simple_count();
  if (rep.summand_count) {
    rep.one_tilting = rep.partial_one_tilting && *rep.summand_count == na;
    rep.tau_tilting = rep.tau_rigid && *rep.summand_count == na;
    // Numerical criterion: support tau-tilting iff tau-rigid with |T| = |A/I|.
    rep.support_tau_tilting = rep.tau_rigid && *rep.summand_count == rep.quotient_simple_count;
  }

  rep.self_orthogonal = is_self_orthogonal(t, opts.horizon, opts.search);

  Module<S> iright = ideal_as_right_module(ann);
  rep.tensor_ann_dim = tensor_dim(iright, t);
  rep.tor1_ann_dim = tor_dims(iright, res, 1)[1];
  rep.ext2_to_dabar_dim = ext_dim(res, dual_of_quotient(ann), 2);
  return rep;
}

// ---------------------------------------------------------------------------
// Theorem verdicts

struct TheoremVerdict {
  std::string id;
  bool applicable = true;
  bool consistent = true;
  std::vector<std::pair<std::string, bool>> conditions;
  std::string note;

  void condition(const std::string& name, bool value) { conditions.emplace_back(name, value); }
};

/// Sampled quotients of T^n (n <= max_power), seeded and deduplicated by
/// dimension vector; a finite stand-in for fac(T).
template <class S>
std::vector<Module<S>> sample_fac_quotients(const Module<S>& t, int max_power, int per_power,
                                            std::uint64_t seed) {
  std::vector<Module<S>> out;
  Rng rng(seed);
  std::vector<std::vector<Index>> seen;
  for (int n = 1; n <= max_power; ++n) {
    std::vector<Module<S>> copies(static_cast<size_t>(n), t);
    auto power = direct_sum(t.alg, t.side, copies).mod;
    for (int trial = 0; trial < per_power; ++trial) {
      const int gens = 1 + static_cast<int>(rng.below(2));
      std::vector<Vec<S>> vs;
      for (int g = 0; g < gens; ++g) {
        Vec<S> v(power.dim);
        for (Index k = 0; k < power.dim; ++k)
          v[k] = S(static_cast<unsigned>(rng.below(S::modulus)));
        vs.push_back(std::move(v));
      }
      auto sub = module_generated_by(power, vs);
      auto q = quotient_module(power, sub).mod;
      if (q.dim == 0) continue;
      auto dv = dimension_vector(q);
      if (std::find(seen.begin(), seen.end(), dv) != seen.end()) continue;
      seen.push_back(dv);
      out.push_back(std::move(q));
    }
  }
  return out;
}

/// T is tau-tilting over A iff Ann(T) is nilpotent and T is 1-tilting over
/// A/Ann(T) with Ann(T) (x) T = 0.
template <class S>
TheoremVerdict check_tau_tilting_via_quotient(const Module<S>& t, const ClassifyOptions& opts = {}) {
  TheoremVerdict v;
  v.id = "tau-tilting-via-quotient";
  auto rep = classify(t, opts);
  if (rep.uncertain) {
    v.applicable = false;
    v.note = "decomposition uncertain";
    return v;
  }
  Ideal<S> ann = annihilator(t);
  auto quo = quotient_algebra(t.alg, ann);
  bool bar_one_tilting = false;
  if (quo.algebra->dim == 0) {
    bar_one_tilting = t.dim == 0;  // only the zero module lives over the zero ring
  } else {
    auto tbar = restrict_to_quotient(t, quo);
    auto bar_rep = classify(tbar, opts);
    if (bar_rep.uncertain) {
      v.applicable = false;
      v.note = "quotient decomposition uncertain";
      return v;
    }
    bar_one_tilting = bar_rep.one_tilting;
  }
  const bool lhs = rep.tau_tilting;
  const bool rhs = rep.ann_nilpotent && bar_one_tilting && rep.tensor_ann_dim == 0;
  v.condition("tau_tilting_over_A", lhs);
  v.condition("ann_nilpotent", rep.ann_nilpotent);
  v.condition("one_tilting_over_quotient", bar_one_tilting);
  v.condition("tensor_ann_zero", rep.tensor_ann_dim == 0);
  v.consistent = lhs == rhs;
  if (!v.consistent) v.note = "equivalence failed";
  return v;
}

/// For tau-tilting T, the four conditions of the 1-tilting characterization
/// must agree: (1) 1-tilting, (2) Ext^2(T, fac(T)) = 0 on a sampled cover,
/// (3) Ext^2(T, D(A/I)) = 0, (4) Tor_1(I, T) = 0.
template <class S>
TheoremVerdict check_one_tilting_via_tor(const Module<S>& t, const ClassifyOptions& opts = {},
                                std::uint64_t seed = 1) {
  TheoremVerdict v;
  v.id = "one-tilting-via-tor";
  auto rep = classify(t, opts);
  if (rep.uncertain) {
    v.applicable = false;
    v.note = "decomposition uncertain";
    return v;
  }
  if (!rep.tau_tilting) {
    v.applicable = false;
    v.note = "T is not tau-tilting";
    return v;
  }
  Ideal<S> ann = annihilator(t);
  MinimalResolution<S> res(t);
  const bool c1 = rep.one_tilting;
  bool c2 = ext_dim(res, dual_of_quotient(ann), 2) == 0;
  for (const auto& x : sample_fac_quotients(t, 3, 2, seed)) {
    if (!fac_contains(t, x)) continue;  // quotients of T^n always are; belt only
    if (ext_dim(res, x, 2) != 0) c2 = false;
  }
  const bool c3 = rep.ext2_to_dabar_dim == 0;
  const bool c4 = rep.tor1_ann_dim == 0;
  v.condition("one_tilting", c1);
  v.condition("ext2_fac_cover_zero", c2);
  v.condition("ext2_dual_quotient_zero", c3);
  v.condition("tor1_ann_zero", c4);
  v.consistent = (c1 == c2) && (c2 == c3) && (c3 == c4);
  if (!v.consistent) v.note = "conditions disagree";
  return v;
}

/// Classical comparisons: faithful + tau-tilting <=> 1-tilting; tau-rigid =>
/// |T| <= |A/I|; tau-rigid <=> partial 1-tilting over the quotient with
/// I (x) T = 0; support tau-tilting <=> 1-tilting over the quotient with
/// I (x) T = 0.
template <class S>
TheoremVerdict check_classical(const Module<S>& t, const ClassifyOptions& opts = {}) {
  TheoremVerdict v;
  v.id = "classical-comparisons";
  auto rep = classify(t, opts);
  if (rep.uncertain) {
    v.applicable = false;
    v.note = "decomposition uncertain";
    return v;
  }
  Ideal<S> ann = annihilator(t);
  auto quo = quotient_algebra(t.alg, ann);
  bool bar_partial = false, bar_one_tilting = false;
  if (quo.algebra->dim == 0) {
    bar_partial = bar_one_tilting = t.dim == 0;
  } else {
    auto bar_rep = classify(restrict_to_quotient(t, quo), opts);
    if (bar_rep.uncertain) {
      v.applicable = false;
      v.note = "quotient decomposition uncertain";
      return v;
    }
    bar_partial = bar_rep.partial_one_tilting;
    bar_one_tilting = bar_rep.one_tilting;
  }
  const bool tensor_zero = rep.tensor_ann_dim == 0;
  const bool faithful_tilt = (rep.faithful && rep.tau_tilting) == rep.one_tilting;
  const bool numeric = !rep.tau_rigid || *rep.summand_count <= rep.quotient_simple_count;
  const bool tau_rigid_chr = rep.tau_rigid == (bar_partial && tensor_zero);
  const bool support_chr = rep.support_tau_tilting == (bar_one_tilting && tensor_zero);
  v.condition("faithful_tau_tilting_iff_one_tilting", faithful_tilt);
  v.condition("tau_rigid_count_bound", numeric);
  v.condition("tau_rigid_iff_partial_over_quotient", tau_rigid_chr);
  v.condition("support_iff_one_tilting_over_quotient", support_chr);
  v.consistent = faithful_tilt && numeric && tau_rigid_chr && support_chr;
  return v;
}

/// The definition-route check for support tau-tilting: the stable part of
/// Ann(T) is an idempotent ideal killing T, over whose quotient T must be
/// tau-tilting. Compared against the numerical route.
template <class S>
TheoremVerdict check_support_definition(const Module<S>& t, const ClassifyOptions& opts = {}) {
  TheoremVerdict v;
  v.id = "support-definition";
  auto rep = classify(t, opts);
  if (rep.uncertain) {
    v.applicable = false;
    return v;
  }
  Ideal<S> ann = annihilator(t);
  Ideal<S> i0 = stable_part(ann);
  bool def_route;
  if (i0.dim() == static_cast<Index>(t.alg->dim)) {
    def_route = t.dim == 0;  // I0 = A: only the zero module qualifies
  } else {
    auto quo = quotient_algebra(t.alg, i0);
    auto bar_rep = classify(restrict_to_quotient(t, quo), opts);
    if (bar_rep.uncertain) {
      v.applicable = false;
      return v;
    }
    def_route = bar_rep.tau_tilting;
  }
  v.condition("numeric_route", rep.support_tau_tilting);
  v.condition("definition_route", def_route);
  v.consistent = rep.support_tau_tilting == def_route;
  return v;
}

// ---------------------------------------------------------------------------
// Conjecture sweeps

template <class S>
struct ConjectureSweep {
  std::vector<TheoremVerdict> verdicts;
  // Violated instances; must stay empty on the verified corpus classes.
  std::vector<std::string> counterexample_candidates;
  // Modules whose self-orthogonality stayed unknown at the horizon: reported,
  // never asserted either way.
  std::vector<std::string> unknown_reports;
};

/// Sweeps all multiplicity-free combinations T of pool members with
/// |T| = |A|: a self-orthogonal such T must be faithful, and 1-tilting when
/// additionally tau-tilting.
template <class S>
ConjectureSweep<S> check_conjectures(const AlgebraPtr<S>& alg, const std::vector<Module<S>>& pool,
                                     const ClassifyOptions& opts = {}) {
  ConjectureSweep<S> out;
  const size_t n = pool.size();
  const size_t want = static_cast<size_t>(alg->simple_count());
  if (want == 0 || want > n) return out;
  std::vector<size_t> idx(want);
  for (size_t i = 0; i < want; ++i) idx[i] = i;
  auto advance = [&]() {
    size_t k = want;
    while (k > 0) {
      --k;
      if (idx[k] + (want - k) < n) {
        ++idx[k];
        for (size_t j = k + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    std::vector<Module<S>> parts;
    std::string id;
    for (size_t i : idx) {
      parts.push_back(pool[i]);
      id += (id.empty() ? "M" : "+M") + std::to_string(i);
    }
    Module<S> t = direct_sum(alg, Side::Left, parts).mod;
    auto rep = classify(t, opts);
    if (rep.uncertain) {
      out.unknown_reports.push_back(id + ": decomposition uncertain");
      continue;
    }
    if (!rep.summand_count || *rep.summand_count != alg->simple_count()) continue;
    if (rep.self_orthogonal.status == VanishingVerdict::Status::Unknown) {
      out.unknown_reports.push_back(id + ": self-orthogonality unknown at horizon");
      continue;
    }
    if (!rep.self_orthogonal.holds()) continue;
    {
      TheoremVerdict v;
      v.id = "self-orthogonal-faithful-instance";
      v.note = id;
      v.condition("self_orthogonal", true);
      v.condition("faithful", rep.faithful);
      v.consistent = rep.faithful;
      if (!v.consistent)
        out.counterexample_candidates.push_back(id + ": self-orthogonal with |T| = |A| but unfaithful");
      out.verdicts.push_back(std::move(v));
    }
    if (rep.tau_tilting) {
      TheoremVerdict v;
      v.id = "self-orthogonal-tau-tilting-instance";
      v.note = id;
      v.condition("self_orthogonal_tau_tilting", true);
      v.condition("one_tilting", rep.one_tilting);
      v.consistent = rep.one_tilting;
      if (!v.consistent)
        out.counterexample_candidates.push_back(id + ": self-orthogonal tau-tilting but not 1-tilting");
      out.verdicts.push_back(std::move(v));
    }
  } while (advance());
  return out;
}

// ---------------------------------------------------------------------------
// Wakamatsu coresolutions

template <class S>
struct WakamatsuChain {
  enum class Status { CompletedFinite, CompletedToHorizon, Obstructed };
  Status status = Status::Obstructed;
  Index obstructed_stage = 0;
  std::vector<Module<S>> terms;  // T^0, T^1, ...
  std::string note;
};

namespace detail {

/// f : X -> Y is a left add(T)-approximation iff composing with Hom(Y, T)
/// reaches every morphism X -> T.
template <class S>
bool is_left_approximation(const Module<S>& x, const Module<S>& t, const Module<S>& y,
                           const Mat<S>& f) {
  auto hom_xt = hom_space(x, t);
  if (hom_xt.empty()) return true;
  std::vector<Vec<S>> rows;
  for (const auto& g : hom_space(y, t)) rows.push_back(vec_of(Mat<S>(g * f)));
  const Index reached =
      Subspace<S>::from_vectors(rows, static_cast<Index>(t.dim * x.dim)).dim();
  return reached == static_cast<Index>(hom_xt.size());
}

}  // namespace detail

namespace detail {

/// Left add(T)-approximation of X: the universal map into one copy of a
/// summand class per basis morphism, greedily pruned while the approximation
/// property survives.
template <class S>
std::optional<std::pair<Module<S>, Mat<S>>> left_add_approximation(
    const Module<S>& x, const Module<S>& t, const std::vector<Module<S>>& summand_classes) {
  struct Block {
    const Module<S>* target;
    Mat<S> map;
  };
  std::vector<Block> blocks;
  for (const auto& tj : summand_classes)
    for (const auto& f : hom_space(x, tj)) blocks.push_back(Block{&tj, f});
  auto assemble = [&](const std::vector<bool>& keep) {
    std::vector<Module<S>> parts;
    Index rows = 0;
    for (size_t b = 0; b < blocks.size(); ++b)
      if (keep[b]) {
        parts.push_back(*blocks[b].target);
        rows += blocks[b].target->dim;
      }
    auto y = parts.empty() ? DirectSum<S>{zero_module(t.alg, t.side), {}}
                           : direct_sum(t.alg, t.side, parts);
    Mat<S> f = Mat<S>::Zero(rows, x.dim);
    Index at = 0;
    for (size_t b = 0; b < blocks.size(); ++b)
      if (keep[b]) {
        f.block(at, 0, blocks[b].target->dim, x.dim) = blocks[b].map;
        at += blocks[b].target->dim;
      }
    return std::make_pair(std::move(y.mod), std::move(f));
  };
  std::vector<bool> keep(blocks.size(), true);
  {
    auto [y, f] = assemble(keep);
    if (!is_left_approximation(x, t, y, f)) return std::nullopt;  // should not happen
  }
  for (size_t b = 0; b < blocks.size(); ++b) {
    keep[b] = false;
    auto [y, f] = assemble(keep);
    if (!is_left_approximation(x, t, y, f)) keep[b] = true;
  }
  return assemble(keep);
}

}  // namespace detail

/// Greedy coresolution 0 -> A -> T^0 -> T^1 -> ... by minimal left add(T)-
/// approximations of the cocycles, each verified to stay left-orthogonal to T
/// up to the horizon.
template <class S>
WakamatsuChain<S> wakamatsu_coresolution(const Module<S>& t, Index horizon,
                                         const ClassifyOptions& opts = {}) {
  WakamatsuChain<S> out;
  auto dec = decompose(t, opts.search);
  std::vector<Module<S>> classes;
  if (dec.certified)
    for (auto& [rep, mult] : dec.summands) classes.push_back(rep);
  else
    classes.push_back(t);  // coarse fallback: whole-T blocks
  Module<S> x = regular_module(t.alg, Side::Left);
  for (Index stage = 0; stage < horizon; ++stage) {
    if (x.dim == 0) {
      out.status = WakamatsuChain<S>::Status::CompletedFinite;
      return out;
    }
    auto approx = detail::left_add_approximation(x, t, classes);
    if (!approx) {
      out.status = WakamatsuChain<S>::Status::Obstructed;
      out.obstructed_stage = stage;
      out.note = "no left approximation found";
      return out;
    }
    auto& [y, f] = *approx;
    if (rank_of(f) != x.dim) {  // the chain must stay exact
      out.status = WakamatsuChain<S>::Status::Obstructed;
      out.obstructed_stage = stage;
      out.note = "approximation of the cocycle is not injective";
      return out;
    }
    out.terms.push_back(y);
    auto next = quotient_module(y, image(f)).mod;
    if (next.dim > 0) {
      MinimalResolution<S> res(next);
      ExtComplex<S> ec(res, t);
      for (Index i = 1; i <= opts.horizon; ++i)
        if (ec.dim(i) != 0) {
          out.status = WakamatsuChain<S>::Status::Obstructed;
          out.obstructed_stage = stage + 1;
          out.note = "cocycle leaves the left-orthogonal of T at degree " + std::to_string(i);
          return out;
        }
    }
    x = std::move(next);
  }
  out.status = x.dim == 0 ? WakamatsuChain<S>::Status::CompletedFinite
                          : WakamatsuChain<S>::Status::CompletedToHorizon;
  return out;
}

}  // namespace tautilt

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. All thresholds are pinned here; every expected value is either
// forced by the structure or cross-checked against the exhaustive
// enumeration oracle.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "tautilt/corpus.hpp"
#include "tautilt/enumerate.hpp"
#include "tautilt/suites.hpp"

using namespace tautilt;
using F2 = Fp<2>;

namespace {

int g_failures = 0;
std::chrono::steady_clock::time_point g_t0;

void begin_criterion() { g_t0 = std::chrono::steady_clock::now(); }

double elapsed_s() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - g_t0).count();
}

void report(int criterion, const std::string& what, bool ok, double limit_s) {
  const double t = elapsed_s();
  const bool in_time = t <= limit_s;
  if (!ok || !in_time) ++g_failures;
  std::printf("[%s] criterion %2d: %s (%.1fs / limit %.0fs)%s\n",
              ok && in_time ? "PASS" : "FAIL", criterion, what.c_str(), t, limit_s,
              ok ? (in_time ? "" : " -- over time budget") : "");
  std::fflush(stdout);
}

struct AlgebraSweep {
  CorpusEntry entry;
  AlgebraPtr<F2> alg;
  std::vector<Module<F2>> pool;
  bool pool_complete = false;
  // every multiplicity-free combination, with its module and classification
  std::vector<std::vector<size_t>> subsets;
  std::vector<Module<F2>> modules;
  std::vector<ClassificationReport<F2>> reports;
};

std::vector<CorpusEntry> acceptance_corpus() {
  return {linear_a(2),        zero_relation_a3(),    truncated_local(2),
          truncated_local(3), nakayama_cyclic(3, 2), linear_a(3)};
}

std::vector<AlgebraSweep> build_sweeps(Index max_dim) {
  std::vector<AlgebraSweep> sweeps;
  for (const auto& entry : acceptance_corpus()) {
    AlgebraSweep sw;
    sw.entry = entry;
    sw.alg = build_corpus_algebra<F2>(entry);
    sw.pool = enumerate_modules(sw.alg, max_dim).modules;
    sw.pool_complete = entry.indec_dim_bound && *entry.indec_dim_bound <= max_dim;
    const size_t n = sw.pool.size();
    for (unsigned long long mask = 1; mask < (1ull << n); ++mask) {
      std::vector<size_t> subset;
      for (size_t i = 0; i < n; ++i)
        if (mask & (1ull << i)) subset.push_back(i);
      std::vector<Module<F2>> parts;
      for (size_t i : subset) parts.push_back(sw.pool[i]);
      sw.subsets.push_back(std::move(subset));
      sw.modules.push_back(direct_sum(sw.alg, Side::Left, parts).mod);
      sw.reports.push_back(classify(sw.modules.back()));
    }
    sweeps.push_back(std::move(sw));
  }
  return sweeps;
}

Module<F2> tstar_of(const AlgebraSweep& sw) {
  auto projs = projective_modules(sw.alg);
  auto s = simple_modules(sw.alg);
  return direct_sum(sw.alg, Side::Left, {projs[0].mod, s[0], s[2]}).mod;
}

}  // namespace

int main() {
  std::printf("acceptance: field F_2, horizon 20, enumeration cap 4\n");

  // ----- shared sweep (criteria 1, 2, 4, 5, 7) -----
  begin_criterion();
  auto sweeps = build_sweeps(4);
  std::printf("sweep built: %zu algebras, %.1fs\n", sweeps.size(), elapsed_s());

  // criterion 1: Theorem I equivalence on every basic combination
  begin_criterion();
  {
    bool ok = true;
    size_t instances = 0;
    for (const auto& sw : sweeps)
      for (size_t i = 0; i < sw.modules.size(); ++i) {
        auto v = check_tau_tilting_via_quotient(sw.modules[i]);
        ++instances;
        if (!v.applicable || !v.consistent) ok = false;
      }
    report(1, "Theorem I equivalence on " + std::to_string(instances) + " basic combinations",
           ok, 300);
  }

  // criterion 2: Theorem II four-way agreement for every tau-tilting module,
  // including the concrete witness T* over the zero-relation A3 algebra
  begin_criterion();
  {
    bool ok = true;
    size_t instances = 0;
    for (const auto& sw : sweeps)
      for (size_t i = 0; i < sw.modules.size(); ++i) {
        if (!sw.reports[i].tau_tilting) continue;
        auto v = check_one_tilting_via_tor(sw.modules[i]);
        ++instances;
        if (!v.applicable || !v.consistent) ok = false;
      }
    const auto& a3z = sweeps[1];
    auto rep = classify(tstar_of(a3z));
    ok = ok && rep.tau_tilting && !rep.one_tilting && rep.ann_dim == 1 &&
         rep.tensor_ann_dim == 0 && rep.tor1_ann_dim == 1;
    report(2, "Theorem II agreement on " + std::to_string(instances) +
                  " tau-tilting modules + the Tor witness",
           ok, 300);
  }

  // criterion 3: counting identities over every basis-subset ideal
  begin_criterion();
  {
    bool ok = true;
    for (const auto& sw : sweeps) {
      const Index n = sw.alg->dim;
      if (n > 6) {
        ok = false;
        continue;
      }
      for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        std::vector<Vec<F2>> gens;
        for (Index i = 0; i < n; ++i)
          if (mask & (1ull << i)) gens.push_back(basis_element(*sw.alg, i));
        auto ideal = ideal_from_generators<F2>(sw.alg, gens);
        auto i0 = stable_part(ideal);
        const Index st = stable_index(ideal);
        auto q = quotient_algebra<F2>(sw.alg, ideal);
        auto q0 = quotient_algebra<F2>(sw.alg, i0);
        if (sw.alg->simple_count() != q.algebra->simple_count() + st) ok = false;
        if (sw.alg->simple_count() != q0.algebra->simple_count() + st) ok = false;
        if ((sw.alg->simple_count() == q.algebra->simple_count()) != is_nilpotent(ideal))
          ok = false;
      }
      for (auto& p : projective_modules(sw.alg)) {
        auto tr = trace_ideal(p.mod);
        std::vector<Vec<F2>> prods;
        for (Index r = 0; r < tr.space.dim(); ++r)
          for (Index j = 0; j < p.mod.dim; ++j)
            prods.push_back(mul(*sw.alg, tr.space.basis_vector(r), Vec<F2>(p.embed.col(j))));
        if (Subspace<F2>::from_vectors(prods, sw.alg->dim) != image(p.embed)) ok = false;
      }
    }
    report(3, "counting identities |A| = |A/I| + st(I) and tr(P)P = P", ok, 60);
  }

  // criterion 4: classical per-module assertions on the full sweep
  begin_criterion();
  {
    bool ok = true;
    size_t instances = 0;
    for (const auto& sw : sweeps)
      for (size_t i = 0; i < sw.modules.size(); ++i) {
        auto v = check_classical(sw.modules[i]);
        ++instances;
        if (!v.applicable || !v.consistent) ok = false;
      }
    report(4, "classical comparisons on " + std::to_string(instances) + " combinations", ok,
           300);
  }

  // criterion 5: Ext-shift identities for self-orthogonal tau-tilting modules.
  // Self-orthogonality is required: over NakayamaCyclic(3,2) the tau-tilting
  // module P1 + P2 + S2 has Ext^3(T, T) != 0 and the identity fails at i = 3
  // (covered as a unit test in test_dell.cpp).
  begin_criterion();
  {
    bool ok = true;
    size_t pairs = 0;
    for (const auto& sw : sweeps)
      for (size_t i = 0; i < sw.modules.size(); ++i) {
        const auto& rep = sw.reports[i];
        if (!rep.tau_tilting || !rep.self_orthogonal.holds()) continue;
        const Module<F2>& t = sw.modules[i];
        auto ctx = fac_context(t);
        std::vector<Module<F2>> ys = sample_fac_quotients(t, 3, 2, 99);
        ys.push_back(dual_of_quotient(annihilator(t)));
        MinimalResolution<F2> res(t);
        for (const auto& y : ys) {
          if (!fac_contains(t, y)) continue;
          ++pairs;
          std::vector<Module<F2>> chain{y};
          for (int k = 0; k < 4; ++k) chain.push_back(rel_syzygy(ctx, chain.back()));
          for (Index i2 = 1; i2 <= 4; ++i2)
            if (ext_dim(res, chain[0], i2) != ext_dim(res, chain[1], i2 + 1)) ok = false;
          for (Index k = 0; k <= 4; ++k)
            for (Index j = 1; j <= k + 1; ++j)
              if (ext_dim(res, chain[static_cast<size_t>(k)], j) != 0) ok = false;
        }
      }
    report(5, "Ext-shift identities on " + std::to_string(pairs) + " (T, Y) pairs", ok, 300);
  }

  // criterion 6: delooping levels
  begin_criterion();
  {
    bool ok = true;
    // every pool module over the self-injective NakayamaCyclic(3,2) gets
    // a certified Bounded(0)
    {
      const auto& sw = sweeps[4];
      auto ctx = ambient_context(sw.alg);
      for (const auto& m : sw.pool) {
        auto r = dell_upper(ctx, m, {}, sw.pool_complete ? &sw.pool : nullptr);
        if (!(r.bounded() && r.level == 0)) ok = false;
      }
    }
    // dell(S1) over the A2 quiver algebra is exactly 1, with level 0 refuted
    // exhaustively over the complete finite-type pool
    {
      const auto& sw = sweeps[0];
      auto ctx = ambient_context(sw.alg);
      auto s = simple_modules(sw.alg);
      auto r = dell_upper(ctx, s[0], {}, &sw.pool);
      if (!(r.bounded() && r.level == 1 && r.exact)) ok = false;
      if (!verify_dell_witness(ctx, s[0], r.level, r.witness)) ok = false;
    }
    // dell <= pd wherever pd is finite, over every corpus pool
    for (const auto& sw : sweeps) {
      auto ctx = ambient_context(sw.alg);
      for (const auto& m : sw.pool) {
        auto pd = pd_up_to(m, 20);
        if (!pd.finite) continue;
        auto r = dell_upper(ctx, m, {}, sw.pool_complete ? &sw.pool : nullptr);
        if (!r.bounded() || r.level > pd.value) ok = false;
      }
    }
    report(6, "delooping levels: self-injective at 0, dell(S1) = 1 exactly, dell <= pd", ok,
           120);
  }

  // criterion 7: Theorem III and the Brenner-Butler bridge
  begin_criterion();
  {
    bool ok = true;
    size_t instances = 0, bridges = 0;
    for (const auto& sw : sweeps)
      for (size_t i = 0; i < sw.modules.size(); ++i) {
        const auto& rep = sw.reports[i];
        if (!rep.tau_tilting || !rep.self_orthogonal.holds()) continue;
        auto r = check_one_tilting_via_dell(sw.modules[i], {}, {},
                                   sw.pool_complete ? &sw.pool : nullptr);
        if (!r.verdict.applicable) continue;
        ++instances;
        const bool any_route = r.pd.finite || (r.dell_fac && r.dell_fac->bounded()) ||
                               (r.dell_b && r.dell_b->bounded());
        if (any_route && !rep.one_tilting) ok = false;
        if (!r.verdict.consistent) ok = false;
        if (!any_route) ok = false;  // on this finite-type corpus a route must certify
        if (r.dell_fac && r.dell_fac->bounded() && r.dell_fac->exact && r.dell_b &&
            r.dell_b->bounded() && r.dell_b->exact) {
          ++bridges;
          if (r.dell_fac->level != r.dell_b->level) ok = false;
        }
      }
    report(7, "Theorem III on " + std::to_string(instances) + " instances, " +
                  std::to_string(bridges) + " exact bridge checks",
           ok, 300);
  }

  // criterion 8: local algebras and the conjecture sweep
  begin_criterion();
  {
    bool ok = true;
    for (int n : {2, 3}) {
      auto entry = truncated_local(n);
      auto alg = build_corpus_algebra<F2>(entry);
      auto pool = enumerate_modules(alg, 2 * n).modules;
      auto en = enumerate_tau_tilting(alg, pool);
      if (en.tau_tilting.size() != 1) ok = false;
      if (!en.tau_tilting.empty()) {
        std::vector<Module<F2>> parts;
        for (size_t i : en.tau_tilting[0]) parts.push_back(pool[i]);
        if (is_isomorphic(direct_sum(alg, Side::Left, parts).mod, regular_module(alg)) !=
            Tri::Yes)
          ok = false;
      }
    }
    size_t candidates = 0, unknowns = 0;
    for (const auto& sw : sweeps) {
      auto sweep_result = check_conjectures(sw.alg, sw.pool, {});
      candidates += sweep_result.counterexample_candidates.size();
      unknowns += sweep_result.unknown_reports.size();
      for (const auto& v : sweep_result.verdicts)
        if (!v.consistent) ok = false;
    }
    if (candidates != 0 || unknowns != 0) ok = false;
    report(8, "local tau-tilting uniqueness + conjecture sweep (0 violations, 0 unexplained)",
           ok, 300);
  }

  // criterion 9: support tau-tilting counts 2, 5, 14 via both routes
  begin_criterion();
  {
    bool ok = true;
    const size_t expected[] = {2, 5, 14};
    for (int n = 1; n <= 3; ++n) {
      auto entry = linear_a(n);
      auto alg = build_corpus_algebra<F2>(entry);
      auto pool = enumerate_modules(alg, *entry.indec_dim_bound).modules;
      auto en = enumerate_tau_tilting(alg, pool);
      if (en.support_tau_tilting.size() != expected[n - 1]) ok = false;
      // classifier route (numeric criterion) and definition route (stable
      // part + quotient tau-tilting) must both confirm every combination
      size_t by_classifier = 0;
      const size_t pn = pool.size();
      for (unsigned long long mask = 0; mask < (1ull << pn); ++mask) {
        std::vector<Module<F2>> parts;
        for (size_t i = 0; i < pn; ++i)
          if (mask & (1ull << i)) parts.push_back(pool[i]);
        auto t = parts.empty() ? zero_module(alg) : direct_sum(alg, Side::Left, parts).mod;
        auto rep = classify(t);
        auto def = check_support_definition(t);
        if (!def.applicable || !def.consistent) ok = false;
        if (rep.support_tau_tilting) ++by_classifier;
      }
      if (by_classifier != expected[n - 1]) ok = false;
    }
    report(9, "support tau-tilting counts 2, 5, 14 by enumeration, classifier and definition",
           ok, 120);
  }

  // criterion 10: determinism and oracle agreement
  begin_criterion();
  {
    bool ok = true;
    for (const char* suite : {"thm1", "conjectures"}) {
      SuiteConfig cfg;
      cfg.suite = suite;
      cfg.seed = 2024;
      cfg.max_dim = 2;
      auto a = run_suite<F2>({linear_a(2), zero_relation_a3()}, cfg);
      auto b = run_suite<F2>({linear_a(2), zero_relation_a3()}, cfg);
      if (a.report.dump(2) != b.report.dump(2)) ok = false;
    }
    for (const auto& sw : sweeps) {
      auto appears = [&](const Module<F2>& m) {
        for (const auto& cand : sw.pool)
          if (cand.dim == m.dim && is_isomorphic(cand, m) == Tri::Yes) return true;
        return false;
      };
      for (const auto& s : simple_modules(sw.alg))
        if (!appears(s)) ok = false;
      for (auto& p : projective_modules(sw.alg))
        if (!appears(p.mod)) ok = false;
      for (const auto& i : injective_modules(sw.alg))
        if (!appears(i)) ok = false;
    }
    report(10, "byte-identical reports for equal seeds + oracle/constructor agreement", ok,
           120);
  }

  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}

// Implementation behind run_request<P>; included by one translation unit per
// supported prime.
#pragma once

#include <sstream>

#include "driver.hpp"
#include "tautilt/suites.hpp"

namespace tautilt {

namespace cli_detail {

inline std::string render_verdict_text(const Json& v) {
  std::ostringstream out;
  out << (v["applicable"].get<bool>() ? (v["consistent"].get<bool>() ? "ok   " : "FAIL ")
                                      : "n/a  ")
      << v["id"].get<std::string>();
  if (v.contains("instance")) out << "  " << v["instance"].get<std::string>();
  if (v.contains("note")) out << "  (" << v["note"].get<std::string>() << ")";
  out << "\n";
  return out.str();
}

inline std::string render_suite_text(const Json& rep) {
  std::ostringstream out;
  out << "suite " << rep["suite"].get<std::string>() << " over " << rep["algebras"].size()
      << " algebra(s), field F_" << rep["config"]["field"].get<unsigned>() << "\n";
  for (const auto& a : rep["algebras"]) {
    out << "  " << a["name"].get<std::string>() << ": dim " << a["dim"].get<Index>()
        << ", pool " << a["pool_size"].get<size_t>()
        << (a["pool_complete"].get<bool>() ? " (complete)" : "") << "\n";
  }
  size_t consistent = 0, failed = 0, na = 0;
  for (const auto& v : rep["theorems"]) {
    if (!v["applicable"].get<bool>())
      ++na;
    else if (v["consistent"].get<bool>())
      ++consistent;
    else
      ++failed;
  }
  out << "verdicts: " << consistent << " consistent, " << failed << " inconsistent, " << na
      << " inapplicable\n";
  for (const auto& v : rep["theorems"])
    if (v["applicable"].get<bool>() && !v["consistent"].get<bool>())
      out << "  " << render_verdict_text(v);
  if (!rep["counterexample_candidates"].empty()) {
    out << "counterexample candidates:\n";
    for (const auto& c : rep["counterexample_candidates"])
      out << "  " << c.get<std::string>() << "\n";
  }
  if (!rep["unknown_reports"].empty()) {
    out << "unknown (not asserted):\n";
    for (const auto& c : rep["unknown_reports"]) out << "  " << c.get<std::string>() << "\n";
  }
  return out.str();
}

inline std::string render_classification_text(const Json& c) {
  std::ostringstream out;
  out << "module " << c["id"].get<std::string>() << " (dim " << c["dim"].get<Index>() << ")\n";
  for (const char* flag : {"faithful", "rigid", "tau_rigid", "partial_one_tilting", "one_tilting",
                           "tau_tilting", "support_tau_tilting"})
    out << "  " << flag << ": " << (c[flag].get<bool>() ? "yes" : "no") << "\n";
  out << "  self_orthogonal: " << c["self_orthogonal"]["status"].get<std::string>() << "\n";
  out << "  |T| = "
      << (c["summand_count"].is_null() ? std::string("unknown")
                                       : std::to_string(c["summand_count"].get<Index>()))
      << ", |A/Ann T| = " << c["quotient_simple_count"].get<Index>() << "\n";
  out << "  dim Ann = " << c["ann_dim"].get<Index>()
      << (c["ann_nilpotent"].get<bool>() ? " (nilpotent)" : "") << "\n";
  out << "  dim Ann (x) T = " << c["tensor_ann_dim"].get<Index>()
      << ", dim Tor_1(Ann, T) = " << c["tor1_ann_dim"].get<Index>() << "\n";
  return out.str();
}

}  // namespace cli_detail

template <unsigned P>
CliResult run_request(const CliRequest& req) {
  using S = Fp<P>;
  CliResult res;
  try {
    if (req.command == "classify") {
      if (req.entries.size() != 1 || !req.module_file)
        return CliResult{2, "error: classify needs one algebra file and one module file\n"};
      auto alg = build_corpus_algebra<S>(req.entries.front());
      Module<S> t = module_from_file(alg, *req.module_file);
      ClassifyOptions copts;
      copts.horizon = req.horizon;
      copts.search.seed = req.seed + 1;
      auto crep = classify(t, copts);
      crep.id = req.module_file->name;
      Json rep;
      rep["schema"] = 1;
      rep["tool"] = "tautilt";
      rep["version"] = tool_version();
      rep["seed"] = req.seed;
      rep["algebra"] =
          Json{{"name", req.entries.front().name}, {"dim", alg->dim}, {"simple_count", alg->simple_count()}};
      rep["classification"] = to_json(crep);
      rep["theorems"] = Json::array();
      rep["theorems"].push_back(to_json(check_tau_tilting_via_quotient(t, copts)));
      rep["theorems"].push_back(to_json(check_one_tilting_via_tor(t, copts, req.seed + 17)));
      rep["theorems"].push_back(to_json(check_classical(t, copts)));
      bool inconsistent = false;
      for (const auto& v : rep["theorems"])
        if (v["applicable"].get<bool>() && !v["consistent"].get<bool>()) inconsistent = true;
      res.exit_code = inconsistent ? 1 : (crep.uncertain ? 3 : 0);
      if (req.format == "json") {
        res.output = rep.dump(2) + "\n";
      } else {
        std::ostringstream out;
        out << cli_detail::render_classification_text(rep["classification"]);
        for (const auto& v : rep["theorems"]) out << cli_detail::render_verdict_text(v);
        res.output = out.str();
      }
      return res;
    }
    if (req.command == "enumerate") {
      if (req.entries.size() != 1)
        return CliResult{2, "error: enumerate needs exactly one algebra\n"};
      auto alg = build_corpus_algebra<S>(req.entries.front());
      EnumerationOptions eopts;
      eopts.search.seed = req.seed + 1;
      auto pool = enumerate_modules(alg, req.max_dim, eopts);
      Json rep;
      rep["schema"] = 1;
      rep["tool"] = "tautilt";
      rep["version"] = tool_version();
      rep["seed"] = req.seed;
      rep["algebra"] = req.entries.front().name;
      rep["max_dim"] = req.max_dim;
      rep["candidates_scanned"] = pool.candidates_scanned;
      rep["modules"] = Json::array();
      for (size_t i = 0; i < pool.modules.size(); ++i) {
        Json m;
        m["id"] = "M" + std::to_string(i);
        m["dim"] = pool.modules[i].dim;
        m["dimension_vector"] = dimension_vector(pool.modules[i]);
        m["mod"] = write_module_file(pool.modules[i], "M" + std::to_string(i),
                                     req.entries.front().name);
        rep["modules"].push_back(std::move(m));
      }
      auto en = enumerate_tau_tilting(alg, pool.modules);
      rep["tau_tilting"] = Json::array();
      for (const auto& combo : en.tau_tilting) rep["tau_tilting"].push_back(combo);
      rep["support_tau_tilting_count"] = en.support_tau_tilting.size();
      if (req.format == "json") {
        res.output = rep.dump(2) + "\n";
      } else {
        std::ostringstream out;
        out << pool.modules.size() << " indecomposable(s) up to dim " << req.max_dim << " over "
            << req.entries.front().name << "\n";
        for (const auto& m : rep["modules"])
          out << "  " << m["id"].get<std::string>() << ": dim " << m["dim"].get<Index>() << "\n";
        out << en.tau_tilting.size() << " basic tau-tilting, " << en.support_tau_tilting.size()
            << " basic support tau-tilting module(s)\n";
        res.output = out.str();
      }
      return res;
    }
    if (req.command == "suite") {
      SuiteConfig cfg;
      cfg.suite = req.suite;
      cfg.seed = req.seed;
      cfg.horizon = req.horizon;
      cfg.max_dim = req.max_dim;
      cfg.budget = req.budget;
      cfg.jobs = req.jobs;
      auto outcome = run_suite<S>(req.entries, cfg);
      res.exit_code = outcome.exit_code;
      res.output = req.format == "json" ? outcome.report.dump(2) + "\n"
                                        : cli_detail::render_suite_text(outcome.report);
      return res;
    }
    return CliResult{2, "error: unknown command '" + req.command + "'\n"};
  } catch (const ParseError& e) {
    return CliResult{2, std::string("parse error: ") + e.what() + "\n"};
  } catch (const ValidationError& e) {
    return CliResult{2, std::string("input error: ") + e.what() + "\n"};
  } catch (const PreconditionError& e) {
    return CliResult{2, std::string("input error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return CliResult{2, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace tautilt

// Type-erased boundary between the command-line front end and the templated
// library: the front end parses files and flags (no field arithmetic), the
// per-prime translation units instantiate the math.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tautilt/corpus.hpp"
#include "tautilt/formats.hpp"

namespace tautilt {

struct CliRequest {
  std::string command;  // classify | enumerate | suite
  std::string suite = "thm1";
  std::vector<CorpusEntry> entries;
  std::optional<ModuleFile> module_file;
  std::uint64_t seed = 0;
  Index horizon = 20;
  Index max_dim = 4;
  int budget = 64;
  int jobs = 1;
  std::string format = "json";
};

struct CliResult {
  int exit_code = 0;
  std::string output;
};

template <unsigned P>
CliResult run_request(const CliRequest& req);

extern template CliResult run_request<2>(const CliRequest&);
extern template CliResult run_request<3>(const CliRequest&);
extern template CliResult run_request<5>(const CliRequest&);
extern template CliResult run_request<7>(const CliRequest&);
extern template CliResult run_request<11>(const CliRequest&);
extern template CliResult run_request<13>(const CliRequest&);

inline CliResult dispatch_request(unsigned prime, const CliRequest& req) {
  switch (prime) {
    case 2: return run_request<2>(req);
    case 3: return run_request<3>(req);
    case 5: return run_request<5>(req);
    case 7: return run_request<7>(req);
    case 11: return run_request<11>(req);
    case 13: return run_request<13>(req);
    default:
      return CliResult{2, "error: unsupported field characteristic " + std::to_string(prime) +
                              " (supported: 2, 3, 5, 7, 11, 13)\n"};
  }
}

}  // namespace tautilt

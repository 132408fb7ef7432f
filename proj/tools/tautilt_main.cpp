// Command-line front end: classify single modules, enumerate indecomposables,
// and run the verification suites over built-in families or .alg files.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "driver.hpp"

namespace {

using namespace tautilt;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

/// Family specs: linear-a:N, nakayama-cyclic:N,T, truncated-local:N,
/// zero-relation-a3.
CorpusEntry parse_family(const std::string& spec) {
  auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  std::vector<int> args;
  if (colon != std::string::npos) {
    std::istringstream ss(spec.substr(colon + 1));
    std::string piece;
    while (std::getline(ss, piece, ',')) args.push_back(std::stoi(piece));
  }
  if (head == "linear-a" && args.size() == 1) return linear_a(args[0]);
  if (head == "nakayama-cyclic" && args.size() == 2) return nakayama_cyclic(args[0], args[1]);
  if (head == "truncated-local" && args.size() == 1) return truncated_local(args[0]);
  if (head == "zero-relation-a3" && args.empty()) return zero_relation_a3();
  throw ValidationError("unknown family '" + spec +
                        "' (try linear-a:N, nakayama-cyclic:N,T, truncated-local:N, "
                        "zero-relation-a3)");
}

struct CommonArgs {
  std::vector<std::string> families;
  std::vector<std::string> alg_files;
  unsigned field = 2;
  std::uint64_t seed = 0;
  int horizon = 20;
  int max_dim = 4;
  int budget = 64;
  int jobs = 1;
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_families) {
  if (with_families) {
    cmd->add_option("--family", args.families, "built-in algebra family spec (repeatable)");
    cmd->add_option("--field", args.field, "field characteristic for families")->default_val(2);
  }
  cmd->add_option("--alg", args.alg_files, "bound quiver algebra file (.alg)");
  cmd->add_option("--seed", args.seed, "random seed for sampled searches")->default_val(0);
  cmd->add_option("--horizon", args.horizon, "Ext/syzygy horizon")->default_val(20);
  cmd->add_option("--max-dim", args.max_dim, "enumeration dimension cap")->default_val(4);
  cmd->add_option("--budget", args.budget, "delooping witness budget")->default_val(64);
  cmd->add_option("--jobs", args.jobs, "worker count for independent checks")->default_val(1);
  cmd->add_option("--format", args.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("json");
  cmd->add_option("--out", args.out_path, "write the report here instead of stdout");
}

int finish(const CliResult& res, const std::string& out_path) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    out << res.output;
  } else {
    std::cout << res.output;
  }
  return res.exit_code;
}

// Resolves entries and the field; user files fix the prime, families use --field.
unsigned resolve_entries(const CommonArgs& args, CliRequest& req, bool default_corpus) {
  unsigned prime = args.field;
  bool prime_from_file = false;
  for (const auto& f : args.families) req.entries.push_back(parse_family(f));
  for (const auto& path : args.alg_files) {
    AlgebraFile af = parse_algebra_file(read_file(path), path);
    if (af.name == path) af.name = file_stem(path);
    if (prime_from_file && af.prime != prime)
      throw ValidationError("algebra files disagree on the field characteristic");
    if (!args.families.empty() && af.prime != prime)
      throw ValidationError("algebra file field differs from --field");
    prime = af.prime;
    prime_from_file = true;
    req.entries.push_back(CorpusEntry{af.name, af.pres, std::nullopt});
  }
  if (req.entries.empty() && default_corpus)
    for (const auto& e : standard_corpus()) req.entries.push_back(e);
  return prime;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tau-tilting classification and verification over bound quiver algebras"};
  app.require_subcommand(1);

  CommonArgs classify_args, enum_args, suite_args;
  std::string mod_path, suite_name = "thm1";

  auto* classify_cmd = app.add_subcommand("classify", "classify one module from a .mod file");
  add_common(classify_cmd, classify_args, false);
  classify_cmd->add_option("--mod", mod_path, "module file (.mod)")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "list indecomposables up to --max-dim");
  add_common(enum_cmd, enum_args, true);

  auto* suite_cmd = app.add_subcommand("suite", "run a verification suite over a corpus");
  add_common(suite_cmd, suite_args, true);
  suite_cmd->add_option("--suite", suite_name, "thm1 | thm2 | counts | dell | conjectures")
      ->check(CLI::IsMember({"thm1", "thm2", "counts", "dell", "conjectures"}))
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    CliRequest req;
    CommonArgs* args = nullptr;
    if (classify_cmd->parsed()) {
      args = &classify_args;
      req.command = "classify";
    } else if (enum_cmd->parsed()) {
      args = &enum_args;
      req.command = "enumerate";
    } else {
      args = &suite_args;
      req.command = "suite";
      req.suite = suite_name;
    }
    req.seed = args->seed;
    req.horizon = args->horizon;
    req.max_dim = args->max_dim;
    req.budget = args->budget;
    req.jobs = args->jobs;
    req.format = args->format;
    const unsigned prime = resolve_entries(*args, req, req.command == "suite");
    if (req.command != "suite" && req.entries.size() != 1) {
      std::cerr << "error: " << req.command << " needs exactly one algebra\n";
      return 2;
    }
    if (classify_cmd->parsed()) {
      req.module_file =
          tautilt::parse_module_file(read_file(mod_path), mod_path, req.entries.front().pres);
      if (req.module_file->name.empty()) req.module_file->name = file_stem(mod_path);
    }
    return finish(tautilt::dispatch_request(prime, req), args->out_path);
  } catch (const tautilt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const tautilt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

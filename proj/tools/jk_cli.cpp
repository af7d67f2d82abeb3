// Command-line front end for the Jordan-Kronecker invariant engine.
//
// Subcommands:
//   analyze <pencil.json>   invariants of a raw pencil, with self-checks
//   rep <spec.json>         invariants of a representation pencil vs oracle
//   verify <config.json>    sweep a parameter grid and compare everywhere
//   oracle <spec.json>      print the closed-form prediction
//
// Output is JSON (one object per line); --table renders a human summary
// instead. Exit codes: 0 success/match, 1 oracle mismatch or failed check,
// 2 input error. JK_MINOR_CAP overrides the minor-oracle work cap.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "jk/verify.hpp"

namespace {

using jk::AnalysisOptions;
using jk::InputError;
using jk::Json;
using jk::TaskResult;

constexpr int kExitMatch = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError(path + ": cannot open file");
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

/** Honors the JK_MINOR_CAP override; rejects junk values as input errors. */
AnalysisOptions options_from_env() {
  AnalysisOptions options;
  const char* cap = std::getenv("JK_MINOR_CAP");
  if (cap != nullptr && *cap != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(cap, &end, 10);
    if (*end != '\0' || std::string(cap).find('-') != std::string::npos) {
      throw InputError("JK_MINOR_CAP: expected a nonnegative integer, got '" +
                       std::string(cap) + "'");
    }
    options.minor_cap = static_cast<std::uint64_t>(value);
  }
  return options;
}

std::string multiset_to_text(const jk::IndexMultiset& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += std::to_string(values[i]);
  }
  return out + "]";
}

void print_invariants_table(const jk::JKInvariants& inv) {
  std::cout << "rank        " << inv.rank << "\n";
  std::cout << "horizontal  " << multiset_to_text(inv.horizontal) << "\n";
  std::cout << "vertical    " << multiset_to_text(inv.vertical) << "\n";
  std::cout << "jordan      ";
  if (inv.jordan.empty()) {
    std::cout << "none";
  }
  for (std::size_t i = 0; i < inv.jordan.size(); ++i) {
    const jk::EigenClass& cls = inv.jordan[i];
    if (i > 0) {
      std::cout << "; ";
    }
    if (cls.at_infinity) {
      std::cout << "infinity";
    } else {
      std::cout << "degree-" << cls.poly.degree() << " class";
    }
    std::cout << " sizes " << multiset_to_text(cls.sizes);
  }
  std::cout << "\n";
}

void print_task_table(const TaskResult& result) {
  std::cout << jk::describe(result.spec) << "  " << result.pair_source << "  "
            << (result.match ? "MATCH" : "MISMATCH");
  if (result.attempts > 1) {
    std::cout << "  attempts=" << result.attempts;
  }
  std::cout << "\n";
  for (const std::string& d : result.discrepancies) {
    std::cout << "  discrepancy: " << d << "\n";
  }
  for (const std::string& a : result.anomalies) {
    std::cout << "  anomaly: " << a << "\n";
  }
  for (const std::string& n : result.notes) {
    std::cout << "  note: " << n << "\n";
  }
}

// ===== analyze =====

int cmd_analyze(const std::string& path, bool table) {
  const jk::Pencil pencil = jk::pencil_from_json(load_json(path));
  const jk::JKInvariants inv = jk::jk_invariants(pencil);
  const AnalysisOptions options = options_from_env();
  const std::string totals = jk::totals_identity_status(pencil, inv);
  const std::string oracle =
      jk::minor_oracle_status(pencil, inv, options.minor_cap);

  if (table) {
    print_invariants_table(inv);
    std::cout << "totals identity  " << totals << "\n";
    std::cout << "minor oracle     " << oracle << "\n";
  } else {
    std::cout << jk::jk_invariants_to_json(inv).dump() << "\n";
    Json checks;
    checks["totals_identity"] = totals;
    checks["minor_oracle"] = oracle;
    std::cout << checks.dump() << "\n";
  }
  const bool ok = totals == "ok" && oracle != "mismatch";
  return ok ? kExitMatch : kExitMismatch;
}

// ===== rep =====

int cmd_rep(const std::string& path, bool canonical, bool have_seed,
            std::uint64_t seed, long bound, const std::string& points_path,
            bool table) {
  const jk::RepSpec spec = jk::rep_spec_from_json(load_json(path));
  const AnalysisOptions options = options_from_env();

  TaskResult result;
  if (!points_path.empty()) {
    if (canonical || have_seed) {
      throw InputError("--points excludes --canonical and --seed");
    }
    const Json points = load_json(points_path);
    const jk::QMatrix x = jk::point_from_json(
        jk::detail::require_field(points, "x", "points"), "points.x");
    const jk::QMatrix a = jk::point_from_json(
        jk::detail::require_field(points, "a", "points"), "points.a");
    result = jk::analyze_at_points(spec, x, a, options);
  } else if (have_seed) {
    if (canonical) {
      throw InputError("--seed excludes --canonical");
    }
    jk::PairSource source;
    source.kind = jk::PairSource::Kind::kRandom;
    source.bound = bound;
    result = jk::analyze_task(spec, source, seed, options);
  } else {
    result = jk::analyze_task(spec, jk::PairSource{}, 0, options);
  }

  if (table) {
    print_task_table(result);
    print_invariants_table(result.computed);
  } else {
    std::cout << jk::task_result_to_json(result).dump() << "\n";
  }
  return result.match && result.anomalies.empty() ? kExitMatch
                                                  : kExitMismatch;
}

// ===== verify =====

int cmd_verify(const std::string& path, std::size_t jobs, bool jobs_set,
               bool fail_fast, bool table) {
  jk::SweepConfig config = jk::sweep_config_from_json(load_json(path));
  if (jobs_set) {
    config.parallelism = jobs;
  }
  if (fail_fast) {
    config.fail_fast = true;
  }
  const jk::VerifyOutcome outcome =
      jk::run_sweep(config, options_from_env());

  if (table) {
    for (const TaskResult& result : outcome.results) {
      print_task_table(result);
    }
    std::cout << "total " << outcome.summary.total << ", matched "
              << outcome.summary.matched << ", mismatched "
              << outcome.summary.mismatched << ", anomalies "
              << outcome.summary.anomalies << "\n";
  } else {
    for (const TaskResult& result : outcome.results) {
      std::cout << jk::task_result_to_json(result).dump() << "\n";
    }
    std::cout << jk::verify_summary_to_json(outcome.summary).dump() << "\n";
  }
  const bool ok =
      outcome.summary.mismatched == 0 && outcome.summary.anomalies == 0;
  return ok ? kExitMatch : kExitMismatch;
}

// ===== oracle =====

int cmd_oracle(const std::string& path, bool table) {
  const jk::RepSpec spec = jk::rep_spec_from_json(load_json(path));
  const jk::PredictedJK pred = jk::predict_for(spec);
  if (table) {
    std::cout << jk::describe(spec) << "\n";
    std::cout << "horizontal  " << multiset_to_text(pred.horizontal) << "\n";
    std::cout << "vertical    " << multiset_to_text(pred.vertical) << "\n";
    std::cout << "jordan      " << pred.jordan.distinct_eigenvalues
              << " eigenvalues, blocks "
              << multiset_to_text(pred.jordan.blocks_per_eigenvalue) << "\n";
  } else {
    std::cout << jk::predicted_to_json(pred).dump() << "\n";
  }
  return kExitMatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan-Kronecker invariants of matrix pencils"};
  app.require_subcommand(1);
  bool table = false;
  app.add_flag("--table", table, "human-readable output instead of JSON");

  std::string analyze_path;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "invariants of a pencil given as JSON");
  analyze->add_option("pencil", analyze_path, "pencil JSON file")->required();

  std::string rep_path;
  std::string points_path;
  bool canonical = false;
  std::uint64_t seed = 0;
  long bound = 10;
  CLI::App* rep = app.add_subcommand(
      "rep", "invariants of a representation pencil, checked against the "
             "closed-form prediction");
  rep->add_option("spec", rep_path, "representation spec JSON file")
      ->required();
  rep->add_flag("--canonical", canonical,
                "use the canonical pair (default)");
  CLI::Option* seed_opt =
      rep->add_option("--seed", seed, "draw a random pair from this seed");
  rep->add_option("--bound", bound, "random entry bound (default 10)")
      ->check(CLI::PositiveNumber);
  rep->add_option("--points", points_path,
                  "JSON file with explicit points {\"x\": ..., \"a\": ...}");

  std::string verify_path;
  std::size_t jobs = 0;
  bool fail_fast = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "sweep a family/parameter grid and compare everywhere");
  verify->add_option("config", verify_path, "sweep config JSON file")
      ->required();
  CLI::Option* jobs_opt =
      verify->add_option("--jobs", jobs, "worker threads (default: cores)");
  verify->add_flag("--fail-fast", fail_fast, "stop at the first mismatch");

  std::string oracle_path;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "closed-form prediction for a representation spec");
  oracle->add_option("spec", oracle_path, "representation spec JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitMatch : kExitInputError;
  }

  try {
    if (*analyze) {
      return cmd_analyze(analyze_path, table);
    }
    if (*rep) {
      return cmd_rep(rep_path, canonical, seed_opt->count() > 0, seed, bound,
                     points_path, table);
    }
    if (*verify) {
      return cmd_verify(verify_path, jobs, jobs_opt->count() > 0, fail_fast,
                        table);
    }
    if (*oracle) {
      return cmd_oracle(oracle_path, table);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

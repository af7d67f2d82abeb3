#ifndef JK_VERIFY_HPP
#define JK_VERIFY_HPP

/**
 * Sweep verification engine: expand a configured family/parameter grid into
 * tasks, analyze each pencil, compare against the closed-form prediction,
 * run the structural cross-checks, and merge everything into a deterministic
 * report stream.
 *
 * A task is pure (no shared state), so the engine fans tasks out over a
 * thread pool and merges results by task position; two runs with the same
 * config produce byte-identical reports regardless of the job count.
 */

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "jk/jk_invariants.hpp"
#include "jk/json_io.hpp"
#include "jk/minor_charpoly.hpp"
#include "jk/oracle.hpp"
#include "jk/pencil.hpp"
#include "jk/poly_gcd.hpp"
#include "jk/prng.hpp"
#include "jk/rep_catalog.hpp"
#include "jk/rep_spec.hpp"

namespace jk {

/** Where the (x, a) pairs of a sweep come from. */
struct PairSource {
  enum class Kind { kCanonical, kRandom };
  Kind kind = Kind::kCanonical;
  std::vector<std::uint64_t> seeds;  // random only; one task per seed
  long bound = 10;                   // random only; entries in [-bound, bound]
};

/** A validated, fully expanded sweep configuration. */
struct SweepConfig {
  std::vector<RepSpec> specs;  // ordered by task key
  PairSource source;
  std::size_t parallelism = 0;  // 0: use the hardware concurrency
  bool fail_fast = false;
};

/** Tuning knobs shared by the sweep engine and the single-pencil commands. */
struct AnalysisOptions {
  std::uint64_t minor_cap = kDefaultMinorCap;
  bool run_minor_oracle = true;
};

/** Outcome of one (spec, pair) task: oracle verdict plus structural checks. */
struct TaskResult {
  RepSpec spec;
  std::string pair_source;
  bool match = false;
  std::size_t attempts = 1;
  std::vector<std::string> discrepancies;
  std::vector<std::string> anomalies;
  std::vector<std::string> notes;
  std::string minor_oracle;  // ok | mismatch | skipped
  JKInvariants computed;     // from the final attempt
  PredictedJK predicted;
};

struct VerifySummary {
  std::size_t total = 0;
  std::size_t matched = 0;
  std::size_t mismatched = 0;
  std::size_t anomalies = 0;  // tasks with at least one structural anomaly
};

struct VerifyOutcome {
  std::vector<TaskResult> results;
  VerifySummary summary;
};

namespace detail {

/** Deterministically derives the k-th auxiliary seed from a task seed. */
inline std::uint64_t derive_seed(std::uint64_t seed, std::size_t k) {
  SplitMix64 rng(seed);
  std::uint64_t value = rng.next();
  for (std::size_t i = 0; i < k; ++i) {
    value = rng.next();
  }
  return value;
}

inline std::size_t count_equal(const IndexMultiset& values, int target) {
  return static_cast<std::size_t>(
      std::count(values.begin(), values.end(), target));
}

/** Task ordering key: family, group, parameters. */
inline std::tuple<std::string, std::string, std::size_t, std::size_t>
task_key(const RepSpec& spec) {
  return {family_name(spec.family),
          is_congruence_family(spec.family) ? group_name(spec.group) : "",
          spec.n, spec.m};
}

}  // namespace detail

// ===== configuration =====

/**
 * Parses and expands a sweep configuration. Families are given as range
 * templates ({"family", "n_min".."n_max" or "n_values", "m_min".."m_max",
 * "group"}); every expanded spec is validated, so a range touching an invalid
 * parameter set (say an odd symplectic dimension) is a config error.
 */
inline SweepConfig sweep_config_from_json(const Json& j) {
  SweepConfig config;
  const Json& families = detail::require_field(j, "families", "config");
  if (!families.is_array() || families.empty()) {
    throw InputError("config.families: expected a non-empty array");
  }
  for (std::size_t i = 0; i < families.size(); ++i) {
    const std::string context = "config.families[" + std::to_string(i) + "]";
    const Json& entry = families[i];
    const Json& family_json = detail::require_field(entry, "family", context);
    if (!family_json.is_string()) {
      throw InputError(context + ".family: expected a string");
    }
    const RepFamily family = family_from_name(family_json.get<std::string>());

    GroupKind group = GroupKind::kGl;
    if (is_congruence_family(family)) {
      const Json& group_json = detail::require_field(entry, "group", context);
      if (!group_json.is_string()) {
        throw InputError(context + ".group: expected a string");
      }
      group = group_from_name(group_json.get<std::string>());
    } else if (entry.contains("group")) {
      throw InputError(context + ".group: only congruence families take a "
                       "group");
    }

    std::vector<std::size_t> n_values;
    if (entry.contains("n_values")) {
      if (entry.contains("n_min") || entry.contains("n_max")) {
        throw InputError(context + ": use n_values or n_min/n_max, not both");
      }
      const Json& values = entry["n_values"];
      if (!values.is_array() || values.empty()) {
        throw InputError(context + ".n_values: expected a non-empty array");
      }
      for (std::size_t k = 0; k < values.size(); ++k) {
        n_values.push_back(detail::parse_size(
            values[k], context + ".n_values[" + std::to_string(k) + "]"));
      }
    } else {
      const std::size_t n_min = detail::parse_size(
          detail::require_field(entry, "n_min", context), context + ".n_min");
      const std::size_t n_max = detail::parse_size(
          detail::require_field(entry, "n_max", context), context + ".n_max");
      if (n_min > n_max) {
        throw InputError(context + ": empty range n_min > n_max");
      }
      for (std::size_t n = n_min; n <= n_max; ++n) {
        n_values.push_back(n);
      }
    }

    std::vector<std::size_t> m_values;
    if (is_sum_family(family)) {
      const std::size_t m_min = detail::parse_size(
          detail::require_field(entry, "m_min", context), context + ".m_min");
      const std::size_t m_max = detail::parse_size(
          detail::require_field(entry, "m_max", context), context + ".m_max");
      if (m_min > m_max) {
        throw InputError(context + ": empty range m_min > m_max");
      }
      for (std::size_t m = m_min; m <= m_max; ++m) {
        m_values.push_back(m);
      }
    } else {
      if (entry.contains("m_min") || entry.contains("m_max")) {
        throw InputError(context + ": only sum families take m ranges");
      }
      m_values.push_back(0);
    }

    for (std::size_t n : n_values) {
      for (std::size_t m : m_values) {
        RepSpec spec;
        spec.family = family;
        spec.n = n;
        spec.m = m;
        spec.group = group;
        try {
          validate_spec(spec);
        } catch (const InputError& e) {
          throw InputError(context + ": " + e.what());
        }
        config.specs.push_back(spec);
      }
    }
  }
  std::stable_sort(config.specs.begin(), config.specs.end(),
                   [](const RepSpec& a, const RepSpec& b) {
                     return detail::task_key(a) < detail::task_key(b);
                   });

  const Json& source = detail::require_field(j, "pair_source", "config");
  const Json& kind = detail::require_field(source, "kind", "config.pair_source");
  if (kind == "canonical") {
    config.source.kind = PairSource::Kind::kCanonical;
  } else if (kind == "random") {
    config.source.kind = PairSource::Kind::kRandom;
    const Json& seeds =
        detail::require_field(source, "seeds", "config.pair_source");
    if (!seeds.is_array() || seeds.empty()) {
      throw InputError("config.pair_source.seeds: expected a non-empty array");
    }
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      if (!seeds[i].is_number_integer() ||
          (!seeds[i].is_number_unsigned() &&
           seeds[i].get<std::int64_t>() < 0)) {
        throw InputError("config.pair_source.seeds[" + std::to_string(i) +
                         "]: expected a nonnegative integer");
      }
      config.source.seeds.push_back(seeds[i].get<std::uint64_t>());
    }
    if (source.contains("bound")) {
      const std::size_t bound =
          detail::parse_size(source["bound"], "config.pair_source.bound");
      if (bound == 0) {
        throw InputError("config.pair_source.bound: must be positive");
      }
      config.source.bound = static_cast<long>(bound);
    }
  } else {
    throw InputError("config.pair_source.kind: expected canonical or random");
  }

  if (j.contains("parallelism")) {
    config.parallelism =
        detail::parse_size(j["parallelism"], "config.parallelism");
  }
  if (j.contains("fail_fast")) {
    if (!j["fail_fast"].is_boolean()) {
      throw InputError("config.fail_fast: expected a boolean");
    }
    config.fail_fast = j["fail_fast"].get<bool>();
  }
  return config;
}

// ===== single-task analysis =====

/** Verifies a computed decomposition against the independent minor-gcd
 * characteristic polynomial: the finite part must equal the product of the
 * class polynomials with multiplicity, and the infinity exponent the total
 * size at infinity. Returns "ok", "mismatch", or "skipped" (over the cap). */
inline std::string minor_oracle_status(const Pencil& p,
                                       const JKInvariants& inv,
                                       std::uint64_t cap = kDefaultMinorCap) {
  CharPoly oracle;
  try {
    oracle = charpoly_via_minor_gcd(p, cap);
  } catch (const OracleTooLarge&) {
    return "skipped";
  }
  UniPoly product = UniPoly({Rational(1)});
  int inf_total = 0;
  for (const EigenClass& cls : inv.jordan) {
    int total = 0;
    for (int s : cls.sizes) {
      total += s;
    }
    if (cls.at_infinity) {
      inf_total = total;
    } else {
      for (int i = 0; i < total; ++i) {
        product = product * cls.poly;
      }
    }
  }
  const bool agrees = oracle.finite_part == product.monic() &&
                      oracle.inf_exponent == inf_total;
  return agrees ? "ok" : "mismatch";
}

/** Re-runs the block-totals identities; "ok" unless the invariants were
 * tampered with after construction. */
inline std::string totals_identity_status(const Pencil& p,
                                          const JKInvariants& inv) {
  try {
    detail::check_block_totals(inv, p.rows(), p.cols());
  } catch (const InternalError&) {
    return "failed";
  }
  return "ok";
}

namespace detail {

/** Structural cross-checks on a computed decomposition. Every law here holds
 * for arbitrary pairs except the regular-dimension law, which needs the
 * canonical (provably regular) point. */
inline std::vector<std::string> structural_anomalies(
    const RepSpec& spec, const QMatrix& x, const QMatrix& a,
    const JKInvariants& inv, bool canonical_point,
    const AnalysisOptions& options, std::string* minor_status) {
  std::vector<std::string> anomalies;

  // Trivial-block counts: horizontal 1s span the common stabilizer and
  // vertical 1s the cokernel of the summed images.
  const std::size_t h_ones = count_equal(inv.horizontal, 1);
  const std::size_t v_ones = count_equal(inv.vertical, 1);
  const std::size_t common_dim = common_stabilizer_dim(spec, x, a);
  const std::size_t image_codim = image_sum_codim(spec, x, a);
  if (h_ones != common_dim) {
    anomalies.push_back("trivial horizontal count " + std::to_string(h_ones) +
                        " != common stabilizer dim " +
                        std::to_string(common_dim));
  }
  if (v_ones != image_codim) {
    anomalies.push_back("trivial vertical count " + std::to_string(v_ones) +
                        " != image sum codim " + std::to_string(image_codim));
  }

  // Regular-dimension law at the canonical point.
  if (canonical_point) {
    const std::size_t stab = stabilizer_dim(spec, x);
    const std::size_t codim = orbit_codim(spec, x);
    if (inv.horizontal.size() != stab) {
      anomalies.push_back("horizontal count " +
                          std::to_string(inv.horizontal.size()) +
                          " != stabilizer dim " + std::to_string(stab));
    }
    if (inv.vertical.size() != codim) {
      anomalies.push_back("vertical count " +
                          std::to_string(inv.vertical.size()) +
                          " != orbit codim " + std::to_string(codim));
    }
  }

  // Large modules force trivial vertical blocks.
  const std::size_t dim_v = module_dim(spec);
  const std::size_t dim_g = lie_dim(spec);
  if (dim_v > 2 * dim_g && v_ones < dim_v - 2 * dim_g) {
    anomalies.push_back("trivial vertical count " + std::to_string(v_ones) +
                        " below guaranteed " +
                        std::to_string(dim_v - 2 * dim_g));
  }

  // Independent characteristic-polynomial oracle, when affordable.
  std::string status = "skipped";
  if (options.run_minor_oracle) {
    status = minor_oracle_status(rep_pencil(spec, x, a), inv,
                                 options.minor_cap);
    if (status == "mismatch") {
      anomalies.push_back("minor-gcd oracle disagrees with invariant "
                          "factors");
    }
  }
  if (minor_status != nullptr) {
    *minor_status = status;
  }
  return anomalies;
}

}  // namespace detail

/**
 * Analyzes one task. Canonical sources are deterministic, except that the
 * triangular family's companion point is seeded random (the theorem needs a
 * generic second point), so it is redrawn on mismatch; random sources redraw
 * both points from derived seeds. At most five attempts, final one reported.
 */
inline TaskResult analyze_task(const RepSpec& spec, const PairSource& source,
                               std::uint64_t seed,
                               const AnalysisOptions& options) {
  TaskResult result;
  result.spec = spec;
  const bool canonical = source.kind == PairSource::Kind::kCanonical;
  result.pair_source = canonical ? "canonical" : "random:" + std::to_string(seed);
  result.predicted = predict_for(spec);

  const bool retry_capable =
      !canonical || spec.family == RepFamily::kBSum;
  const std::size_t max_attempts = retry_capable ? 5 : 1;

  QMatrix x(0, 0);
  QMatrix a(0, 0);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    if (canonical) {
      std::tie(x, a) = canonical_pair(spec, attempt);
    } else {
      x = random_point(spec, detail::derive_seed(seed, 2 * attempt),
                       source.bound);
      a = random_point(spec, detail::derive_seed(seed, 2 * attempt + 1),
                       source.bound);
    }
    result.computed = jk_invariants(rep_pencil(spec, x, a));
    const MatchReport report = compare(result.predicted,
                                       summarize(result.computed));
    result.match = report.match;
    result.discrepancies = report.discrepancies;
    result.attempts = attempt + 1;
    if (result.match) {
      break;
    }
  }

  result.anomalies =
      detail::structural_anomalies(spec, x, a, result.computed, canonical,
                                   options, &result.minor_oracle);
  if (spec.family == RepFamily::kBSum && spec.m <= spec.n) {
    result.notes.push_back(
        "jordan blocks interpreted as size 1; theorem statement omits sizes");
  }
  return result;
}

/**
 * Analyzes one task at user-supplied points (single attempt; only the laws
 * valid for arbitrary pairs are checked, since nothing guarantees the points
 * are regular).
 */
inline TaskResult analyze_at_points(const RepSpec& spec, const QMatrix& x,
                                    const QMatrix& a,
                                    const AnalysisOptions& options) {
  validate_point(spec, x);
  validate_point(spec, a);
  TaskResult result;
  result.spec = spec;
  result.pair_source = "points";
  result.predicted = predict_for(spec);
  result.computed = jk_invariants(rep_pencil(spec, x, a));
  const MatchReport report =
      compare(result.predicted, summarize(result.computed));
  result.match = report.match;
  result.discrepancies = report.discrepancies;
  result.anomalies = detail::structural_anomalies(
      spec, x, a, result.computed, /*canonical_point=*/false, options,
      &result.minor_oracle);
  if (spec.family == RepFamily::kBSum && spec.m <= spec.n) {
    result.notes.push_back(
        "jordan blocks interpreted as size 1; theorem statement omits sizes");
  }
  return result;
}

/** Serializes one task result as a MatchReport object. */
inline Json task_result_to_json(const TaskResult& result) {
  Json out;
  out["spec"] = rep_spec_to_json(result.spec);
  out["pair_source"] = result.pair_source;
  out["verdict"] = result.match ? "match" : "mismatch";
  out["discrepancies"] = result.discrepancies;
  if (result.attempts > 1) {
    out["attempts"] = result.attempts;
  }
  if (!result.anomalies.empty()) {
    out["anomalies"] = result.anomalies;
  }
  if (!result.notes.empty()) {
    out["notes"] = result.notes;
  }
  out["minor_oracle"] = result.minor_oracle;
  out["computed"] = jk_invariants_to_json(result.computed);
  out["predicted"] = predicted_to_json(result.predicted);
  return out;
}

// ===== sweep engine =====

inline VerifyOutcome run_sweep(const SweepConfig& config,
                               const AnalysisOptions& options) {
  struct Task {
    RepSpec spec;
    std::uint64_t seed = 0;
  };
  std::vector<Task> tasks;
  for (const RepSpec& spec : config.specs) {
    if (config.source.kind == PairSource::Kind::kRandom) {
      for (std::uint64_t seed : config.source.seeds) {
        tasks.push_back({spec, seed});
      }
    } else {
      tasks.push_back({spec, 0});
    }
  }

  VerifyOutcome outcome;
  outcome.results.resize(tasks.size());
  std::vector<bool> done(tasks.size(), false);

  if (config.fail_fast) {
    // Sequential in task order so the first failure is deterministic.
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      outcome.results[i] =
          analyze_task(tasks[i].spec, config.source, tasks[i].seed, options);
      done[i] = true;
      if (!outcome.results[i].match) {
        break;
      }
    }
  } else {
    std::size_t jobs = config.parallelism != 0
                           ? config.parallelism
                           : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, std::max<std::size_t>(tasks.size(), 1));
    if (jobs <= 1) {
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        outcome.results[i] =
            analyze_task(tasks[i].spec, config.source, tasks[i].seed, options);
        done[i] = true;
      }
    } else {
      std::atomic<std::size_t> next{0};
      const auto worker = [&]() {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) {
            return;
          }
          outcome.results[i] = analyze_task(tasks[i].spec, config.source,
                                            tasks[i].seed, options);
          done[i] = true;
        }
      };
      std::vector<std::thread> pool;
      pool.reserve(jobs);
      for (std::size_t t = 0; t < jobs; ++t) {
        pool.emplace_back(worker);
      }
      for (std::thread& t : pool) {
        t.join();
      }
    }
  }

  // Drop tasks skipped by fail-fast, then summarize.
  std::vector<TaskResult> kept;
  kept.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (done[i]) {
      kept.push_back(std::move(outcome.results[i]));
    }
  }
  outcome.results = std::move(kept);
  outcome.summary.total = outcome.results.size();
  for (const TaskResult& result : outcome.results) {
    if (result.match) {
      ++outcome.summary.matched;
    } else {
      ++outcome.summary.mismatched;
    }
    if (!result.anomalies.empty()) {
      ++outcome.summary.anomalies;
    }
  }
  return outcome;
}

inline Json verify_summary_to_json(const VerifySummary& summary) {
  Json out;
  out["total"] = summary.total;
  out["matched"] = summary.matched;
  out["mismatched"] = summary.mismatched;
  out["anomalies"] = summary.anomalies;
  return out;
}

}  // namespace jk

#endif  // JK_VERIFY_HPP

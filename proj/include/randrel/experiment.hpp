#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace randrel {

enum class ExperimentKind { Associativity, Flexible, Quasirandom };

/// Declarative Monte Carlo run, read from a JSON object whose keys are
/// exactly: kind, n_values, p | p_mode, trials, seed, epsilon, delta,
/// output_path.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Associativity;
  std::vector<std::size_t> n_values;
  std::optional<double> p;  // absent when critical_p is set
  bool critical_p = false;  // p_mode: "critical"
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  double epsilon = 0.1;
  double delta = 0.1;
  std::string output_path;

  /// Throws std::invalid_argument on unknown keys, missing keys or bad values.
  static ExperimentConfig from_json_text(std::string_view text);
  void validate() const;
  double p_for(std::size_t n) const;
};

struct TrialRecord {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t trial_index = 0;
  bool associative = false;
  bool paper_condition = false;
  bool extended_condition = false;
  std::size_t flexible_count = 0;
  std::optional<bool> quasirandom;
};

/// Samples trial i with seed trial_seed(seed, i) and analyses it. Trials are
/// spread over `workers` threads; the result is ordered by trial index.
/// Quasirandomness is evaluated only when `with_quasirandom` and n >= 3.
std::vector<TrialRecord> run_trials(std::size_t n, double p, std::uint64_t seed, std::size_t trials,
                                    bool with_quasirandom, double epsilon, double delta, unsigned workers);

struct ExperimentOutput {
  std::string csv;
  std::string per_trial_csv;
};

/// Aggregate CSV (one row per n, ascending) and per-trial CSV. Output is
/// byte-identical for equal configs, whatever the worker count.
ExperimentOutput run_experiment(const ExperimentConfig& cfg, unsigned workers = 1);

std::string csv_header(ExperimentKind kind);
inline constexpr std::string_view kPerTrialHeader =
    "n,p,trial_index,associative,paper_condition,extended_condition,flexible_count,quasirandom";

/// Shortest round-trip decimal form used in every CSV and JSON number.
std::string format_real(double value);

}  // namespace randrel

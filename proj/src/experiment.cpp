#include "randrel/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

#include "randrel/analysis.hpp"
#include "randrel/quasirandom.hpp"
#include "randrel/sampler.hpp"

namespace randrel {
namespace {

using nlohmann::json;

ExperimentKind parse_kind(const std::string& kind) {
  if (kind == "associativity") return ExperimentKind::Associativity;
  if (kind == "flexible") return ExperimentKind::Flexible;
  if (kind == "quasirandom") return ExperimentKind::Quasirandom;
  throw std::invalid_argument("unknown experiment kind '" + kind + "'");
}

TrialRecord analyse_trial(std::size_t n, double p, std::uint64_t seed, std::size_t index, bool with_quasirandom,
                          double epsilon, double delta) {
  const CycleStructure s = sample({n, p, trial_seed(seed, index)});
  const CompositionTable table = build_composition_table(s);

  TrialRecord r;
  r.n = n;
  r.p = p;
  r.trial_index = index;
  r.associative = !find_associativity_violation(table);
  r.paper_condition = witness_condition(table, false);
  r.extended_condition = witness_condition(table, true);
  r.flexible_count = flexible_atom_set(s).count();
  if (with_quasirandom && n >= 3) r.quasirandom = algebra_quasirandomness(s, p, epsilon, delta).algebra_quasirandom;
  return r;
}

std::string bool_field(bool b) { return b ? "1" : "0"; }

}  // namespace

std::string format_real(double value) { return fmt::format("{}", value); }

std::string csv_header(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Associativity:
      return "n,p,trials,seed,fail_assoc,fail_paper_cond,fail_extended_cond,empirical_fail_rate,union_bound,"
             "asymptotic_bound";
    case ExperimentKind::Flexible:
      return "n,p,trials,seed,mean_flexible,expected_flexible,stderr";
    case ExperimentKind::Quasirandom:
      return "n,p,trials,seed,epsilon,delta,fraction_quasirandom";
  }
  throw std::logic_error("unreachable experiment kind");
}

ExperimentConfig ExperimentConfig::from_json_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

  static const std::set<std::string> kKeys = {"kind",  "n_values", "p",     "p_mode",
                                              "trials", "seed",     "epsilon", "delta", "output_path"};
  for (const auto& [key, value] : j.items())
    if (!kKeys.count(key)) throw std::invalid_argument("unknown config key '" + key + "'");
  for (const char* key : {"kind", "n_values", "trials", "seed", "output_path"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing config key '") + key + "'");

  ExperimentConfig cfg;
  try {
    cfg.kind = parse_kind(j.at("kind").get<std::string>());
    for (const auto& n : j.at("n_values")) {
      if (!n.is_number_unsigned()) throw std::invalid_argument("n_values must hold positive integers");
      cfg.n_values.push_back(n.get<std::size_t>());
    }
    const auto& trials = j.at("trials");
    if (!trials.is_number_unsigned()) throw std::invalid_argument("trials must be a positive integer");
    cfg.trials = trials.get<std::size_t>();
    const auto& seed = j.at("seed");
    if (!seed.is_number_unsigned()) throw std::invalid_argument("seed must be a non-negative integer");
    cfg.seed = seed.get<std::uint64_t>();
    cfg.output_path = j.at("output_path").get<std::string>();

    const std::string mode = j.value("p_mode", std::string("literal"));
    if (mode == "critical") {
      if (j.contains("p")) throw std::invalid_argument("p must be absent when p_mode is 'critical'");
      cfg.critical_p = true;
    } else if (mode == "literal") {
      if (!j.contains("p")) throw std::invalid_argument("missing config key 'p'");
      cfg.p = j.at("p").get<double>();
    } else {
      throw std::invalid_argument("p_mode must be 'literal' or 'critical'");
    }
    if (j.contains("epsilon")) cfg.epsilon = j.at("epsilon").get<double>();
    if (j.contains("delta")) cfg.delta = j.at("delta").get<double>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config value: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

void ExperimentConfig::validate() const {
  if (n_values.empty()) throw std::invalid_argument("n_values must be non-empty");
  for (std::size_t n : n_values) {
    if (n == 0) throw std::invalid_argument("n_values must be positive");
    if (n > kMaxDiversityAtoms) throw std::invalid_argument("n exceeds the configured atom cap");
    if (kind == ExperimentKind::Quasirandom && n < 3)
      throw std::invalid_argument("quasirandom experiments need n >= 3");
  }
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (!critical_p && (!p || !(*p >= 0.0 && *p <= 1.0))) throw std::invalid_argument("p must lie in [0, 1]");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be non-negative");
}

double ExperimentConfig::p_for(std::size_t n) const { return critical_p ? randrel::critical_p(n) : *p; }

std::vector<TrialRecord> run_trials(std::size_t n, double p, std::uint64_t seed, std::size_t trials,
                                    bool with_quasirandom, double epsilon, double delta, unsigned workers) {
  std::vector<TrialRecord> records(trials);
  workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(trials, 1)));
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      records[i] = analyse_trial(n, p, seed, i, with_quasirandom, epsilon, delta);
  };
  if (workers == 1) {
    work(0, trials);
    return records;
  }
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w)
    threads.emplace_back(work, trials * w / workers, trials * (w + 1) / workers);
  for (auto& t : threads) t.join();
  return records;
}

ExperimentOutput run_experiment(const ExperimentConfig& cfg, unsigned workers) {
  cfg.validate();
  std::vector<std::size_t> ns = cfg.n_values;
  std::sort(ns.begin(), ns.end());

  ExperimentOutput out;
  out.csv = csv_header(cfg.kind) + "\n";
  out.per_trial_csv = std::string(kPerTrialHeader) + "\n";
  const bool quasi = cfg.kind == ExperimentKind::Quasirandom;
  const auto trials = static_cast<double>(cfg.trials);

  for (std::size_t n : ns) {
    const double p = cfg.p_for(n);
    const auto records = run_trials(n, p, cfg.seed, cfg.trials, quasi, cfg.epsilon, cfg.delta, workers);

    std::string row = fmt::format("{},{},{},{}", n, format_real(p), cfg.trials, cfg.seed);
    switch (cfg.kind) {
      case ExperimentKind::Associativity: {
        std::size_t fail_assoc = 0, fail_paper = 0, fail_ext = 0;
        for (const auto& r : records) {
          fail_assoc += !r.associative;
          fail_paper += !r.paper_condition;
          fail_ext += !r.extended_condition;
        }
        FailureBound bound;
        if (p > 0.0) {
          bound = failure_bound(n, p);
        } else {
          bound.union_bound = bound.asymptotic_bound = std::numeric_limits<double>::infinity();
        }
        row += fmt::format(",{},{},{},{},{},{}", fail_assoc, fail_paper, fail_ext,
                           format_real(static_cast<double>(fail_assoc) / trials), format_real(bound.union_bound),
                           format_real(bound.asymptotic_bound));
        break;
      }
      case ExperimentKind::Flexible: {
        double sum = 0.0;
        for (const auto& r : records) sum += static_cast<double>(r.flexible_count);
        const double mean = sum / trials;
        double ss = 0.0;
        for (const auto& r : records) ss += (static_cast<double>(r.flexible_count) - mean) * (r.flexible_count - mean);
        const double stderr_mean = cfg.trials > 1 ? std::sqrt(ss / (trials - 1.0) / trials) : 0.0;
        row += fmt::format(",{},{},{}", format_real(mean), format_real(expected_flexible_count(n, p)),
                           format_real(stderr_mean));
        break;
      }
      case ExperimentKind::Quasirandom: {
        std::size_t passing = 0;
        for (const auto& r : records) passing += r.quasirandom.value_or(false);
        row += fmt::format(",{},{},{}", format_real(cfg.epsilon), format_real(cfg.delta),
                           format_real(static_cast<double>(passing) / trials));
        break;
      }
    }
    out.csv += row + "\n";

    for (const auto& r : records) {
      out.per_trial_csv += fmt::format("{},{},{},{},{},{},{},{}\n", r.n, format_real(r.p), r.trial_index,
                                       bool_field(r.associative), bool_field(r.paper_condition),
                                       bool_field(r.extended_condition), r.flexible_count,
                                       r.quasirandom ? bool_field(*r.quasirandom) : std::string());
    }
  }
  return out;
}

}  // namespace randrel

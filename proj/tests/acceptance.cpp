// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "randrel/analysis.hpp"
#include "randrel/enumerate.hpp"
#include "randrel/experiment.hpp"
#include "randrel/quasirandom.hpp"
#include "randrel/sampler.hpp"
#include "randrel/structure_io.hpp"

using namespace randrel;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances and budgets.
constexpr double kC1BudgetSeconds = 1e-3;
constexpr double kC2BudgetSeconds = 5.0;
constexpr std::size_t kC2Classes = 65;
constexpr std::size_t kC3RandomStructures = 100000;
constexpr double kC3BudgetSeconds = 60.0;
constexpr std::uint64_t kC4Seed = 1;
constexpr std::size_t kC4Trials = 10000;
constexpr double kC4Sigmas = 2.0;
constexpr double kC4BudgetSeconds = 120.0;
constexpr double kC5IdentityTolerance = 1e-12;
constexpr std::size_t kC5MaxN = 50;
constexpr std::size_t kC5Trials = 10000;
constexpr double kC5StandardErrors = 3.0;
constexpr std::uint64_t kC5Seed = 1;
constexpr double kC5BudgetSeconds = 60.0;
constexpr std::size_t kC6Trials = 100000;
constexpr double kC6Sigmas = 3.0;
constexpr std::uint64_t kC6Seed = 1;
constexpr std::size_t kC7RandomN20 = 100;
constexpr std::size_t kC7Samples64 = 5;
constexpr double kC7Epsilon = 0.1;
constexpr double kC7Delta = 0.1;
constexpr double kC7DensityBand = 0.1;
constexpr std::uint64_t kC7Seed = 1;
constexpr double kC7BudgetSeconds = 30.0;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CycleStructure from_word(std::size_t n, std::uint64_t bits) {
  return CycleStructure(n, BitVector::from_word(cycle_count(n), bits));
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

Outcome criterion1() {
  const auto s1 = fixtures::s1();
  const auto s2 = fixtures::s2();
  const auto start = std::chrono::steady_clock::now();
  const bool a1 = is_associative(s1).associative;
  const bool a2 = is_associative(s2).associative;
  const auto f1 = flexible_atom_set(s1);
  const auto f2 = flexible_atom_set(s2);
  const double elapsed = seconds_since(start);
  const bool ok = a1 && a2 && f1 == fixtures::atoms({0}) && f2.empty() && elapsed < kC1BudgetSeconds;
  return {ok, fmt::format("S1 associative={} flexible={{{}}}, S2 associative={} flexible count={}, {:.3f} ms", a1,
                          f1.count() == 1 && f1.test(0) ? "a" : "?", a2, f2.count(), elapsed * 1e3)};
}

Outcome criterion2() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t enumerated = 0, disagreements = 0;
  auto stream = all_structures(3);
  while (auto s = stream.next()) {
    ++enumerated;
    if (is_associative(*s).associative != oracle::full_algebra_associative(3, s->bits().to_word())) ++disagreements;
  }
  const auto c = census(3);
  const double elapsed = seconds_since(start);
  const bool ok = enumerated == 1024 && disagreements == 0 && c.associative_classes == kC2Classes &&
                  elapsed < kC2BudgetSeconds;
  return {ok, fmt::format("{} structures, {} oracle disagreements, {} associative classes, {:.2f} s", enumerated,
                          disagreements, c.associative_classes, elapsed)};
}

Outcome criterion3() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t literal_counterexamples = 0, extended_discrepancies = 0, checked = 0;
  for (std::uint64_t bits = 0; bits < 1024; ++bits) {
    const auto r = is_associative(from_word(3, bits));
    const bool assoc = oracle::full_algebra_associative(3, bits);
    literal_counterexamples += r.paper_condition_holds && !assoc;
    extended_discrepancies += r.extended_condition_holds != assoc;
    ++checked;
  }
  const double ps[] = {0.3, 0.5, 0.7, 0.8, 0.9};
  for (std::size_t t = 0; t < kC3RandomStructures; ++t) {
    const std::size_t n = 4 + t % 3;
    const auto r = is_associative(sample({n, ps[t % 5], trial_seed(33, t)}));
    literal_counterexamples += r.paper_condition_holds && !r.associative;
    extended_discrepancies += r.extended_condition_holds != r.associative;
    ++checked;
  }
  const auto s2 = is_associative(fixtures::s2());
  const bool s2_ok = s2.associative && !s2.paper_condition_holds;
  const double elapsed = seconds_since(start);
  const bool ok = literal_counterexamples == 0 && extended_discrepancies == 0 && s2_ok && elapsed < kC3BudgetSeconds;
  return {ok, fmt::format("{} structures, literal=>assoc counterexamples {}, extended<=>assoc discrepancies {}, "
                          "S2 associative but literal fails: {}, {:.2f} s",
                          checked, literal_counterexamples, extended_discrepancies, s2_ok, elapsed)};
}

Outcome criterion4() {
  const auto start = std::chrono::steady_clock::now();
  const auto cfg = ExperimentConfig::from_json_text(
      fmt::format(R"({{"kind":"associativity","n_values":[4,8,12,16,20],"p":0.5,"trials":{},"seed":{},"output_path":"-"}})",
                  kC4Trials, kC4Seed));
  const auto rows = csv_rows(run_experiment(cfg).csv);
  bool ok = true;
  std::string detail;
  double previous_rate = -1.0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double rate = std::stod(rows[r][7]);
    const double union_bound = std::stod(rows[r][8]);
    const double asymptotic = std::stod(rows[r][9]);
    detail += fmt::format("n={} rate={} union={:.3g} asym={:.3g}; ", rows[r][0], rate, union_bound, asymptotic);
    if (union_bound < 1.0 && rate > union_bound) ok = false;
    if (previous_rate >= 0.0) {
      const double t = static_cast<double>(kC4Trials);
      const double sigma =
          std::sqrt(previous_rate * (1.0 - previous_rate) / t + rate * (1.0 - rate) / t);
      if (rate > previous_rate + kC4Sigmas * sigma) {
        ok = false;
        detail += fmt::format("increase {:.4f} > {}sigma={:.4f}; ", rate - previous_rate, kC4Sigmas, kC4Sigmas * sigma);
      }
    }
    previous_rate = rate;
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kC4BudgetSeconds) ok = false;
  return {ok, detail + fmt::format("{:.2f} s", elapsed)};
}

Outcome criterion5() {
  const auto start = std::chrono::steady_clock::now();
  double worst_identity = 0.0;
  for (std::size_t n = 1; n <= kC5MaxN; ++n)
    worst_identity = std::max(worst_identity, std::abs(expected_flexible_count(n, critical_p(n)) - 1.0));
  const auto cfg = ExperimentConfig::from_json_text(fmt::format(
      R"({{"kind":"flexible","n_values":[3,4,5],"p_mode":"critical","trials":{},"seed":{},"output_path":"-"}})",
      kC5Trials, kC5Seed));
  const auto rows = csv_rows(run_experiment(cfg).csv);
  bool ok = worst_identity <= kC5IdentityTolerance;
  std::string detail = fmt::format("max |E-1| for n<={} is {:.2e}; ", kC5MaxN, worst_identity);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double mean = std::stod(rows[r][4]);
    const double se = std::stod(rows[r][6]);
    const double z = std::abs(mean - 1.0) / se;
    if (!(z <= kC5StandardErrors)) ok = false;
    detail += fmt::format("n={} mean={:.4f} se={:.4f} z={:.2f}; ", rows[r][0], mean, se, z);
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kC5BudgetSeconds) ok = false;
  return {ok, detail + fmt::format("{:.2f} s", elapsed)};
}

Outcome criterion6() {
  bool ok = true;
  std::string detail;
  const std::pair<std::size_t, double> cases[] = {{3, 0.5}, {8, 0.1}, {8, 0.9}};
  for (const auto& [n, p] : cases) {
    const double band = kC6Sigmas * std::sqrt(p * (1.0 - p) / static_cast<double>(kC6Trials));
    const auto freqs = empirical_cycle_frequency(n, p, kC6Seed, kC6Trials);
    std::size_t outside = 0;
    double worst = 0.0;
    for (double f : freqs) {
      outside += std::abs(f - p) > band;
      worst = std::max(worst, std::abs(f - p) / band * kC6Sigmas);
    }
    if (outside) ok = false;
    detail += fmt::format("(n={},p={}) {}/{} cycles outside, max {:.2f} sigma; ", n, p, outside, freqs.size(), worst);
  }
  bool same_structures = true;
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    same_structures &= sample({12, 0.5, seed}) == sample({12, 0.5, seed});
  const auto cfg = ExperimentConfig::from_json_text(
      R"({"kind":"associativity","n_values":[4,6],"p":0.6,"trials":2000,"seed":6,"output_path":"-"})");
  const auto one = run_experiment(cfg, 1);
  const auto four = run_experiment(cfg, 4);
  const auto again = run_experiment(cfg, 1);
  const bool same_csv = one.csv == four.csv && one.csv == again.csv && one.per_trial_csv == four.per_trial_csv;
  ok = ok && same_structures && same_csv;
  return {ok, detail + fmt::format("identical structures {}, identical CSVs across runs and workers {}", same_structures,
                                   same_csv)};
}

Outcome criterion7() {
  const auto start = std::chrono::steady_clock::now();
  auto coverage_holds = [](const CycleStructure& s) {
    std::size_t total = 0;
    for (AtomId a = 0; a < s.n(); ++a) {
      const auto g = atom_graph(s, a);
      total += g.edge_count() + g.loop_count();
    }
    const auto c = s.mandatory_census();
    return total == 3 * c.three_cycles + c.two_cycles;
  };
  std::size_t coverage_failures = 0;
  auto stream = all_structures(3);
  while (auto s = stream.next()) coverage_failures += !coverage_holds(*s);
  for (std::size_t t = 0; t < kC7RandomN20; ++t) coverage_failures += !coverage_holds(sample({20, 0.5, trial_seed(kC7Seed, t)}));

  std::size_t judged = 0, densities_outside = 0;
  double worst_failing_fraction = 0.0;
  for (std::size_t t = 0; t < kC7Samples64; ++t) {
    const auto v = algebra_quasirandomness(sample({64, 0.5, trial_seed(kC7Seed, t)}), 0.5, kC7Epsilon, kC7Delta);
    judged += v.algebra_quasirandom;
    worst_failing_fraction = std::max(worst_failing_fraction, v.failing_fraction);
    for (const auto& st : v.per_atom_stats) densities_outside += std::abs(st.edge_density - 0.5) > kC7DensityBand;
  }
  const double elapsed = seconds_since(start);
  const bool ok = coverage_failures == 0 && judged == kC7Samples64 && densities_outside == 0 &&
                  elapsed < kC7BudgetSeconds;
  return {ok, fmt::format("coverage failures {}; n=64: {}/{} judged quasirandom (max failing fraction {}), "
                          "{} G_a densities outside 0.5+-{}, {:.2f} s",
                          coverage_failures, judged, kC7Samples64, worst_failing_fraction, densities_outside,
                          kC7DensityBand, elapsed)};
}

#ifdef RANDREL_CLI_PATH
struct Run {
  int exit_code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(RANDREL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome criterion8() {
  const fs::path golden = RANDREL_GOLDEN_DIR;
  const fs::path tmp = fs::temp_directory_path() / ("randrel_accept_" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  std::vector<std::string> failures;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) failures.push_back(what);
  };

  expect(run_cli("check " + (golden / "s1.cyc").string()).exit_code == 0, "exit 0 on associative");
  expect(run_cli("check " + (golden / "s3.cyc").string()).exit_code == 3, "exit 3 on non-associative");
  expect(run_cli("check " + (golden / "bad_atom.cyc").string()).exit_code == 2, "exit 2 on parse error");
  expect(run_cli("sample --n 3 --p 1.5 --seed 1").exit_code == 2, "exit 2 on invalid p");
  expect(run_cli("sample --n 3 --p 0.5").exit_code == 2, "exit 2 on missing seed");

  const auto golden_sample = run_cli("sample --n 3 --p 0.5 --seed 42");
  expect(golden_sample.exit_code == 0 && golden_sample.out == slurp(golden / "sample_n3_p0.5_seed42.cyc"),
         "sample golden");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto text = run_cli("sample --n 6 --p 0.5 --seed " + std::to_string(seed)).out;
    const auto bits = run_cli("sample --n 6 --p 0.5 --seed " + std::to_string(seed) + " --format bits").out;
    const auto parsed = parse_structure(text);
    expect(serialize_structure(parsed, StructureFormat::Cycles) == text && parse_structure(bits) == parsed &&
               serialize_structure(parsed, StructureFormat::Bits) == bits,
           ".cyc round trip seed " + std::to_string(seed));
  }

  const std::pair<const char*, const char*> kinds[] = {
      {R"("kind":"associativity","p":0.5)", "header_associativity.csv"},
      {R"("kind":"flexible","p_mode":"critical")", "header_flexible.csv"},
      {R"("kind":"quasirandom","p":0.5,"epsilon":0.1,"delta":0.1)", "header_quasirandom.csv"},
  };
  const auto out = (tmp / "out.csv").string();
  const auto per_trial = (tmp / "trials.csv").string();
  for (const auto& [fields, header_file] : kinds) {
    const auto config = (tmp / "cfg.json").string();
    std::ofstream(config) << "{" << fields << R"(,"n_values":[3],"trials":3,"seed":1,"output_path":")" << out
                          << "\"}";
    const auto r = run_cli("experiment " + config + " --per-trial " + per_trial);
    const auto header = slurp(golden / header_file);
    const auto trial_header = slurp(golden / "header_per_trial.csv");
    expect(r.exit_code == 0 && slurp(out).rfind(header, 0) == 0 && slurp(per_trial).rfind(trial_header, 0) == 0,
           std::string("CSV header ") + header_file);
  }
  fs::remove_all(tmp);

  std::string detail = failures.empty() ? "exit codes 0/2/3, 20 .cyc round trips, 4 CSV headers match golden files"
                                        : "failed:";
  for (const auto& f : failures) detail += " [" + f + "]";
  return {failures.empty(), detail};
}
#else
Outcome criterion8() { return {false, "CLI not built (RANDREL_BUILD_TOOLS=OFF)"}; }
#endif

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                          criterion5, criterion6, criterion7, criterion8};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << fmt::format("criterion {}: {}  {}", i + 1, o.pass ? "PASS" : "FAIL", o.detail) << std::endl;
  }
  std::cout << fmt::format("{} of {} criteria passed", criteria.size() - failed, criteria.size()) << std::endl;
  return failed == 0 ? 0 : 1;
}

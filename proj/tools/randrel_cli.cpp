// randrel: sample, check, enumerate and run Monte Carlo experiments on
// random symmetric integral cycle structures.
//
// Exit codes: 0 success (or associative, for `check`), 3 non-associative
// (`check` only), 2 usage, parse or I/O errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "randrel/errors.hpp"
#include "randrel/experiment.hpp"
#include "randrel/report.hpp"
#include "randrel/sampler.hpp"
#include "randrel/structure_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNonAssociative = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random symmetric integral relation algebras: sampling, checking, enumeration, experiments"};
  app.require_subcommand(1);

  std::size_t sample_n = 0;
  double sample_p = 0.0;
  std::uint64_t sample_seed = 0;
  std::string sample_format = "cycles";
  auto* sample_cmd = app.add_subcommand("sample", "Draw one structure from R(n,p) and print it as .cyc");
  sample_cmd->add_option("--n", sample_n, "Number of diversity atoms")->required();
  sample_cmd->add_option("--p", sample_p, "Probability that a cycle is mandatory")->required();
  sample_cmd->add_option("--seed", sample_seed, "64-bit seed")->required();
  sample_cmd->add_option("--format", sample_format, "cycles or bits")
      ->check(CLI::IsMember({"cycles", "bits"}));

  std::string check_path;
  std::optional<double> check_p;
  double check_epsilon = 0.1, check_delta = 0.1;
  bool check_json = false;
  auto* check_cmd = app.add_subcommand("check", "Associativity, witness conditions, flexible atoms, quasirandomness");
  check_cmd->add_option("path", check_path, ".cyc file")->required();
  check_cmd->add_option("--p", check_p, "Reference density for the quasirandom verdict (default: observed)");
  check_cmd->add_option("--epsilon", check_epsilon, "Quasirandom tolerance")->capture_default_str();
  check_cmd->add_option("--delta", check_delta, "Allowed fraction of failing atom graphs")->capture_default_str();
  check_cmd->add_flag("--json", check_json, "Print the JSON report instead of text");

  std::size_t enum_n = 0;
  std::string catalog_path;
  unsigned enum_workers = 1;
  auto* enum_cmd = app.add_subcommand("enumerate", "Exhaustive census of all structures over n atoms");
  enum_cmd->add_option("--n", enum_n, "Number of diversity atoms")->required();
  enum_cmd->add_option("--catalog", catalog_path, "Write one canonical .cyc block per associative class");
  enum_cmd->add_option("--workers", enum_workers, "Worker threads")->capture_default_str();

  std::string config_path;
  std::string per_trial_path;
  unsigned exp_workers = 1;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a Monte Carlo experiment described by a JSON config");
  exp_cmd->add_option("config", config_path, "Experiment config (JSON)")->required();
  exp_cmd->add_option("--per-trial", per_trial_path, "Also write per-trial records as CSV");
  exp_cmd->add_option("--workers", exp_workers, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sample_cmd) {
      const randrel::SamplerConfig cfg{sample_n, sample_p, sample_seed};
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      const auto format = sample_format == "bits" ? randrel::StructureFormat::Bits : randrel::StructureFormat::Cycles;
      std::cout << randrel::serialize_structure(randrel::sample(cfg), format);
      return kExitOk;
    }

    if (*check_cmd) {
      const auto s = randrel::parse_structure(read_file(check_path));
      const auto report = randrel::check_structure(s, check_p, check_epsilon, check_delta);
      if (check_json)
        std::cout << randrel::to_json(report).dump(2) << "\n";
      else
        std::cout << randrel::to_text(report);
      return report.associativity.associative ? kExitOk : kExitNonAssociative;
    }

    if (*enum_cmd) {
      const auto c = randrel::census(enum_n, enum_workers);
      if (!catalog_path.empty()) write_file(catalog_path, randrel::serialize_catalog(c.catalog));
      std::cout << randrel::census_json(c).dump(2) << "\n";
      return kExitOk;
    }

    if (*exp_cmd) {
      const auto cfg = randrel::ExperimentConfig::from_json_text(read_file(config_path));
      const auto out = randrel::run_experiment(cfg, exp_workers);
      write_file(cfg.output_path, out.csv);
      if (!per_trial_path.empty()) write_file(per_trial_path, out.per_trial_csv);
      return kExitOk;
    }
  } catch (const randrel::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

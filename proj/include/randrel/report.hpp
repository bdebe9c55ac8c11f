#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "randrel/analysis.hpp"
#include "randrel/core.hpp"
#include "randrel/enumerate.hpp"
#include "randrel/quasirandom.hpp"

namespace randrel {

/// Everything `check` reports about one structure.
struct CheckReport {
  std::size_t n = 0;
  CycleTypeCensus mandatory;
  AssociativityReport associativity;
  FlexibilityReport flexibility;
  /// Reference density used for the quasirandom verdict.
  double p = 0.0;
  std::optional<QuasirandomVerdict> quasirandom;  // n >= 3 only
};

/// When `p` is absent the observed fraction of mandatory cycles is used.
CheckReport check_structure(const CycleStructure& s, std::optional<double> p, double epsilon, double delta);

nlohmann::json to_json(const CheckReport& report);
std::string to_text(const CheckReport& report);

/// Keys exactly: n, total, associative_labeled, associative_classes, with_flexible_labeled.
nlohmann::json census_json(const Census& census);

/// Records keyed by center atom name.
nlohmann::json verdict_json(const QuasirandomVerdict& verdict, std::size_t n);

std::string atom_set_name(const AtomSet& set, std::size_t n);

}  // namespace randrel

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "randrel/core.hpp"

namespace randrel {

/// SplitMix64 (Steele, Lea, Flood 2014): state += golden gamma, then mix.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += kGamma;
    return mix(state_);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

struct SamplerConfig {
  std::size_t n = 1;
  double p = 0.5;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless n >= 1 and 0 <= p <= 1.
  void validate() const;
};

/// A cycle is mandatory iff its draw u satisfies u < floor(p * 2^64)
/// (always, for p = 1). One draw is consumed per cycle in index order.
CycleStructure sample(const SamplerConfig& cfg);

/// Seed for trial `trial_index` of a run: one SplitMix64 step from
/// master_seed + trial_index * gamma.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

/// Fraction of `trials` samples (trial i seeded by trial_seed(seed, i)) in
/// which each cycle is mandatory, indexed by cycle index.
std::vector<double> empirical_cycle_frequency(std::size_t n, double p, std::uint64_t seed, std::size_t trials);

}  // namespace randrel

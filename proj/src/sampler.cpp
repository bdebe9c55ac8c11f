#include "randrel/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace randrel {

void SamplerConfig::validate() const {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (n > kMaxDiversityAtoms)
    throw std::invalid_argument("n exceeds the configured cap of " + std::to_string(kMaxDiversityAtoms));
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
}

CycleStructure sample(const SamplerConfig& cfg) {
  cfg.validate();
  const bool always = cfg.p >= 1.0;
  // p * 2^64 is exact in binary floating point and below 2^64 for p < 1.
  const std::uint64_t threshold = always ? 0 : static_cast<std::uint64_t>(std::ldexp(cfg.p, 64));

  SplitMix64 rng(cfg.seed);
  BitVector bits(static_cast<std::size_t>(cycle_count(cfg.n)));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const std::uint64_t u = rng.next();
    if (always || u < threshold) bits.set(i);
  }
  return CycleStructure(cfg.n, std::move(bits));
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return SplitMix64(master_seed + trial_index * SplitMix64::kGamma).next();
}

std::vector<double> empirical_cycle_frequency(std::size_t n, double p, std::uint64_t seed, std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  std::vector<std::size_t> hits(static_cast<std::size_t>(cycle_count(n)), 0);
  for (std::size_t t = 0; t < trials; ++t) {
    const CycleStructure s = sample({n, p, trial_seed(seed, t)});
    for (std::size_t i = 0; i < hits.size(); ++i) hits[i] += s.bits().test(i);
  }
  std::vector<double> freq(hits.size());
  for (std::size_t i = 0; i < hits.size(); ++i) freq[i] = static_cast<double>(hits[i]) / static_cast<double>(trials);
  return freq;
}

}  // namespace randrel

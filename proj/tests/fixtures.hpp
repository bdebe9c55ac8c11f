#pragma once

#include <vector>

#include "randrel/core.hpp"

namespace fixtures {

// Atoms a, b, c are 0, 1, 2.
inline randrel::CycleStructure s1() {
  // Every n = 3 cycle except bbb and cbb.
  const randrel::CycleIndexer indexer(3);
  std::vector<randrel::Cycle> cycles;
  for (const auto& c : indexer.cycles())
    if (!(c == randrel::Cycle{1, 1, 1}) && !(c == randrel::Cycle{1, 1, 2})) cycles.push_back(c);
  return randrel::CycleStructure::from_cycles(3, cycles);
}

inline randrel::CycleStructure s2() {
  const std::vector<randrel::Cycle> cycles = {{0, 1, 1}, {0, 2, 2}, {1, 2, 2}};
  return randrel::CycleStructure::from_cycles(3, cycles);
}

inline randrel::CycleStructure s3() {
  const std::vector<randrel::Cycle> cycles = {{0, 0, 0}, {0, 1, 2}};
  return randrel::CycleStructure::from_cycles(3, cycles);
}

inline randrel::AtomSet atoms(std::initializer_list<randrel::AtomId> ids) {
  randrel::AtomSet s;
  for (auto a : ids) s.set(a);
  return s;
}

}  // namespace fixtures

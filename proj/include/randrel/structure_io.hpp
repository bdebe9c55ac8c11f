#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "randrel/core.hpp"

namespace randrel {

// `.cyc` text format:
//
//   n 3            header, always first
//   0 1 1          one mandatory cycle per line, atoms sorted ascending
//   # comment      lines starting with '#' are ignored, as are blank lines
//
// or, compactly, a single `bits <hex>` line after the header holding the
// mandatory bit vector (index 0 in the least significant bit).

enum class StructureFormat { Cycles, Bits };

/// Throws ParseError with the offending line number.
CycleStructure parse_structure(std::string_view text);

/// Cycle lines are emitted in ascending canonical index order.
std::string serialize_structure(const CycleStructure& s, StructureFormat format = StructureFormat::Cycles);

/// A catalog is a sequence of `.cyc` blocks, each preceded by a
/// `# class <k> bits <hex>` comment and separated by blank lines.
std::string serialize_catalog(const std::vector<CycleStructure>& classes);
std::vector<CycleStructure> parse_catalog(std::string_view text);

}  // namespace randrel

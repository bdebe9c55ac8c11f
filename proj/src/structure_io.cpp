#include "randrel/structure_io.hpp"

#include <charconv>
#include <optional>
#include <stdexcept>

#include "randrel/errors.hpp"

namespace randrel {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) out.push_back(line.substr(start, pos - start));
  }
  return out;
}

std::optional<std::uint64_t> to_uint(std::string_view token) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

CycleStructure parse_structure(std::string_view text) {
  std::optional<std::size_t> n;
  std::optional<BitVector> bits;
  bool saw_cycle_line = false;
  bool saw_bits_line = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = strip_cr(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "n") throw ParseError(line_no, "expected header 'n <int>'");
      const auto value = to_uint(tokens[1]);
      if (!value || *value == 0) throw ParseError(line_no, "atom count must be a positive integer");
      if (*value > kMaxDiversityAtoms)
        throw ParseError(line_no, "atom count exceeds the configured cap of " + std::to_string(kMaxDiversityAtoms));
      n = static_cast<std::size_t>(*value);
      bits = BitVector(static_cast<std::size_t>(cycle_count(*n)));
    } else if (tokens[0] == "bits") {
      if (saw_cycle_line || saw_bits_line) throw ParseError(line_no, "'bits' line must be the only body line");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'bits <hex>'");
      try {
        bits = BitVector::from_hex(bits->size(), tokens[1]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      saw_bits_line = true;
    } else {
      if (saw_bits_line) throw ParseError(line_no, "cycle lines cannot follow a 'bits' line");
      if (tokens.size() != 3) throw ParseError(line_no, "expected three atom indices");
      AtomId atoms[3];
      for (int t = 0; t < 3; ++t) {
        const auto value = to_uint(tokens[static_cast<std::size_t>(t)]);
        if (!value) throw ParseError(line_no, "atom index is not a non-negative integer");
        if (*value >= *n) throw ParseError(line_no, "atom out of range (n = " + std::to_string(*n) + ")");
        atoms[t] = static_cast<AtomId>(*value);
      }
      if (!(atoms[0] <= atoms[1] && atoms[1] <= atoms[2]))
        throw ParseError(line_no, "cycle atoms must be sorted ascending");
      const std::size_t idx = cycle_index(Cycle{atoms[0], atoms[1], atoms[2]}, *n);
      if (bits->test(idx)) throw ParseError(line_no, "duplicate cycle");
      bits->set(idx);
      saw_cycle_line = true;
    }
    if (end == text.size()) break;
  }

  if (!n) throw ParseError(0, "missing header 'n <int>'");
  return CycleStructure(*n, std::move(*bits));
}

std::string serialize_structure(const CycleStructure& s, StructureFormat format) {
  std::string out = "n " + std::to_string(s.n()) + "\n";
  if (format == StructureFormat::Bits) {
    out += "bits " + s.bits().to_hex() + "\n";
    return out;
  }
  for (const Cycle& c : s.mandatory_cycles()) {
    out += std::to_string(c.i) + ' ' + std::to_string(c.j) + ' ' + std::to_string(c.k) + '\n';
  }
  return out;
}

std::string serialize_catalog(const std::vector<CycleStructure>& classes) {
  std::string out;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (k) out += '\n';
    out += "# class " + std::to_string(k + 1) + " bits " + classes[k].bits().to_hex() + "\n";
    out += serialize_structure(classes[k]);
  }
  return out;
}

std::vector<CycleStructure> parse_catalog(std::string_view text) {
  // Split at header lines; each block keeps its own line numbering.
  std::vector<CycleStructure> out;
  std::size_t block_start = std::string_view::npos;
  std::size_t pos = 0;
  auto flush = [&](std::size_t stop) {
    if (block_start != std::string_view::npos) out.push_back(parse_structure(text.substr(block_start, stop - block_start)));
  };
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const auto tokens = split_ws(strip_cr(text.substr(pos, end - pos)));
    if (!tokens.empty() && tokens[0] == "n") {
      flush(pos);
      block_start = pos;
    } else if (!tokens.empty() && tokens[0].front() != '#' && block_start == std::string_view::npos) {
      throw ParseError(0, "catalog content before the first header");
    }
    pos = end + 1;
  }
  flush(text.size());
  return out;
}

}  // namespace randrel

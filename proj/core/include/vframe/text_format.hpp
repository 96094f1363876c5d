#pragma once

// Text formats.
//
// Code file: one generator per line as a '0'/'1' string, column i being
// coordinate i. Blank lines and lines starting with '#' are ignored; all
// generator lines share one length.
//
// Structure file: sections "[C]" and "[D]" holding generator lines in the
// code format, and an optional "[decomposition]" section with lines
//   h1,h2,...,hn : multiplicity      (each h_i one of 0, 1/2, 1/16)

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vframe/gf2.hpp"
#include "vframe/labels.hpp"
#include "vframe/structure.hpp"

namespace vframe {

struct SourceRow {
  BinaryWord word;
  std::size_t line;
};

struct ParsedCode {
  LinearCode code;
  std::vector<SourceRow> rows;
};

struct ParsedStructure {
  StructureCodes codes;
  std::vector<SourceRow> c_rows;
  std::vector<SourceRow> d_rows;
  std::optional<FrameDecomposition> decomposition;
};

// ParseError carries the 1-based line number.
ParsedCode parse_code_text(std::string_view text);
ParsedStructure parse_structure_text(std::string_view text);

ParsedCode read_code_file(const std::filesystem::path& path);
ParsedStructure read_structure_file(const std::filesystem::path& path);

// One generator per line, newline-terminated.
std::string render_code(const LinearCode& c);
std::string render_structure(const StructureCodes& s,
                             const std::optional<FrameDecomposition>& decomposition = std::nullopt);

// validate() with evenness failures pointing at the offending input lines.
ValidationReport validate_parsed(const ParsedStructure& p, ValidationOptions options = {});

// "1 + 30*w^8 + w^16".
std::string to_string(const WeightEnumerator& we);

}  // namespace vframe

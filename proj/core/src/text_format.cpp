#include "vframe/text_format.hpp"

#include <fstream>
#include <sstream>

#include "vframe/errors.hpp"

namespace vframe {

namespace {

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string at_line(std::size_t line, const std::string& message) {
  return "line " + std::to_string(line) + ": " + message;
}

// Splits into lines, numbering from 1; skips blanks and '#' comments.
template <typename Visit>
void for_each_content_line(std::string_view text, Visit visit) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    const auto line = trim(raw);
    if (!line.empty() && line.front() != '#') visit(line_no, line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

BinaryWord parse_row(std::string_view text, std::size_t line,
                     std::optional<std::size_t>& length) {
  BinaryWord w = [&] {
    try {
      return BinaryWord::from_string(text);
    } catch (const ParseError& e) {
      throw ParseError(at_line(line, e.what()), line, e.column());
    }
  }();
  if (!length) {
    length = w.length();
  } else if (*length != w.length()) {
    throw ParseError(at_line(line, "generator has length " + std::to_string(w.length()) +
                                       ", expected " + std::to_string(*length)),
                     line);
  }
  return w;
}

std::vector<BinaryWord> words_of(const std::vector<SourceRow>& rows) {
  std::vector<BinaryWord> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.word);
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FrameModuleLabel parse_label(std::string_view text, std::size_t line) {
  std::vector<IsingLabel> labels;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto token =
        trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                              : comma - pos));
    try {
      labels.push_back(parse_ising_label(token));
    } catch (const ParseError& e) {
      throw ParseError(at_line(line, e.what()), line);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return FrameModuleLabel(std::move(labels));
}

}  // namespace

ParsedCode parse_code_text(std::string_view text) {
  std::optional<std::size_t> length;
  std::vector<SourceRow> rows;
  for_each_content_line(text, [&](std::size_t line, std::string_view content) {
    rows.push_back({parse_row(content, line, length), line});
  });
  if (!length) throw ParseError("code file has no generator lines; length unknown");
  LinearCode code = LinearCode::from_generators(*length, words_of(rows));
  return ParsedCode{std::move(code), std::move(rows)};
}

ParsedStructure parse_structure_text(std::string_view text) {
  enum class Section { kNone, kC, kD, kDecomposition };
  Section section = Section::kNone;
  bool saw_c = false;
  bool saw_d = false;
  std::optional<std::size_t> length;
  std::vector<SourceRow> c_rows;
  std::vector<SourceRow> d_rows;
  struct PendingEntry {
    FrameModuleLabel label;
    BigInt multiplicity;
    std::size_t line;
  };
  std::vector<PendingEntry> entries;
  bool saw_decomposition = false;

  for_each_content_line(text, [&](std::size_t line, std::string_view content) {
    if (content.front() == '[') {
      if (content == "[C]") {
        if (saw_c) throw ParseError(at_line(line, "duplicate [C] section"), line);
        section = Section::kC;
        saw_c = true;
      } else if (content == "[D]") {
        if (saw_d) throw ParseError(at_line(line, "duplicate [D] section"), line);
        section = Section::kD;
        saw_d = true;
      } else if (content == "[decomposition]") {
        if (saw_decomposition) {
          throw ParseError(at_line(line, "duplicate [decomposition] section"), line);
        }
        section = Section::kDecomposition;
        saw_decomposition = true;
      } else {
        throw ParseError(at_line(line, "unknown section " + std::string(content)), line);
      }
      return;
    }
    switch (section) {
      case Section::kNone:
        throw ParseError(at_line(line, "data before the first section header"), line);
      case Section::kC:
        c_rows.push_back({parse_row(content, line, length), line});
        break;
      case Section::kD:
        d_rows.push_back({parse_row(content, line, length), line});
        break;
      case Section::kDecomposition: {
        const auto colon = content.find(':');
        if (colon == std::string_view::npos) {
          throw ParseError(at_line(line, "expected 'h1,...,hn : multiplicity'"), line);
        }
        FrameModuleLabel label = parse_label(content.substr(0, colon), line);
        const auto mult_text = trim(content.substr(colon + 1));
        if (mult_text.empty() ||
            mult_text.find_first_not_of("0123456789") != std::string_view::npos) {
          throw ParseError(at_line(line, "multiplicity must be a nonnegative integer"), line);
        }
        entries.push_back({std::move(label), BigInt(std::string(mult_text)), line});
        break;
      }
    }
  });

  if (!saw_c) throw ParseError("structure file has no [C] section");
  if (!saw_d) throw ParseError("structure file has no [D] section");
  if (!length) throw ParseError("structure file has no generator lines; length unknown");

  StructureCodes codes(LinearCode::from_generators(*length, words_of(c_rows)),
                       LinearCode::from_generators(*length, words_of(d_rows)));

  std::optional<FrameDecomposition> decomposition;
  if (saw_decomposition) {
    std::vector<FrameDecomposition::Entry> plain;
    for (const auto& e : entries) {
      if (e.label.length() != *length) {
        throw ParseError(at_line(e.line, "label has " + std::to_string(e.label.length()) +
                                             " entries, frame length is " +
                                             std::to_string(*length)),
                         e.line);
      }
      // Validate incrementally so errors point at the offending line.
      plain.push_back({e.label, e.multiplicity});
      try {
        FrameDecomposition(*length, plain);
      } catch (const ValidationError& err) {
        throw ValidationError(at_line(e.line, err.what()));
      }
    }
    decomposition.emplace(*length, std::move(plain));
  }

  return ParsedStructure{std::move(codes), std::move(c_rows), std::move(d_rows),
                         std::move(decomposition)};
}

ParsedCode read_code_file(const std::filesystem::path& path) {
  try {
    return parse_code_text(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
  }
}

ParsedStructure read_structure_file(const std::filesystem::path& path) {
  try {
    return parse_structure_text(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::string render_code(const LinearCode& c) {
  std::string out;
  for (const auto& g : c.generators()) out += g.to_string() + "\n";
  return out;
}

std::string render_structure(const StructureCodes& s,
                             const std::optional<FrameDecomposition>& decomposition) {
  std::string out = "[C]\n" + render_code(s.c()) + "[D]\n" + render_code(s.d());
  if (decomposition) {
    out += "[decomposition]\n";
    for (const auto& [label, mult] : decomposition->entries()) {
      out += to_string(label) + " : " + mult.str() + "\n";
    }
  }
  return out;
}

ValidationReport validate_parsed(const ParsedStructure& p, ValidationOptions options) {
  ValidationReport report = validate(p.codes, options);
  auto point_at_rows = [](ValidationCheck& check, const std::vector<SourceRow>& rows) {
    if (check.passed) return;
    for (const auto& r : rows) {
      if (r.word.weight() % 2 != 0) {
        check.detail = "odd-weight generator " + r.word.to_string() + " at line " +
                       std::to_string(r.line);
        return;
      }
    }
  };
  for (auto& check : report.checks) {
    if (check.name == kCheckCEven) point_at_rows(check, p.c_rows);
    if (check.name == kCheckDEven) point_at_rows(check, p.d_rows);
  }
  return report;
}

std::string to_string(const WeightEnumerator& we) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t w = 0; w < we.counts.size(); ++w) {
    const BigInt& a = we.counts[w];
    if (a == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (w == 0) {
      out << a;
      continue;
    }
    if (a != 1) out << a << "*";
    out << "w";
    if (w != 1) out << "^" << w;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace vframe

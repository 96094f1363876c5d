#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "vframe/characters.hpp"
#include "vframe/errors.hpp"
#include "vframe/gf2.hpp"
#include "vframe/orbifold.hpp"
#include "vframe/qseries.hpp"
#include "vframe/text_format.hpp"

namespace vframe::cli {

namespace {

enum class Format { kText, kKeyValue };

// Text mode prints "key: value", key-value mode "key = value".
class Emitter {
 public:
  Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

  template <typename T>
  void field(const std::string& key, const T& value) {
    out_ << key << (format_ == Format::kText ? ": " : " = ") << value << '\n';
  }
  void field(const std::string& key, bool value) { field(key, value ? "true" : "false"); }

  void check(const std::string& key, const std::string& label, bool passed,
             const std::string& detail) {
    if (format_ == Format::kKeyValue) {
      field(key, passed ? "pass" : "fail");
      if (!detail.empty()) field(key + ".detail", detail);
      return;
    }
    out_ << (passed ? "[PASS] " : "[FAIL] ") << label;
    if (!detail.empty()) out_ << " (" << detail << ")";
    out_ << '\n';
  }

  void words(const std::string& key, const std::vector<BinaryWord>& list) {
    field(key + ".count", list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (format_ == Format::kKeyValue) {
        field(key + "." + std::to_string(i), list[i].to_string());
      } else {
        out_ << "  " << list[i].to_string() << '\n';
      }
    }
  }

  void code(const std::string& key, const LinearCode& c) {
    if (format_ == Format::kText) {
      out_ << "[" << key << "]\n" << render_code(c);
      return;
    }
    field(key + ".dim", c.dimension());
    for (std::size_t i = 0; i < c.generators().size(); ++i) {
      field(key + "." + std::to_string(i), c.generators()[i].to_string());
    }
  }

  bool text() const { return format_ == Format::kText; }
  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
  Format format_;
};

std::string snake(std::string s) {
  for (char& ch : s) {
    if (ch == ' ' || ch == '(' || ch == ')') ch = '_';
  }
  s.erase(std::unique(s.begin(), s.end(), [](char a, char b) { return a == '_' && b == '_'; }),
          s.end());
  while (!s.empty() && s.back() == '_') s.pop_back();
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

struct Options {
  std::string format = "text";
  int order = 20;
  bool strict = false;
  std::string input;
  std::string delta;
  std::size_t max_weight = 2;
  bool prefactor = false;
};

int cmd_validate(const Options& o, Emitter& e) {
  const ParsedStructure parsed = read_structure_file(o.input);
  const ValidationReport report = validate_parsed(parsed, {o.strict});
  e.field("n", report.frame_length);
  e.field("rank", report.rank());
  e.field("dim_c", report.dim_c);
  e.field("dim_d", report.dim_d);
  for (const auto& check : report.checks) {
    e.check("check." + snake(check.name), check.name, check.passed, check.detail);
  }
  if (report.ok()) {
    e.field("holomorphic", parsed.codes.c() == dual(parsed.codes.d()));
    if (parsed.decomposition) {
      attach_decomposition(parsed.codes, *parsed.decomposition);
      e.field("decomposition_entries", parsed.decomposition->entries().size());
    }
  }
  e.field("valid", report.ok());
  return report.ok() ? kSuccess : kCheckFailed;
}

int cmd_dual(const Options& o, Emitter& e) {
  const ParsedCode parsed = read_code_file(o.input);
  const LinearCode d = dual(parsed.code);
  if (e.text()) {
    e.raw() << render_code(d);
  } else {
    e.field("n", d.length());
    e.code("dual", d);
  }
  return kSuccess;
}

int cmd_wenum(const Options& o, Emitter& e) {
  const ParsedCode parsed = read_code_file(o.input);
  const WeightEnumerator we = weight_enumerator(parsed.code);
  if (e.text()) {
    e.raw() << to_string(we) << '\n';
    return kSuccess;
  }
  e.field("n", we.length);
  e.field("dim", parsed.code.dimension());
  e.field("enumerator", to_string(we));
  for (std::size_t w = 0; w < we.counts.size(); ++w) {
    if (we.counts[w] != 0) e.field("a" + std::to_string(w), we.counts[w]);
  }
  return kSuccess;
}

int cmd_char(const Options& o, Emitter& e) {
  const LoadedStructure s = parse_structure_file(o.input, {o.strict});
  const std::int64_t truncation = static_cast<std::int64_t>(o.order) * kExponentUnit;
  QSeries series = s.decomposition ? frame_decomposition_character(*s.decomposition, truncation)
                                   : code_voa_character(s.codes.c(), truncation);
  if (o.prefactor) series = with_vacuum_prefactor(series, s.codes.frame_length());
  if (e.text()) {
    e.raw() << to_string(series) << '\n';
    return kSuccess;
  }
  e.field("source", s.decomposition ? "decomposition" : "code_voa");
  e.field("order", o.order);
  e.field("prefactor", o.prefactor);
  e.field("series", to_string(series));
  return kSuccess;
}

int cmd_v1(const Options& o, Emitter& e) {
  const LoadedStructure s = parse_structure_file(o.input, {o.strict});
  const V1Obstruction report = v1_code_obstruction(s.codes);
  e.field("a2", report.a2);
  e.field("v1_nonzero_certified", report.certifies_nonzero_v1());
  e.words("weight_two_words", report.weight_two_words);
  e.words("suspicious_tau_words", report.suspicious_tau_words);
  return kSuccess;
}

int cmd_orbifold(const Options& o, Emitter& e) {
  const LoadedStructure s = parse_structure_file(o.input, {o.strict});
  const BinaryWord delta = BinaryWord::from_string(o.delta);
  const OrbifoldResult r = orbifold_transform(s.codes, delta);
  const bool even = r.parity == Parity::kEven;

  // Text output is itself a structure file: metadata as comments.
  const std::string prefix = e.text() ? "# " : "";
  e.field(prefix + "delta", delta.to_string());
  e.field(prefix + "parity", even ? "even" : "odd");
  e.field(prefix + "holomorphic", r.certificates.output_holomorphic);
  e.field(prefix + "a2", r.certificates.output_a2);
  e.field(prefix + "delta_in_c", r.certificates.delta_in_output_c);
  e.field(prefix + "dim_d0", r.d0.dimension());
  e.code("C", r.output.c());
  e.code("D", r.output.d());
  return kSuccess;
}

int cmd_pipeline(const Options& o, Emitter& e) {
  const LoadedStructure s = parse_structure_file(o.input, {o.strict});
  const PipelineReport report = moonshine_pipeline(s.codes);
  e.field("delta", report.delta.to_string());
  for (std::size_t i = 0; i < report.certificates.size(); ++i) {
    const auto& c = report.certificates[i];
    e.check("certificate." + std::to_string(i + 1), c.name, c.passed, c.detail);
  }
  if (!e.text()) e.field("all_passed", report.all_passed());
  return report.all_passed() ? kSuccess : kCheckFailed;
}

int cmd_find_delta(const Options& o, Emitter& e) {
  const LoadedStructure s = parse_structure_file(o.input, {o.strict});
  const auto candidates = find_delta(s.codes, o.max_weight);
  e.field("count", candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    if (e.text()) {
      e.raw() << c.delta.to_string() << "  wt=" << c.delta.weight() << "  dim_d0=" << c.dim_d0
              << '\n';
    } else {
      const std::string key = "delta." + std::to_string(i);
      e.field(key, c.delta.to_string());
      e.field(key + ".dim_d0", c.dim_d0);
    }
  }
  return kSuccess;
}

}  // namespace

LoadedStructure parse_structure_file(const std::filesystem::path& path,
                                     ValidationOptions options) {
  ParsedStructure parsed = read_structure_file(path);
  const ValidationReport report = validate_parsed(parsed, options);
  for (const auto& check : report.checks) {
    if (!check.passed) {
      throw ValidationError(path.string() + ": check '" + check.name + "' failed" +
                            (check.detail.empty() ? "" : ": " + check.detail));
    }
  }
  if (parsed.decomposition) {
    try {
      attach_decomposition(parsed.codes, *parsed.decomposition);
    } catch (const Error& err) {
      throw InconsistencyError(path.string() + ": " + err.what());
    }
  }
  return LoadedStructure{std::move(parsed.codes), std::move(parsed.decomposition)};
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure codes of framed vertex operator algebras", "vframe"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "kv"}))
      ->capture_default_str();
  app.add_option("--order", o.order, "Truncate q-series after q^N")
      ->check(CLI::Range(0, 10000))
      ->capture_default_str();
  app.add_flag("--strict", o.strict, "Also require weights in D divisible by 8");

  auto* validate_cmd = app.add_subcommand("validate", "Check the structure-code axioms");
  auto* dual_cmd = app.add_subcommand("dual", "Print the dual of a code file");
  auto* wenum_cmd = app.add_subcommand("wenum", "Weight enumerator of a code file");
  auto* char_cmd = app.add_subcommand("char", "Character of M_C or of the decomposition");
  auto* v1_cmd = app.add_subcommand("v1", "Weight-one obstruction report");
  auto* orbifold_cmd = app.add_subcommand("orbifold", "Structure codes of V(tau_delta)");
  auto* pipeline_cmd = app.add_subcommand("pipeline", "Certificates of the V_1 = 0 argument");
  auto* find_cmd = app.add_subcommand("find-delta", "List even-weight delta not in C");

  for (auto* cmd : {validate_cmd, char_cmd, v1_cmd, orbifold_cmd, pipeline_cmd, find_cmd}) {
    cmd->add_option("structure", o.input, "Structure file")->required();
  }
  for (auto* cmd : {dual_cmd, wenum_cmd}) {
    cmd->add_option("code", o.input, "Code file")->required();
  }
  orbifold_cmd->add_option("--delta", o.delta, "delta as a 0/1 string")->required();
  find_cmd->add_option("--max-weight", o.max_weight, "Largest weight to list")
      ->capture_default_str();
  char_cmd->add_flag("--prefactor", o.prefactor, "Multiply by q^(-n/48)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  Emitter emitter(out, o.format == "kv" ? Format::kKeyValue : Format::kText);
  try {
    if (validate_cmd->parsed()) return cmd_validate(o, emitter);
    if (dual_cmd->parsed()) return cmd_dual(o, emitter);
    if (wenum_cmd->parsed()) return cmd_wenum(o, emitter);
    if (char_cmd->parsed()) return cmd_char(o, emitter);
    if (v1_cmd->parsed()) return cmd_v1(o, emitter);
    if (orbifold_cmd->parsed()) return cmd_orbifold(o, emitter);
    if (pipeline_cmd->parsed()) return cmd_pipeline(o, emitter);
    if (find_cmd->parsed()) return cmd_find_delta(o, emitter);
  } catch (const ParseError& e) {
    err << "vframe: parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapacityError& e) {
    err << "vframe: capacity error: " << e.what() << '\n';
    return kInputError;
  } catch (const DimensionError& e) {
    err << "vframe: dimension error: " << e.what() << '\n';
    return kInputError;
  } catch (const TruncationError& e) {
    err << "vframe: truncation error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "vframe: domain error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "vframe: validation failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const HypothesisError& e) {
    err << "vframe: hypothesis failed: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kInputError;
}

}  // namespace vframe::cli

#include "vframe/structure.hpp"

#include <algorithm>

#include "vframe/errors.hpp"

namespace vframe {

namespace {

std::string first_odd_generator(const LinearCode& c) {
  for (const auto& g : c.generators()) {
    if (g.weight() % 2 != 0) return g.to_string();
  }
  return {};
}

}  // namespace

StructureCodes::StructureCodes(LinearCode c, LinearCode d) : c_(std::move(c)), d_(std::move(d)) {
  if (c_.length() != d_.length()) {
    throw DimensionError("structure codes have different lengths (C: " +
                         std::to_string(c_.length()) + ", D: " + std::to_string(d_.length()) +
                         ")");
  }
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string ValidationReport::rank() const {
  if (frame_length % 2 == 0) return std::to_string(frame_length / 2);
  return std::to_string(frame_length) + "/2";
}

ValidationReport validate(const StructureCodes& s, ValidationOptions options) {
  ValidationReport report;
  report.frame_length = s.frame_length();
  report.dim_c = s.c().dimension();
  report.dim_d = s.d().dimension();

  const bool c_even = is_even(s.c());
  report.checks.push_back(
      {kCheckCEven, c_even, c_even ? "" : "odd-weight generator " + first_odd_generator(s.c())});
  const bool d_even = is_even(s.d());
  report.checks.push_back(
      {kCheckDEven, d_even, d_even ? "" : "odd-weight generator " + first_odd_generator(s.d())});

  // C in dual(D) iff every generator pair is orthogonal.
  std::string clash;
  for (const auto& a : s.c().generators()) {
    for (const auto& b : s.d().generators()) {
      if (inner_product(a, b) != 0) {
        clash = "<" + a.to_string() + ", " + b.to_string() + "> = 1";
        break;
      }
    }
    if (!clash.empty()) break;
  }
  report.checks.push_back({kCheckOrthogonal, clash.empty(), clash});

  const bool n_even = s.frame_length() % 2 == 0;
  report.checks.push_back(
      {kCheckLengthEven, n_even, n_even ? "" : "n = " + std::to_string(s.frame_length())});

  if (options.strict) {
    const WeightEnumerator we = weight_enumerator(s.d());
    std::string bad;
    for (std::size_t w = 0; w < we.counts.size(); ++w) {
      if (w % 8 != 0 && we.counts[w] != 0) {
        bad = "D has " + we.counts[w].str() + " word(s) of weight " + std::to_string(w);
        break;
      }
    }
    report.checks.push_back({kCheckDivisibleBy8, bad.empty(), bad});
  }
  return report;
}

void require_valid(const StructureCodes& s, ValidationOptions options) {
  const ValidationReport report = validate(s, options);
  for (const auto& check : report.checks) {
    if (!check.passed) {
      throw ValidationError("structure codes fail check '" + check.name + "'" +
                            (check.detail.empty() ? "" : ": " + check.detail));
    }
  }
}

bool is_holomorphic(const StructureCodes& s) {
  require_valid(s);
  return s.c() == dual(s.d());
}

BinaryWord tau_word(const FrameModuleLabel& m) {
  BinaryWord w(m.length());
  for (std::size_t i = 0; i < m.length(); ++i) {
    if (m[i] == IsingLabel::kSixteenth) w.set(i);
  }
  return w;
}

std::vector<BinaryWord> weight_two_codewords(const LinearCode& c) {
  const std::size_t n = c.length();
  std::vector<BinaryWord> found;
  // e_i + e_j is a codeword iff e_i and e_j have the same residue.
  std::vector<BinaryWord> residues;
  residues.reserve(n);
  for (std::size_t i = 0; i < n; ++i) residues.push_back(c.reduce(BinaryWord::unit(n, i)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (residues[i] == residues[j]) {
        BinaryWord w(n);
        w.set(i);
        w.set(j);
        found.push_back(w);
      }
    }
  }
  return found;
}

V1Obstruction v1_code_obstruction(const StructureCodes& s) {
  require_valid(s);
  if (s.d().dimension() > kEnumerationCutoff) {
    throw CapacityError("v1 obstruction: dim D = " + std::to_string(s.d().dimension()) +
                        " exceeds enumeration cutoff");
  }
  V1Obstruction report;
  report.weight_two_words = weight_two_codewords(s.c());
  report.a2 = report.weight_two_words.size();
  for_each_codeword(s.d(), [&](const BinaryWord& alpha) {
    if (!alpha.is_zero() && alpha.weight() <= 16) report.suspicious_tau_words.push_back(alpha);
  });
  std::sort(report.suspicious_tau_words.begin(), report.suspicious_tau_words.end(),
            [](const BinaryWord& a, const BinaryWord& b) {
              if (a.weight() != b.weight()) return a.weight() < b.weight();
              return a.to_string() > b.to_string();
            });
  return report;
}

AttachedStructure attach_decomposition(const StructureCodes& s, const FrameDecomposition& d) {
  if (d.length() != s.frame_length()) {
    throw DimensionError("decomposition length " + std::to_string(d.length()) +
                         " differs from frame length " + std::to_string(s.frame_length()));
  }
  for (const auto& entry : d.entries()) {
    const BinaryWord tw = tau_word(entry.label);
    if (!contains(s.d(), tw)) {
      throw InconsistencyError("decomposition entry (" + to_string(entry.label) +
                               "): tau-word " + tw.to_string() + " is not in D");
    }
    if (tw.is_zero() && !contains(s.c(), entry.label.doubled_word())) {
      throw InconsistencyError("decomposition entry (" + to_string(entry.label) +
                               "): doubled label " + entry.label.doubled_word().to_string() +
                               " is not in C");
    }
  }
  return AttachedStructure{s, d};
}

}  // namespace vframe

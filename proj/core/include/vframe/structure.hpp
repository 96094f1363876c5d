#pragma once

// Structure codes (C, D) of a framed VOA: C is the code of the tau-word-zero
// part V^0 = M_C, D the set of 1/16-words that occur.

#include <string>
#include <vector>

#include "vframe/gf2.hpp"
#include "vframe/labels.hpp"

namespace vframe {

class StructureCodes {
 public:
  // Only checks that both codes have the same length; the axioms are checked
  // by validate() so that invalid pairs can still be reported on.
  StructureCodes(LinearCode c, LinearCode d);

  std::size_t frame_length() const noexcept { return c_.length(); }
  const LinearCode& c() const noexcept { return c_; }
  const LinearCode& d() const noexcept { return d_; }

  friend bool operator==(const StructureCodes&, const StructureCodes&) = default;

 private:
  LinearCode c_;
  LinearCode d_;
};

struct ValidationOptions {
  // Additionally require wt(alpha) = 0 mod 8 for every alpha in D.
  bool strict = false;
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  std::size_t frame_length = 0;
  std::size_t dim_c = 0;
  std::size_t dim_d = 0;

  bool ok() const;
  // Central charge n/2 as a reduced fraction ("8", "1/2").
  std::string rank() const;
};

// Check names used in reports.
inline constexpr const char* kCheckCEven = "C even";
inline constexpr const char* kCheckDEven = "D even";
inline constexpr const char* kCheckOrthogonal = "C in dual(D)";
inline constexpr const char* kCheckLengthEven = "n even";
inline constexpr const char* kCheckDivisibleBy8 = "D weights divisible by 8";

ValidationReport validate(const StructureCodes& s, ValidationOptions options = {});

// Throws ValidationError naming the first failing check.
void require_valid(const StructureCodes& s, ValidationOptions options = {});

// C == dual(D) by canonical form. Requires a valid pair.
bool is_holomorphic(const StructureCodes& s);

// Word with a 1 exactly at the 1/16 coordinates.
BinaryWord tau_word(const FrameModuleLabel& m);

// All weight-2 codewords, found by testing each pair of coordinates.
std::vector<BinaryWord> weight_two_codewords(const LinearCode& c);

struct V1Obstruction {
  // A_2(C); a positive count certifies V_1 != 0.
  std::size_t a2 = 0;
  std::vector<BinaryWord> weight_two_words;
  // Nonzero alpha in D with wt(alpha)/16 <= 1: the only 1/16-words whose
  // components could still reach weight 1. Ordered by weight, then value.
  std::vector<BinaryWord> suspicious_tau_words;

  bool certifies_nonzero_v1() const { return a2 > 0; }
};

// Requires a valid pair and dim D within the enumeration cutoff.
V1Obstruction v1_code_obstruction(const StructureCodes& s);

struct AttachedStructure {
  StructureCodes codes;
  FrameDecomposition decomposition;
};

// Every entry's tau-word must lie in D, and entries without 1/16
// coordinates must have their doubled label in C (InconsistencyError).
AttachedStructure attach_decomposition(const StructureCodes& s, const FrameDecomposition& d);

}  // namespace vframe

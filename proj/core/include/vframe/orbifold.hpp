#pragma once

// Miyamoto involutions tau_beta acting on the D-graded decomposition, the
// tau_delta-orbifold transform on structure codes and the code-level
// certificates of the V_1 = 0 uniqueness argument.

#include <optional>
#include <string>
#include <vector>

#include "vframe/gf2.hpp"
#include "vframe/structure.hpp"

namespace vframe {

// tau_beta acts on V^alpha by (-1)^<alpha, beta>; it is the identity iff
// beta lies in dual(D), so the involutions form a group isomorphic to
// Z_2^n / dual(D).
class TauInvolution {
 public:
  TauInvolution(StructureCodes codes, BinaryWord beta);

  const StructureCodes& codes() const noexcept { return codes_; }
  const BinaryWord& beta() const noexcept { return beta_; }
  bool is_identity() const;

 private:
  StructureCodes codes_;
  BinaryWord beta_;
};

// +1 or -1. DomainError if alpha is not in D (V^alpha = 0 there).
int tau_sign(const TauInvolution& t, const BinaryWord& alpha);

// beta_1 + beta_2 in dual(D). DomainError for different structure codes.
bool tau_equivalent(const TauInvolution& t1, const TauInvolution& t2);

// D^0 = {alpha in D : <alpha, delta> = 0}.
LinearCode fixed_subcode(const LinearCode& d, const BinaryWord& delta);
LinearCode fixed_subcode(const StructureCodes& s, const BinaryWord& delta);

enum class Parity { kEven, kOdd };

struct OrbifoldCertificates {
  bool output_holomorphic = false;
  std::size_t output_a2 = 0;
  bool delta_in_output_c = false;
};

struct OrbifoldResult {
  StructureCodes input;
  BinaryWord delta;
  StructureCodes output;
  LinearCode d0;
  Parity parity;
  OrbifoldCertificates certificates;
};

// Structure codes of V(tau_delta) for a holomorphic V: (C + <delta>, D^0)
// when wt(delta) is even, (C, D) when it is odd. HypothesisError for a
// non-holomorphic input, TrivialityError when delta is in C.
OrbifoldResult orbifold_transform(const StructureCodes& s, const BinaryWord& delta);

// The involution g on V(tau_delta): +1 on the D^0-graded part inherited from
// V, -1 on the delta + C coset part. Only code-level data is produced.
struct GSplit {
  // (C, D^0): the g-fixed part, equal to the tau_delta-fixed part of V.
  StructureCodes plus_codes;
  // Coset delta + C, carried over D^0.
  BinaryWord coset_representative;
  // A_2(C): grade-1 dimension of the plus part seen at code level.
  std::size_t plus_grade1_dimension = 0;
  // Weight-2 words of delta + C; each gives a grade-1 state of M_{delta+C}
  // inside the minus part, so this is a lower bound.
  std::size_t minus_grade1_count = 0;
  // Minimum weight in delta + C (top weight of M_{delta+C} is half of it);
  // empty when C is too large to enumerate.
  std::optional<std::size_t> coset_min_weight;

  // Every grade-1 state sits in the minus part and the minus part has one:
  // then [V_1, V_1] lies in the plus part's grade 1, which is zero.
  bool abelian_certificate() const {
    return plus_grade1_dimension == 0 && minus_grade1_count >= 1;
  }
};

// DomainError for odd-parity results.
GSplit g_split(const OrbifoldResult& r);

struct PipelineCertificate {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PipelineReport {
  BinaryWord delta;
  OrbifoldResult orbifold;
  GSplit split;
  std::vector<PipelineCertificate> certificates;

  bool all_passed() const;
};

inline constexpr const char* kCertHolomorphic = "output holomorphic";
inline constexpr const char* kCertNonzeroV1 = "delta in C~ and A2(C~) >= 1";
inline constexpr const char* kCertAbelian = "grade-1 states confined to g-minus part";
inline constexpr const char* kCertIndex = "dim D0 = dim D - 1";

// Runs the code-level steps of the uniqueness argument: with A_2(C) = 0 take
// delta = (1,1,0,...,0), orbifold by tau_delta and certify the result.
// Any failed precondition raises HypothesisError naming it.
PipelineReport moonshine_pipeline(const StructureCodes& s);

struct DeltaCandidate {
  BinaryWord delta;
  std::size_t dim_d0 = 0;
};

// Even-weight words delta not in C with 2 <= wt(delta) <= max_weight, in
// order of weight then position, annotated with dim D^0.
std::vector<DeltaCandidate> find_delta(const StructureCodes& s, std::size_t max_weight);

}  // namespace vframe

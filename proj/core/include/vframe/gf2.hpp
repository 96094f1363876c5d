#pragma once

// Linear algebra over GF(2): fixed-length binary words, linear codes kept in
// canonical reduced row-echelon form, duals, cosets and weight enumerators.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vframe {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxWordLength = 128;

// Largest code dimension that is enumerated codeword by codeword.
inline constexpr std::size_t kEnumerationCutoff = 28;

class BinaryWord {
 public:
  // The zero word of the given length; 1 <= length <= kMaxWordLength.
  explicit BinaryWord(std::size_t length);

  static BinaryWord from_string(std::string_view bits);
  static BinaryWord unit(std::size_t length, std::size_t position);
  static BinaryWord ones(std::size_t length);

  std::size_t length() const noexcept { return length_; }
  bool bit(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);

  std::size_t weight() const noexcept {
    return static_cast<std::size_t>(std::popcount(limbs_[0]) + std::popcount(limbs_[1]));
  }
  bool is_zero() const noexcept { return (limbs_[0] | limbs_[1]) == 0; }

  // Index of the first 1 bit, if any.
  std::optional<std::size_t> lowest_set_bit() const noexcept;

  // Bitwise sum; lengths must agree (DimensionError otherwise).
  BinaryWord& operator^=(const BinaryWord& other);
  friend BinaryWord operator^(BinaryWord a, const BinaryWord& b) { return a ^= b; }
  friend BinaryWord operator+(BinaryWord a, const BinaryWord& b) { return a ^= b; }

  // Unchecked sum for hot loops where the lengths are known to agree.
  void xor_unchecked(const BinaryWord& other) noexcept {
    limbs_[0] ^= other.limbs_[0];
    limbs_[1] ^= other.limbs_[1];
  }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b);

  std::string to_string() const;

  const std::array<std::uint64_t, 2>& limbs() const noexcept { return limbs_; }

 private:
  std::size_t length_;
  std::array<std::uint64_t, 2> limbs_{0, 0};
};

// Parses a '0'/'1' string; bit i of the result is s[i].
BinaryWord word_from_string(std::string_view s);

// <a,b> = sum a_i b_i mod 2.
int inner_product(const BinaryWord& a, const BinaryWord& b);

struct BinaryWordHash {
  std::size_t operator()(const BinaryWord& w) const noexcept {
    const auto& l = w.limbs();
    return std::hash<std::uint64_t>{}(l[0] * 0x9E3779B97F4A7C15ULL ^ l[1]) ^ w.length();
  }
};

// A binary linear code. Generators are stored in reduced row-echelon form
// with strictly increasing pivot columns (the pivot of a row is its first
// 1 bit), so two codes are equal iff their generator lists are equal.
class LinearCode {
 public:
  // Gaussian elimination of arbitrary (possibly dependent or empty) rows.
  static LinearCode from_generators(std::size_t length, std::span<const BinaryWord> rows);
  static LinearCode zero(std::size_t length);
  static LinearCode full_space(std::size_t length);

  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return generators_.size(); }
  const std::vector<BinaryWord>& generators() const noexcept { return generators_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // 2^dimension.
  BigInt size() const;

  // Residue of w modulo the code; zero iff w is a codeword.
  BinaryWord reduce(BinaryWord w) const;

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  LinearCode(std::size_t length, std::vector<BinaryWord> generators,
             std::vector<std::size_t> pivots);

  std::size_t length_;
  std::vector<BinaryWord> generators_;
  std::vector<std::size_t> pivots_;
};

// Length is taken from the rows; DimensionError on mixed lengths or empty input.
LinearCode code_from_generators(std::span<const BinaryWord> rows);
LinearCode code_from_generators(std::size_t length, std::span<const BinaryWord> rows);

LinearCode dual(const LinearCode& c);
bool contains(const LinearCode& c, const BinaryWord& w);
LinearCode extend(const LinearCode& c, const BinaryWord& delta);
bool is_even(const LinearCode& c);

// True iff every generator of `sub` lies in `super`.
bool is_subcode(const LinearCode& sub, const LinearCode& super);

// RM(r, m) of length 2^m (m <= 7): evaluations of all monomials of degree <= r
// on the points of GF(2)^m, point p being coordinate p.
LinearCode reed_muller(int r, int m);

struct WeightEnumerator {
  std::size_t length = 0;
  std::vector<BigInt> counts;  // counts[w] = number of codewords of weight w

  BigInt total() const;
  const BigInt& at(std::size_t w) const { return counts.at(w); }
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

// Visits every codeword exactly once (Gray-code order). Requires
// dimension <= kEnumerationCutoff.
void for_each_codeword(const LinearCode& c, const std::function<void(const BinaryWord&)>& visit);

// Visits delta + w for every w in c.
void for_each_in_coset(const LinearCode& c, const BinaryWord& delta,
                       const std::function<void(const BinaryWord&)>& visit);
std::vector<BinaryWord> coset(const LinearCode& c, const BinaryWord& delta);

// Counts codewords by weight directly; CapacityError above the cutoff. Large
// codes are split across hardware threads.
WeightEnumerator exhaustive_weight_enumerator(const LinearCode& c);

// Enumerator of the dual code from the enumerator of a linear code:
// B_j = |C|^-1 sum_i A_i K_j(i), with K_j the binary Krawtchouk polynomials.
WeightEnumerator macwilliams_transform(const WeightEnumerator& we);

// Exhaustive when dim(c) <= cutoff, otherwise via the dual and MacWilliams.
WeightEnumerator weight_enumerator(const LinearCode& c);

}  // namespace vframe

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support/oracles.hpp"
#include "vframe/errors.hpp"
#include "vframe/gf2.hpp"

namespace vframe {
namespace {

using testing::all_codewords;
using testing::brute_force_dual_words;
using testing::brute_force_enumerator;

BinaryWord W(const char* s) { return word_from_string(s); }

LinearCode code(std::initializer_list<const char*> rows) {
  std::vector<BinaryWord> words;
  for (const char* r : rows) words.push_back(W(r));
  return code_from_generators(words);
}

// RM(1,4) generators written out by hand: all-ones and the indicators of
// x_j = 1 for j = 0..3 (point p is coordinate p).
LinearCode rm14_by_hand() {
  return code({"1111111111111111", "0101010101010101", "0011001100110011", "0000111100001111",
               "0000000011111111"});
}

TEST(BinaryWord, FromStringSetsBits) {
  const BinaryWord w = W("1100");
  EXPECT_EQ(w.length(), 4u);
  EXPECT_TRUE(w.bit(0));
  EXPECT_TRUE(w.bit(1));
  EXPECT_FALSE(w.bit(2));
  EXPECT_FALSE(w.bit(3));
  EXPECT_EQ(w.weight(), 2u);
  EXPECT_EQ(W("0000").weight(), 0u);
  EXPECT_TRUE(W("0000").is_zero());
}

TEST(BinaryWord, DeltaOfLength48) {
  const BinaryWord delta = W(("11" + std::string(46, '0')).c_str());
  EXPECT_EQ(delta.length(), 48u);
  EXPECT_EQ(delta.weight(), 2u);
  EXPECT_TRUE(delta.bit(0) && delta.bit(1));
}

TEST(BinaryWord, ParseErrorNamesPosition) {
  try {
    W("10a1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 3u);
    EXPECT_NE(std::string(e.what()).find("position 3"), std::string::npos);
  }
  EXPECT_THROW(W(""), ParseError);
  EXPECT_THROW(W(std::string(129, '0').c_str()), ParseError);
  EXPECT_NO_THROW(W(std::string(128, '1').c_str()));
}

TEST(BinaryWord, WordsAcrossLimbBoundary) {
  std::string s(128, '0');
  s[63] = s[64] = s[127] = '1';
  const BinaryWord w = W(s.c_str());
  EXPECT_EQ(w.weight(), 3u);
  EXPECT_EQ(w.to_string(), s);
  EXPECT_EQ(w.lowest_set_bit(), 63u);
}

TEST(InnerProduct, Examples) {
  EXPECT_EQ(inner_product(W("1100"), W("1010")), 1);
  EXPECT_EQ(inner_product(W("1111"), W("1100")), 0);
  for (const char* s : {"1", "1101", "111111", "0000"}) {
    EXPECT_EQ(inner_product(W(s), W(s)), static_cast<int>(W(s).weight() % 2));
  }
  EXPECT_THROW(inner_product(W("11"), W("110")), DimensionError);
}

TEST(CodeFromGenerators, DropsDependentRows) {
  const LinearCode c = code({"1100", "0110", "1010"});
  EXPECT_EQ(c.dimension(), 2u);
  EXPECT_TRUE(contains(c, W("1010")));
  EXPECT_EQ(c, code({"1010", "0110"}));
}

TEST(CodeFromGenerators, EmptyIsZeroCode) {
  const LinearCode c = LinearCode::from_generators(4, {});
  EXPECT_EQ(c.dimension(), 0u);
  EXPECT_EQ(c.length(), 4u);
  EXPECT_TRUE(contains(c, W("0000")));
  EXPECT_FALSE(contains(c, W("1000")));
  EXPECT_EQ(c.size(), 1);
}

TEST(CodeFromGenerators, MixedLengthsRejected) {
  const std::vector<BinaryWord> rows{W("11"), W("110")};
  EXPECT_THROW(code_from_generators(rows), DimensionError);
}

TEST(CodeFromGenerators, CanonicalFormHasIncreasingPivots) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const LinearCode c = testing::random_code(rng, 20, 8);
    const auto& p = c.pivots();
    EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
    EXPECT_EQ(std::adjacent_find(p.begin(), p.end()), p.end());
    for (std::size_t i = 0; i < c.dimension(); ++i) {
      for (std::size_t j = 0; j < c.dimension(); ++j) {
        EXPECT_EQ(c.generators()[j].bit(p[i]), i == j);
      }
    }
  }
}

TEST(CodeFromGenerators, ReedMullerOneFourHasDimensionFiveAndIsClosed) {
  const LinearCode rm = rm14_by_hand();
  EXPECT_EQ(rm.dimension(), 5u);
  EXPECT_EQ(rm, reed_muller(1, 4));
  const auto words = all_codewords(rm);
  const std::set<BinaryWord> set(words.begin(), words.end());
  EXPECT_EQ(set.size(), 32u);
  for (const auto& a : words) {
    for (const auto& b : words) EXPECT_TRUE(set.count(a + b));
  }
}

TEST(Dual, SmallExamples) {
  EXPECT_EQ(dual(LinearCode::zero(4)), LinearCode::full_space(4));
  EXPECT_EQ(dual(code({"1111"})), code({"1100", "0110", "0011"}));
}

TEST(Dual, ReedMullerOneFourIsReedMullerTwoFour) {
  const LinearCode d = dual(reed_muller(1, 4));
  EXPECT_EQ(d.dimension(), 11u);
  EXPECT_EQ(d, reed_muller(2, 4));
  const LinearCode rm14 = reed_muller(1, 4);
  const LinearCode rm24 = reed_muller(2, 4);
  for (const auto& a : rm14.generators()) {
    for (const auto& b : rm24.generators()) EXPECT_EQ(inner_product(a, b), 0);
  }
}

TEST(Dual, MatchesBruteForceOrthogonalComplement) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4 + trial % 9;
    const LinearCode c = testing::random_code(rng, n, trial % 7);
    const auto words = brute_force_dual_words(c);
    const LinearCode d = dual(c);
    EXPECT_EQ(BigInt(words.size()), d.size());
    for (const auto& w : words) EXPECT_TRUE(contains(d, w));
  }
}

TEST(Dual, Involution) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 100;
    const LinearCode c = testing::random_code(rng, n, trial % 12);
    const LinearCode d = dual(c);
    EXPECT_EQ(dual(d), c);
    EXPECT_EQ(c.dimension() + d.dimension(), n);
  }
}

TEST(Contains, Examples) {
  const LinearCode c = code({"11"});
  EXPECT_TRUE(contains(c, W("11")));
  EXPECT_FALSE(contains(c, W("10")));
  EXPECT_THROW(contains(c, W("110")), DimensionError);
}

TEST(Contains, ReedMullerTwoFourHasNoWeightTwoWord) {
  const LinearCode rm24 = reed_muller(2, 4);
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = i + 1; j < 16; ++j) {
      BinaryWord w(16);
      w.set(i);
      w.set(j);
      EXPECT_FALSE(contains(rm24, w));
    }
  }
  // Exhaustive: minimum nonzero weight among the 2^11 codewords is 4.
  std::size_t min_weight = 16;
  for (const auto& w : all_codewords(rm24)) {
    if (!w.is_zero()) min_weight = std::min(min_weight, w.weight());
  }
  EXPECT_EQ(min_weight, 4u);
}

TEST(WeightEnumerator, Examples) {
  const WeightEnumerator we = weight_enumerator(code({"1111"}));
  EXPECT_EQ(we.counts, (std::vector<BigInt>{1, 0, 0, 0, 1}));

  const WeightEnumerator rm = weight_enumerator(reed_muller(1, 4));
  std::vector<BigInt> expected(17, 0);
  expected[0] = 1;
  expected[8] = 30;
  expected[16] = 1;
  EXPECT_EQ(rm.counts, expected);
}

TEST(WeightEnumerator, ReedMullerTwoFourBothRoutesAgree) {
  const LinearCode rm24 = reed_muller(2, 4);
  const auto exhaustive = exhaustive_weight_enumerator(rm24);
  const auto via_dual = macwilliams_transform(exhaustive_weight_enumerator(reed_muller(1, 4)));
  EXPECT_EQ(exhaustive, via_dual);
  const auto brute = brute_force_enumerator(rm24);
  for (std::size_t w = 0; w <= 16; ++w) EXPECT_EQ(exhaustive.counts[w], brute[w]) << w;
  EXPECT_EQ(exhaustive.counts[2], 0);
  EXPECT_EQ(exhaustive.counts[4], 140);
}

TEST(WeightEnumerator, CountsSumToSizeAndMatchBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const LinearCode c = testing::random_code(rng, 3 + trial % 30, trial % 11);
    const auto we = exhaustive_weight_enumerator(c);
    EXPECT_EQ(we.total(), c.size());
    EXPECT_EQ(we.counts[0], 1);
    const auto brute = brute_force_enumerator(c);
    for (std::size_t w = 0; w < brute.size(); ++w) EXPECT_EQ(we.counts[w], brute[w]);
  }
}

TEST(WeightEnumerator, MacWilliamsIdentityOnRandomCodes) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 20;
    const LinearCode c = testing::random_code(rng, n, trial % (n + 1));
    EXPECT_EQ(macwilliams_transform(exhaustive_weight_enumerator(c)),
              exhaustive_weight_enumerator(dual(c)));
  }
}

TEST(WeightEnumerator, ParallelSplitMatchesSerialCount) {
  // dim 22 triggers the block split; compare against the dual route.
  std::mt19937_64 rng(17);
  const LinearCode c = testing::random_code(rng, 30, 22);
  ASSERT_EQ(c.dimension(), 22u);
  const auto direct = exhaustive_weight_enumerator(c);
  const auto via_dual = macwilliams_transform(exhaustive_weight_enumerator(dual(c)));
  EXPECT_EQ(direct, via_dual);
}

TEST(WeightEnumerator, LargeCodeUsesMacWilliamsRoute) {
  // dim 31 > cutoff, dual has dim 1.
  const LinearCode c = dual(LinearCode::from_generators(32, std::vector{BinaryWord::ones(32)}));
  ASSERT_EQ(c.dimension(), 31u);
  EXPECT_THROW(exhaustive_weight_enumerator(c), CapacityError);
  const auto we = weight_enumerator(c);
  // The even-weight code of length 32: A_w = C(32, w) for even w.
  BigInt binom = 1;
  for (std::size_t w = 0; w <= 32; ++w) {
    EXPECT_EQ(we.counts[w], w % 2 == 0 ? binom : BigInt(0)) << w;
    binom = binom * (32 - w) / (w + 1);
  }
}

TEST(WeightEnumerator, CapacityErrorWhenBothSidesTooLarge) {
  std::vector<BinaryWord> rows;
  for (std::size_t i = 0; i < 30; ++i) rows.push_back(BinaryWord::unit(60, i));
  const LinearCode c = LinearCode::from_generators(60, rows);
  EXPECT_THROW(weight_enumerator(c), CapacityError);
}

TEST(Coset, Examples) {
  const LinearCode c = code({"11"});
  auto words = coset(c, W("10"));
  std::sort(words.begin(), words.end());
  std::vector<BinaryWord> expected{W("10"), W("01")};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(words, expected);

  auto same = coset(c, W("11"));
  std::sort(same.begin(), same.end());
  auto codewords = all_codewords(c);
  std::sort(codewords.begin(), codewords.end());
  EXPECT_EQ(same, codewords);
}

TEST(Coset, ReedMullerTwoFourWeightTwoShift) {
  const BinaryWord delta = W("1100000000000000");
  const auto words = coset(reed_muller(2, 4), delta);
  EXPECT_EQ(words.size(), 2048u);
  const std::set<BinaryWord> distinct(words.begin(), words.end());
  EXPECT_EQ(distinct.size(), 2048u);
  std::size_t min_weight = 16;
  for (const auto& w : words) min_weight = std::min(min_weight, w.weight());
  EXPECT_EQ(min_weight, 2u);
}

TEST(Coset, CapacityAndLengthErrors) {
  EXPECT_THROW(coset(code({"11"}), W("101")), DimensionError);
  const LinearCode big = LinearCode::full_space(29);
  EXPECT_THROW(coset(big, BinaryWord(29)), CapacityError);
}

TEST(Extend, Examples) {
  const LinearCode c = extend(code({"1111"}), W("1100"));
  EXPECT_EQ(c, code({"1100", "0011"}));
  EXPECT_EQ(c.dimension(), 2u);
  const LinearCode same = extend(code({"1111"}), W("1111"));
  EXPECT_EQ(same, code({"1111"}));
  EXPECT_THROW(extend(code({"1111"}), W("11")), DimensionError);
}

TEST(Extend, ReedMullerTwoFourByWeightTwoWord) {
  const BinaryWord delta = W("1100000000000000");
  const LinearCode c = extend(reed_muller(2, 4), delta);
  EXPECT_EQ(c.dimension(), 12u);
  EXPECT_TRUE(contains(c, delta));
  EXPECT_TRUE(is_subcode(reed_muller(2, 4), c));
}

TEST(Extend, ContainsOriginalAndDelta) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 40;
    const LinearCode c = testing::random_code(rng, n, trial % 9);
    const BinaryWord delta = testing::random_word(rng, n);
    const LinearCode e = extend(c, delta);
    EXPECT_TRUE(is_subcode(c, e));
    EXPECT_TRUE(contains(e, delta));
    EXPECT_EQ(e.dimension(), c.dimension() + (contains(c, delta) ? 0 : 1));
  }
}

TEST(IsEven, Examples) {
  EXPECT_TRUE(is_even(code({"11"})));
  EXPECT_FALSE(is_even(code({"100"})));
  EXPECT_TRUE(is_even(reed_muller(1, 4)));
  for (const auto& w : all_codewords(reed_muller(1, 4))) {
    EXPECT_TRUE(w.weight() == 0 || w.weight() == 8 || w.weight() == 16);
  }
  EXPECT_TRUE(is_even(LinearCode::zero(3)));
}

TEST(IsEven, AgreesWithAllCodewords) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const LinearCode c = trial % 2 ? testing::random_even_code(rng, 12, 5)
                                   : testing::random_code(rng, 12, 5);
    const auto words = all_codewords(c);
    const bool all_even = std::all_of(words.begin(), words.end(),
                                      [](const BinaryWord& w) { return w.weight() % 2 == 0; });
    EXPECT_EQ(is_even(c), all_even);
  }
}

}  // namespace
}  // namespace vframe

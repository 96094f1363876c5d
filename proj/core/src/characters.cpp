#include "vframe/characters.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "vframe/errors.hpp"

namespace vframe {

namespace {

// prod_{k>=0} (1 + sign * q^(offset + k*step)) on the exponents 0..truncation,
// as a dense vector indexed by exponent.
std::vector<BigInt> dense_product(std::int64_t offset, std::int64_t step, int sign,
                                  std::int64_t truncation) {
  std::vector<BigInt> dp(static_cast<std::size_t>(truncation + 1), 0);
  dp[0] = 1;
  for (std::int64_t part = offset; part <= truncation; part += step) {
    for (std::int64_t e = truncation; e >= part; --e) {
      const auto& src = dp[static_cast<std::size_t>(e - part)];
      if (src == 0) continue;
      if (sign > 0) {
        dp[static_cast<std::size_t>(e)] += src;
      } else {
        dp[static_cast<std::size_t>(e)] -= src;
      }
    }
  }
  return dp;
}

QSeries compute_ising_character(IsingLabel h, std::int64_t truncation) {
  QSeries::Terms terms;
  if (h == IsingLabel::kSixteenth) {
    const std::int64_t lead = conformal_weight(h);
    if (truncation >= lead) {
      const auto dp = dense_product(kExponentUnit, kExponentUnit, +1, truncation - lead);
      for (std::size_t e = 0; e < dp.size(); ++e) {
        if (dp[e] != 0) terms.emplace(static_cast<std::int64_t>(e) + lead, dp[e]);
      }
    }
    return QSeries(truncation, std::move(terms));
  }

  if (truncation < 0) return QSeries(truncation);
  const std::int64_t half = kExponentUnit / 2;
  const auto plus = dense_product(half, kExponentUnit, +1, truncation);
  const auto minus = dense_product(half, kExponentUnit, -1, truncation);
  for (std::size_t e = 0; e < plus.size(); ++e) {
    // Even-size subsets build ch_0, odd-size subsets ch_1/2.
    BigInt twice = plus[e];
    if (h == IsingLabel::kZero) {
      twice += minus[e];
    } else {
      twice -= minus[e];
    }
    if (twice == 0) continue;
    terms.emplace(static_cast<std::int64_t>(e), twice / 2);
  }
  return QSeries(truncation, std::move(terms));
}

std::mutex memo_mutex;
std::map<std::pair<IsingLabel, std::int64_t>, QSeries> memo;

}  // namespace

QSeries ising_character(IsingLabel h, std::int64_t truncation) {
  const auto key = std::make_pair(h, truncation);
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  QSeries result = compute_ising_character(h, truncation);
  std::lock_guard lock(memo_mutex);
  return memo.try_emplace(key, std::move(result)).first->second;
}

QSeries frame_module_character(const FrameModuleLabel& m, std::int64_t truncation) {
  unsigned counts[3] = {0, 0, 0};
  for (IsingLabel h : m.labels()) counts[static_cast<std::size_t>(h)]++;
  QSeries result = QSeries::one(truncation);
  for (IsingLabel h : kAllIsingLabels) {
    const unsigned k = counts[static_cast<std::size_t>(h)];
    if (k > 0) result *= qs_pow(ising_character(h, truncation), k);
  }
  return result;
}

QSeries code_voa_character(const LinearCode& c, std::int64_t truncation) {
  if (!is_even(c)) throw ValidationError("code VOA character requires an even code");
  const WeightEnumerator we = weight_enumerator(c);
  const std::size_t n = c.length();
  const QSeries ch0 = ising_character(IsingLabel::kZero, truncation);
  const QSeries ch_half = ising_character(IsingLabel::kHalf, truncation);

  // half_pow[w] = ch_1/2^w and zero_pow[j] = ch_0^j, built incrementally.
  std::vector<QSeries> half_pow{QSeries::one(truncation)};
  std::vector<QSeries> zero_pow{QSeries::one(truncation)};
  for (std::size_t i = 1; i <= n; ++i) {
    half_pow.push_back(half_pow.back() * ch_half);
    zero_pow.push_back(zero_pow.back() * ch0);
  }

  QSeries total(truncation);
  for (std::size_t w = 0; w <= n; ++w) {
    if (we.counts[w] == 0) continue;
    total += half_pow[w] * zero_pow[n - w] * we.counts[w];
  }
  return total;
}

QSeries frame_decomposition_character(const FrameDecomposition& d, std::int64_t truncation) {
  QSeries total(truncation);
  for (const auto& [label, multiplicity] : d.entries()) {
    total += frame_module_character(label, truncation) * multiplicity;
  }
  return total;
}

QSeries with_vacuum_prefactor(const QSeries& s, std::size_t frame_length) {
  return s.shifted(-static_cast<std::int64_t>(frame_length));
}

}  // namespace vframe

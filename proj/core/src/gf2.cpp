#include "vframe/gf2.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "vframe/errors.hpp"

namespace vframe {

namespace {

void require_same_length(const BinaryWord& a, const BinaryWord& b, const char* op) {
  if (a.length() != b.length()) {
    throw DimensionError(std::string(op) + ": length mismatch (" + std::to_string(a.length()) +
                         " vs " + std::to_string(b.length()) + ")");
  }
}

void require_enumerable(const LinearCode& c, const char* op) {
  if (c.dimension() > kEnumerationCutoff) {
    throw CapacityError(std::string(op) + ": dimension " + std::to_string(c.dimension()) +
                        " exceeds enumeration cutoff " + std::to_string(kEnumerationCutoff));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// BinaryWord

BinaryWord::BinaryWord(std::size_t length) : length_(length) {
  if (length == 0 || length > kMaxWordLength) {
    throw DimensionError("word length must be in [1, " + std::to_string(kMaxWordLength) +
                         "], got " + std::to_string(length));
  }
}

BinaryWord BinaryWord::from_string(std::string_view bits) {
  if (bits.empty()) throw ParseError("empty binary word");
  if (bits.size() > kMaxWordLength) {
    throw ParseError("binary word of length " + std::to_string(bits.size()) +
                     " exceeds maximum " + std::to_string(kMaxWordLength));
  }
  BinaryWord w(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    switch (bits[i]) {
      case '0':
        break;
      case '1':
        w.set(i);
        break;
      default:
        throw ParseError("invalid character '" + std::string(1, bits[i]) + "' at position " +
                             std::to_string(i + 1) + " of binary word",
                         0, i + 1);
    }
  }
  return w;
}

BinaryWord BinaryWord::unit(std::size_t length, std::size_t position) {
  BinaryWord w(length);
  w.set(position);
  return w;
}

BinaryWord BinaryWord::ones(std::size_t length) {
  BinaryWord w(length);
  for (std::size_t i = 0; i < length; ++i) w.set(i);
  return w;
}

bool BinaryWord::bit(std::size_t i) const {
  if (i >= length_) throw DimensionError("bit index " + std::to_string(i) + " out of range");
  return (limbs_[i >> 6] >> (i & 63)) & 1U;
}

void BinaryWord::set(std::size_t i, bool value) {
  if (i >= length_) throw DimensionError("bit index " + std::to_string(i) + " out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    limbs_[i >> 6] |= mask;
  } else {
    limbs_[i >> 6] &= ~mask;
  }
}

void BinaryWord::flip(std::size_t i) {
  if (i >= length_) throw DimensionError("bit index " + std::to_string(i) + " out of range");
  limbs_[i >> 6] ^= std::uint64_t{1} << (i & 63);
}

std::optional<std::size_t> BinaryWord::lowest_set_bit() const noexcept {
  if (limbs_[0] != 0) return static_cast<std::size_t>(std::countr_zero(limbs_[0]));
  if (limbs_[1] != 0) return 64 + static_cast<std::size_t>(std::countr_zero(limbs_[1]));
  return std::nullopt;
}

BinaryWord& BinaryWord::operator^=(const BinaryWord& other) {
  require_same_length(*this, other, "word sum");
  xor_unchecked(other);
  return *this;
}

std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  if (auto c = a.limbs_[1] <=> b.limbs_[1]; c != 0) return c;
  return a.limbs_[0] <=> b.limbs_[0];
}

std::string BinaryWord::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (bit(i)) s[i] = '1';
  }
  return s;
}

BinaryWord word_from_string(std::string_view s) { return BinaryWord::from_string(s); }

int inner_product(const BinaryWord& a, const BinaryWord& b) {
  require_same_length(a, b, "inner product");
  const auto& x = a.limbs();
  const auto& y = b.limbs();
  return (std::popcount(x[0] & y[0]) + std::popcount(x[1] & y[1])) & 1;
}

// ---------------------------------------------------------------------------
// LinearCode

LinearCode::LinearCode(std::size_t length, std::vector<BinaryWord> generators,
                       std::vector<std::size_t> pivots)
    : length_(length), generators_(std::move(generators)), pivots_(std::move(pivots)) {}

LinearCode LinearCode::from_generators(std::size_t length, std::span<const BinaryWord> rows) {
  if (length == 0 || length > kMaxWordLength) {
    throw DimensionError("code length must be in [1, " + std::to_string(kMaxWordLength) + "]");
  }
  std::vector<BinaryWord> basis;
  std::vector<std::size_t> pivots;
  for (const BinaryWord& row : rows) {
    if (row.length() != length) {
      throw DimensionError("generator of length " + std::to_string(row.length()) +
                           " in code of length " + std::to_string(length));
    }
    BinaryWord w = row;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (w.bit(pivots[i])) w.xor_unchecked(basis[i]);
    }
    const auto pivot = w.lowest_set_bit();
    if (!pivot) continue;
    // Clear the new pivot column from existing rows to stay fully reduced.
    for (auto& b : basis) {
      if (b.bit(*pivot)) b.xor_unchecked(w);
    }
    const auto pos = std::lower_bound(pivots.begin(), pivots.end(), *pivot) - pivots.begin();
    basis.insert(basis.begin() + pos, w);
    pivots.insert(pivots.begin() + pos, *pivot);
  }
  return LinearCode(length, std::move(basis), std::move(pivots));
}

LinearCode LinearCode::zero(std::size_t length) { return from_generators(length, {}); }

LinearCode LinearCode::full_space(std::size_t length) {
  std::vector<BinaryWord> rows;
  rows.reserve(length);
  for (std::size_t i = 0; i < length; ++i) rows.push_back(BinaryWord::unit(length, i));
  return from_generators(length, rows);
}

BigInt LinearCode::size() const { return BigInt(1) << static_cast<unsigned>(dimension()); }

BinaryWord LinearCode::reduce(BinaryWord w) const {
  if (w.length() != length_) {
    throw DimensionError("word of length " + std::to_string(w.length()) +
                         " against code of length " + std::to_string(length_));
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (w.bit(pivots_[i])) w.xor_unchecked(generators_[i]);
  }
  return w;
}

LinearCode code_from_generators(std::span<const BinaryWord> rows) {
  if (rows.empty()) throw DimensionError("cannot infer code length from an empty generator list");
  return LinearCode::from_generators(rows.front().length(), rows);
}

LinearCode code_from_generators(std::size_t length, std::span<const BinaryWord> rows) {
  return LinearCode::from_generators(length, rows);
}

LinearCode dual(const LinearCode& c) {
  const std::size_t n = c.length();
  const auto& gens = c.generators();
  const auto& pivots = c.pivots();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  // For each free column j: e_j + sum over rows i with bit j set of e_{pivot_i}.
  std::vector<BinaryWord> rows;
  rows.reserve(n - gens.size());
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    BinaryWord w = BinaryWord::unit(n, j);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].bit(j)) w.set(pivots[i]);
    }
    rows.push_back(w);
  }
  return LinearCode::from_generators(n, rows);
}

bool contains(const LinearCode& c, const BinaryWord& w) { return c.reduce(w).is_zero(); }

LinearCode extend(const LinearCode& c, const BinaryWord& delta) {
  if (delta.length() != c.length()) {
    throw DimensionError("extend: word length " + std::to_string(delta.length()) +
                         " differs from code length " + std::to_string(c.length()));
  }
  std::vector<BinaryWord> rows = c.generators();
  rows.push_back(delta);
  return LinearCode::from_generators(c.length(), rows);
}

bool is_even(const LinearCode& c) {
  return std::all_of(c.generators().begin(), c.generators().end(),
                     [](const BinaryWord& g) { return g.weight() % 2 == 0; });
}

bool is_subcode(const LinearCode& sub, const LinearCode& super) {
  if (sub.length() != super.length()) throw DimensionError("is_subcode: length mismatch");
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const BinaryWord& g) { return contains(super, g); });
}

LinearCode reed_muller(int r, int m) {
  if (m < 0 || m > 7) throw DimensionError("reed_muller: m must be in [0, 7]");
  const std::size_t n = std::size_t{1} << m;
  std::vector<BinaryWord> rows;
  for (unsigned mask = 0; mask < (1U << m); ++mask) {
    if (std::popcount(mask) > r) continue;
    BinaryWord w(n);
    for (unsigned p = 0; p < n; ++p) {
      if ((p & mask) == mask) w.set(p);
    }
    rows.push_back(w);
  }
  return LinearCode::from_generators(n, rows);
}

// ---------------------------------------------------------------------------
// Enumeration

BigInt WeightEnumerator::total() const {
  BigInt sum = 0;
  for (const auto& a : counts) sum += a;
  return sum;
}

void for_each_codeword(const LinearCode& c, const std::function<void(const BinaryWord&)>& visit) {
  for_each_in_coset(c, BinaryWord(c.length()), visit);
}

void for_each_in_coset(const LinearCode& c, const BinaryWord& delta,
                       const std::function<void(const BinaryWord&)>& visit) {
  require_enumerable(c, "coset enumeration");
  if (delta.length() != c.length()) throw DimensionError("coset: length mismatch");
  const auto& gens = c.generators();
  BinaryWord w = delta;
  visit(w);
  const std::uint64_t count = std::uint64_t{1} << gens.size();
  for (std::uint64_t i = 1; i < count; ++i) {
    w.xor_unchecked(gens[static_cast<std::size_t>(std::countr_zero(i))]);
    visit(w);
  }
}

std::vector<BinaryWord> coset(const LinearCode& c, const BinaryWord& delta) {
  require_enumerable(c, "coset");
  std::vector<BinaryWord> out;
  out.reserve(std::size_t{1} << c.dimension());
  for_each_in_coset(c, delta, [&](const BinaryWord& w) { out.push_back(w); });
  return out;
}

namespace {

// Gray-code walk over the span of gens[0..low) shifted by `start`.
void count_block(const std::vector<BinaryWord>& gens, std::size_t low, BinaryWord start,
                 std::vector<std::uint64_t>& counts) {
  counts[start.weight()]++;
  const std::uint64_t steps = std::uint64_t{1} << low;
  for (std::uint64_t i = 1; i < steps; ++i) {
    start.xor_unchecked(gens[static_cast<std::size_t>(std::countr_zero(i))]);
    counts[start.weight()]++;
  }
}

}  // namespace

WeightEnumerator exhaustive_weight_enumerator(const LinearCode& c) {
  require_enumerable(c, "weight enumerator");
  const std::size_t n = c.length();
  const std::size_t k = c.dimension();
  const auto& gens = c.generators();

  // Split the top generators into independent blocks for large codes.
  std::size_t split = 0;
  if (k >= 20) split = std::min<std::size_t>(k - 16, 6);
  const std::size_t low = k - split;
  const std::size_t blocks = std::size_t{1} << split;

  std::vector<std::uint64_t> total(n + 1, 0);
  if (split == 0) {
    count_block(gens, low, BinaryWord(n), total);
  } else {
    const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(hw, blocks);
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n + 1, 0));
    auto work = [&](std::size_t id) {
      for (std::size_t b = next++; b < blocks; b = next++) {
        BinaryWord start(n);
        for (std::size_t j = 0; j < split; ++j) {
          if ((b >> j) & 1U) start.xor_unchecked(gens[low + j]);
        }
        count_block(gens, low, start, partial[id]);
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t id = 0; id < workers; ++id) pool.emplace_back(work, id);
    }
    for (const auto& p : partial) {
      for (std::size_t w = 0; w <= n; ++w) total[w] += p[w];
    }
  }

  WeightEnumerator we{n, std::vector<BigInt>(n + 1)};
  for (std::size_t w = 0; w <= n; ++w) we.counts[w] = total[w];
  return we;
}

WeightEnumerator macwilliams_transform(const WeightEnumerator& we) {
  const std::size_t n = we.length;
  if (we.counts.size() != n + 1) throw DimensionError("weight enumerator has wrong number of counts");
  const BigInt size = we.total();
  if (size <= 0 || (size & (size - 1)) != 0) {
    throw DomainError("MacWilliams transform needs an enumerator whose total is a power of two");
  }

  std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }

  WeightEnumerator out{n, std::vector<BigInt>(n + 1, 0)};
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (we.counts[i] == 0) continue;
      BigInt kraw = 0;
      for (std::size_t s = 0; s <= std::min(i, j); ++s) {
        if (j - s > n - i) continue;
        const BigInt term = binom[i][s] * binom[n - i][j - s];
        if (s % 2 == 0) {
          kraw += term;
        } else {
          kraw -= term;
        }
      }
      acc += we.counts[i] * kraw;
    }
    if (acc % size != 0) throw DomainError("MacWilliams transform: non-integral coefficient");
    out.counts[j] = acc / size;
  }
  return out;
}

WeightEnumerator weight_enumerator(const LinearCode& c) {
  if (c.dimension() <= kEnumerationCutoff) return exhaustive_weight_enumerator(c);
  const LinearCode d = dual(c);
  if (d.dimension() > kEnumerationCutoff) {
    throw CapacityError("weight enumerator: code and dual both exceed dimension " +
                        std::to_string(kEnumerationCutoff));
  }
  return macwilliams_transform(exhaustive_weight_enumerator(d));
}

}  // namespace vframe

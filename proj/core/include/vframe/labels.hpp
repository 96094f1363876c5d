#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vframe/gf2.hpp"

namespace vframe {

// Highest weight h of an irreducible module L(1/2, h) over the c = 1/2
// Virasoro VOA.
enum class IsingLabel : std::uint8_t { kZero, kHalf, kSixteenth };

inline constexpr IsingLabel kAllIsingLabels[] = {IsingLabel::kZero, IsingLabel::kHalf,
                                                 IsingLabel::kSixteenth};

// h in units of 1/48: 0, 24 or 3.
constexpr std::int64_t conformal_weight(IsingLabel h) {
  switch (h) {
    case IsingLabel::kZero:
      return 0;
    case IsingLabel::kHalf:
      return 24;
    case IsingLabel::kSixteenth:
      return 3;
  }
  return 0;
}

// "0", "1/2", "1/16".
std::string to_string(IsingLabel h);
IsingLabel parse_ising_label(std::string_view text);

// Label (h_1, ..., h_n) of the frame module L(1/2,h_1) (x) ... (x) L(1/2,h_n).
class FrameModuleLabel {
 public:
  explicit FrameModuleLabel(std::vector<IsingLabel> labels);

  // h_i = alpha_i / 2 for a word alpha (no 1/16 entries).
  static FrameModuleLabel from_doubled_word(const BinaryWord& alpha);

  std::size_t length() const noexcept { return labels_.size(); }
  const std::vector<IsingLabel>& labels() const noexcept { return labels_; }
  IsingLabel operator[](std::size_t i) const { return labels_.at(i); }

  // Sum of h_i, in 1/48 units.
  std::int64_t top_weight() const;
  bool has_sixteenth() const;

  // Positions labelled 1/2 as a word; only meaningful when !has_sixteenth().
  BinaryWord doubled_word() const;

  friend bool operator==(const FrameModuleLabel&, const FrameModuleLabel&) = default;
  friend auto operator<=>(const FrameModuleLabel&, const FrameModuleLabel&) = default;

 private:
  std::vector<IsingLabel> labels_;
};

// "0,1/2,1/16,..."
std::string to_string(const FrameModuleLabel& m);

// Explicit multiset of frame-module labels with multiplicities. Construction
// enforces: one common length, no duplicate labels, positive multiplicities,
// and multiplicity 1 for labels without 1/16 entries.
class FrameDecomposition {
 public:
  struct Entry {
    FrameModuleLabel label;
    BigInt multiplicity;
  };

  explicit FrameDecomposition(std::size_t length, std::vector<Entry> entries = {});

  std::size_t length() const noexcept { return length_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::size_t length_;
  std::vector<Entry> entries_;
};

}  // namespace vframe

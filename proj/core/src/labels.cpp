#include "vframe/labels.hpp"

#include <algorithm>
#include <set>

#include "vframe/errors.hpp"

namespace vframe {

std::string to_string(IsingLabel h) {
  switch (h) {
    case IsingLabel::kZero:
      return "0";
    case IsingLabel::kHalf:
      return "1/2";
    case IsingLabel::kSixteenth:
      return "1/16";
  }
  return "?";
}

IsingLabel parse_ising_label(std::string_view text) {
  if (text == "0") return IsingLabel::kZero;
  if (text == "1/2") return IsingLabel::kHalf;
  if (text == "1/16") return IsingLabel::kSixteenth;
  throw ParseError("invalid Ising label '" + std::string(text) + "' (expected 0, 1/2 or 1/16)");
}

FrameModuleLabel::FrameModuleLabel(std::vector<IsingLabel> labels) : labels_(std::move(labels)) {
  if (labels_.empty() || labels_.size() > kMaxWordLength) {
    throw DimensionError("frame module label length must be in [1, " +
                         std::to_string(kMaxWordLength) + "]");
  }
}

FrameModuleLabel FrameModuleLabel::from_doubled_word(const BinaryWord& alpha) {
  std::vector<IsingLabel> labels(alpha.length(), IsingLabel::kZero);
  for (std::size_t i = 0; i < alpha.length(); ++i) {
    if (alpha.bit(i)) labels[i] = IsingLabel::kHalf;
  }
  return FrameModuleLabel(std::move(labels));
}

std::int64_t FrameModuleLabel::top_weight() const {
  std::int64_t sum = 0;
  for (IsingLabel h : labels_) sum += conformal_weight(h);
  return sum;
}

bool FrameModuleLabel::has_sixteenth() const {
  return std::find(labels_.begin(), labels_.end(), IsingLabel::kSixteenth) != labels_.end();
}

BinaryWord FrameModuleLabel::doubled_word() const {
  BinaryWord w(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == IsingLabel::kHalf) w.set(i);
  }
  return w;
}

std::string to_string(const FrameModuleLabel& m) {
  std::string out;
  for (std::size_t i = 0; i < m.length(); ++i) {
    if (i > 0) out += ',';
    out += to_string(m[i]);
  }
  return out;
}

FrameDecomposition::FrameDecomposition(std::size_t length, std::vector<Entry> entries)
    : length_(length), entries_(std::move(entries)) {
  std::set<FrameModuleLabel> seen;
  for (const auto& [label, multiplicity] : entries_) {
    if (label.length() != length_) {
      throw DimensionError("decomposition entry (" + to_string(label) + ") has length " +
                           std::to_string(label.length()) + ", expected " +
                           std::to_string(length_));
    }
    if (!seen.insert(label).second) {
      throw ValidationError("duplicate decomposition entry (" + to_string(label) + ")");
    }
    if (multiplicity <= 0) {
      throw ValidationError("decomposition entry (" + to_string(label) +
                            ") has non-positive multiplicity");
    }
    if (!label.has_sixteenth() && multiplicity != 1) {
      throw ValidationError("decomposition entry (" + to_string(label) +
                            ") has no 1/16 coordinate, so its multiplicity must be 1");
    }
  }
}

}  // namespace vframe

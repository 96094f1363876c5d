#include "vframe/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vframe/errors.hpp"

namespace vframe {

QSeries::QSeries(std::int64_t truncation) : truncation_(truncation) {}

QSeries::QSeries(std::int64_t truncation, Terms terms) : truncation_(truncation) {
  for (auto& [e, c] : terms) {
    if (c == 0 || e > truncation_) continue;
    if (e < kMinExponent) {
      throw DomainError("q-series exponent " + std::to_string(e) + "/48 below minimum " +
                        std::to_string(kMinExponent) + "/48");
    }
    terms_.emplace(e, std::move(c));
  }
}

QSeries QSeries::one(std::int64_t truncation) { return monomial(0, 1, truncation); }

QSeries QSeries::monomial(std::int64_t exponent, BigInt coefficient, std::int64_t truncation) {
  Terms t;
  t.emplace(exponent, std::move(coefficient));
  return QSeries(truncation, std::move(t));
}

std::int64_t QSeries::leading_exponent() const {
  if (terms_.empty()) throw DomainError("leading exponent of the zero series");
  return terms_.begin()->first;
}

BigInt QSeries::coefficient_at(std::int64_t e) const {
  if (e > truncation_) {
    throw TruncationError("coefficient of " + render_q_power(e) +
                          " lies beyond truncation order " + render_q_power(truncation_));
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

QSeries QSeries::truncated_to(std::int64_t order) const {
  if (order > truncation_) {
    throw TruncationError("cannot raise truncation order from " + std::to_string(truncation_) +
                          " to " + std::to_string(order));
  }
  QSeries out(order);
  for (auto it = terms_.begin(); it != terms_.end() && it->first <= order; ++it) {
    out.terms_.emplace(it->first, it->second);
  }
  return out;
}

QSeries QSeries::shifted(std::int64_t shift) const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e + shift, c);
  return QSeries(truncation_ + shift, std::move(t));
}

void QSeries::require_same_order(const QSeries& other, const char* op) const {
  if (truncation_ != other.truncation_) {
    throw TruncationError(std::string(op) + ": truncation orders differ (" +
                          std::to_string(truncation_) + " vs " +
                          std::to_string(other.truncation_) + ")");
  }
}

QSeries& QSeries::operator+=(const QSeries& other) {
  require_same_order(other, "q-series sum");
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) { return *this += -other; }

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

QSeries& QSeries::operator*=(const QSeries& other) {
  require_same_order(other, "q-series product");
  // Terms above the order times negative-exponent terms are unknown, so the
  // product is only exact through T + min(0, lead_a, lead_b).
  std::int64_t order = truncation_;
  if (!terms_.empty()) order = std::min(order, truncation_ + terms_.begin()->first);
  if (!other.terms_.empty()) order = std::min(order, truncation_ + other.terms_.begin()->first);
  Terms product;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      const std::int64_t e = ea + eb;
      // Both maps are sorted, so later b-terms only grow the exponent.
      if (e > order) break;
      product[e] += ca * cb;
    }
  }
  *this = QSeries(order, std::move(product));
  return *this;
}

QSeries& QSeries::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

QSeries qs_add(const QSeries& a, const QSeries& b) { return a + b; }

QSeries qs_mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries qs_pow(const QSeries& a, unsigned m) {
  QSeries result = QSeries::one(a.truncation());
  QSeries base = a;
  while (m > 0) {
    if (m & 1U) {
      // Squaring may have lowered the base's order; align before multiplying.
      if (result.truncation() > base.truncation()) {
        result = result.truncated_to(base.truncation());
      }
      result *= base;
    }
    m >>= 1;
    if (m > 0) base *= base;
  }
  return result;
}

BigInt coefficient_at(const QSeries& a, std::int64_t e) { return a.coefficient_at(e); }

std::string render_q_power(std::int64_t e) {
  if (e == 0) return "1";
  if (e == kExponentUnit) return "q";
  const std::int64_t g = std::gcd(e < 0 ? -e : e, kExponentUnit);
  const std::int64_t num = e / g;
  const std::int64_t den = kExponentUnit / g;
  if (den == 1) return "q^" + std::to_string(num);
  return "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

std::string to_string(const QSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << magnitude;
    } else if (magnitude == 1) {
      out << render_q_power(e);
    } else {
      out << magnitude << "*" << render_q_power(e);
    }
  }
  return out.str();
}

}  // namespace vframe

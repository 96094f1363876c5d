#pragma once

// Truncated formal series in q with exponents on the (1/48)Z grid and
// arbitrary-precision integer coefficients.

#include <cstdint>
#include <map>
#include <string>

#include "vframe/gf2.hpp"

namespace vframe {

// Exponents are stored as integers in units of 1/48: q^(1/16) has exponent 3,
// q^(1/2) has exponent 24, q^1 has exponent 48.
inline constexpr std::int64_t kExponentUnit = 48;

// Lowest exponent a series may carry (q^-2).
inline constexpr std::int64_t kMinExponent = -2 * kExponentUnit;

// Through q^20.
inline constexpr std::int64_t kDefaultTruncation = 20 * kExponentUnit;

class QSeries {
 public:
  using Terms = std::map<std::int64_t, BigInt>;

  // The zero series known through exponent `truncation`.
  explicit QSeries(std::int64_t truncation = kDefaultTruncation);

  // Terms above the truncation order are dropped; zero coefficients pruned.
  // Throws DomainError for exponents below kMinExponent.
  QSeries(std::int64_t truncation, Terms terms);

  static QSeries one(std::int64_t truncation = kDefaultTruncation);
  static QSeries monomial(std::int64_t exponent, BigInt coefficient,
                          std::int64_t truncation = kDefaultTruncation);

  std::int64_t truncation() const noexcept { return truncation_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Smallest exponent with a nonzero coefficient; the series must be nonzero.
  std::int64_t leading_exponent() const;

  // Coefficient of q^(e/48); TruncationError if e exceeds the truncation order.
  BigInt coefficient_at(std::int64_t e) const;

  // Drops everything above `order`, which must not exceed the current one.
  QSeries truncated_to(std::int64_t order) const;

  // Multiplies by q^(shift/48); the truncation order moves with it.
  QSeries shifted(std::int64_t shift) const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const QSeries& other);
  QSeries& operator*=(const BigInt& scalar);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
  friend QSeries operator*(QSeries a, const BigInt& s) { return a *= s; }
  QSeries operator-() const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  void require_same_order(const QSeries& other, const char* op) const;

  std::int64_t truncation_;
  Terms terms_;
};

QSeries qs_add(const QSeries& a, const QSeries& b);

// Cauchy product. With nonnegative exponents the order is unchanged; a factor
// with leading exponent m < 0 lowers it to T + m, the last exactly known term.
QSeries qs_mul(const QSeries& a, const QSeries& b);
QSeries qs_pow(const QSeries& a, unsigned m);
BigInt coefficient_at(const QSeries& a, std::int64_t e);

// "1 + 2*q^(1/2) + 196884*q^2"; the zero series renders as "0".
std::string to_string(const QSeries& s);

// Renders q^(e/48) as "1", "q", "q^2", "q^-1", "q^(1/16)" or "q^(-1/2)".
std::string render_q_power(std::int64_t e);

}  // namespace vframe

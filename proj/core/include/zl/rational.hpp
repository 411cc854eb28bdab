#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zl {

using BigInt = mpz_class;

/// Raised by any exact division whose divisor is zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Exact fraction num/den with den > 0 and gcd(|num|, den) = 1.
///
/// Every quantity in the library is carried as a Rational (or a Surd built
/// from two of them); nothing is ever rounded.  The canonical text form is
/// "num/den", always with an explicit denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : value_(n) {}                 // NOLINT(google-explicit-constructor)
  Rational(long n) : value_(n) {}                // NOLINT(google-explicit-constructor)
  Rational(long long n) : value_(BigInt(std::to_string(n))) {}  // NOLINT
  Rational(const BigInt& n) : value_(n) {}       // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den);

  static Rational from_mpq(mpq_class q);

  /// Parses "num/den" or a bare integer.  Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  [[nodiscard]] BigInt floor() const;
  [[nodiscard]] BigInt ceil() const;
  [[nodiscard]] Rational abs() const;

  /// Canonical "num/den".
  [[nodiscard]] std::string str() const;
  /// Display-only decimal rendering with `digits` fractional digits.
  [[nodiscard]] std::string decimal(int digits) const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  explicit Rational(mpq_class q) : value_(std::move(q)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class ArithOp { kAdd, kSub, kMul, kDiv };

/// Single exact binary operation; kDiv by zero throws DivisionByZero.
Rational rat_arith(const Rational& a, const Rational& b, ArithOp op);

/// Integer power for small nonnegative exponents.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace zl

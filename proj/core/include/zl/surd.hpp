#pragma once

#include <compare>
#include <string>

#include "zl/rational.hpp"

namespace zl {

/// The value L + sqrt(S) with L, S rational and S >= 0.
///
/// S = 0 encodes the pure rational L.  Only the coefficient-one radical is
/// modelled: every bound function in this library has that shape.
class Surd {
 public:
  Surd() = default;
  Surd(Rational linear) : linear_(std::move(linear)) {}  // NOLINT(google-explicit-constructor)
  Surd(int linear) : linear_(linear) {}                   // NOLINT(google-explicit-constructor)
  /// Throws std::invalid_argument when radicand < 0.
  Surd(Rational linear, Rational radicand);

  [[nodiscard]] const Rational& linear() const { return linear_; }
  [[nodiscard]] const Rational& radicand() const { return radicand_; }
  [[nodiscard]] bool is_rational() const;

  /// Largest integer k with k <= L + sqrt(S).
  [[nodiscard]] BigInt floor() const;
  /// Smallest integer k with k >= L + sqrt(S).
  [[nodiscard]] BigInt ceil() const;

  /// Display-only decimal approximation; the exact form is (linear, radicand).
  [[nodiscard]] std::string decimal(int digits) const;
  /// "L + sqrt(S)" using canonical rationals, or just "L" when S = 0.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Surd& a, const Surd& b);
  friend std::strong_ordering operator<=>(const Surd& a, const Surd& b);

 private:
  Rational linear_;
  Rational radicand_;
};

/// Exact three-way comparison of L1 + sqrt(S1) against L2 + sqrt(S2).
///
/// Decided by sign analysis of (L1 - L2) against sqrt(S1) - sqrt(S2) with at
/// most two squarings; no floating point is involved.
std::strong_ordering surd_cmp(const Surd& a, const Surd& b);

/// Same as Surd::floor.
BigInt surd_floor(const Surd& x);

/// Exact value of sqrt(S) for a perfect-square rational S, if it is one.
bool rational_sqrt(const Rational& s, Rational& root);

}  // namespace zl

#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zl/rational.hpp"
#include "zl/surd.hpp"

namespace zl {

/// Dense univariate polynomial with rational coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  /// The monomial x.
  static Polynomial x();

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] Rational coeff(std::size_t i) const;
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational eval(const Rational& at) const;
  [[nodiscard]] Polynomial derivative() const;
  [[nodiscard]] std::string str(const std::string& var = "x") const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// True iff the two coefficient lists describe the same polynomial.
///
/// Decided by exact evaluation at 0, 1, ..., d with d the larger degree,
/// which is conclusive for polynomials of degree <= d.
bool poly_identity_check(std::span<const Rational> a, std::span<const Rational> b);
bool poly_identity_check(const Polynomial& a, const Polynomial& b);

/// Identity test for black-box polynomial functions of several variables.
///
/// `f` and `g` must be polynomials of degree <= degrees[i] in variable i.
/// They are compared on the tensor grid prod_i {0, ..., degrees[i]}; a
/// polynomial of that multidegree vanishing on the grid is identically zero.
using MultiFn = std::function<Rational(std::span<const Rational>)>;
bool identity_on_grid(const MultiFn& f, const MultiFn& g, std::span<const int> degrees);

/// Certificate that p(x) >= 0 for every real x >= from, for degree <= 2.
///
/// Constant: c >= 0.  Linear: positive slope and p(from) >= 0.  Quadratic:
/// positive leading coefficient and either a negative discriminant or
/// p(from) >= 0 with p'(from) >= 0 (the larger root is at most `from`).
/// Returns false when no such certificate exists, including degree > 2.
bool nonnegative_tail(const Polynomial& p, const Rational& from);

/// Larger real root of a degree-2 polynomial as an exact surd, if real.
std::optional<Surd> larger_root(const Polynomial& p);

}  // namespace zl

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zl/local_invariants.hpp"
#include "zl/rational.hpp"

namespace zl {

/// A curve with one place at infinity, described by the pole orders p < q of
/// x and y there, its genus, and the numeric models of its finite singular
/// points.
struct CurveProfile {
  std::int64_t g = 0;
  std::int64_t p = 2;
  std::int64_t q = 3;
  std::int64_t p_prime = 1;
  std::vector<SingularPointModel> points;
  std::int64_t nu_prime_inf = 0;
  std::optional<std::int64_t> mu_prime_inf;

  /// Profile with p_prime filled in as gcd(p, q).
  static CurveProfile make(std::int64_t g, std::int64_t p, std::int64_t q, std::vector<SingularPointModel> points = {},
                           std::int64_t nu_prime_inf = 0);

  [[nodiscard]] std::int64_t N() const { return static_cast<std::int64_t>(points.size()); }
  /// sum (r_i - 1).
  [[nodiscard]] std::int64_t R() const;

  /// Throws PreconditionError naming the first broken invariant.
  void validate() const;

  friend bool operator==(const CurveProfile&, const CurveProfile&) = default;
};

/// (p-1)(q-1) - p' + 1 - 2g.
std::int64_t double_points_D(const CurveProfile& profile);

/// sum m_i (ext_nu_i - m_i + r_i + 1) + p' nu'_inf.
Rational energy_E(const CurveProfile& profile);

/// sum (m_i - r_i) <= p + 2g - 1.
bool check_mult_constraint(const CurveProfile& profile);

/// p + q - 2 + 4g + R - sum eta_min(i), the codimension budget.  With
/// include_R = false the R term is left out.
Rational bmy_budget(const CurveProfile& profile, bool include_R = true);

/// sum ext_nu_i + nu'_inf <= bmy_budget(profile, include_R).
bool check_bmy_constraint(const CurveProfile& profile, bool include_R = true);

/// (q-1)(q-2) - sum 2 delta_i - two_delta_inf == 2g.  Throws
/// PreconditionError when a point has no two_delta.
bool genus_formula_check(const CurveProfile& profile, std::int64_t two_delta_inf);

/// D - E.  Positive means the profile cannot be realised.
Rational delta_gap(const CurveProfile& profile);

}  // namespace zl

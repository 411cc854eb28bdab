#include "zl/global_model.hpp"

#include <numeric>
#include <string>

namespace zl {

CurveProfile CurveProfile::make(std::int64_t g, std::int64_t p, std::int64_t q, std::vector<SingularPointModel> points,
                                std::int64_t nu_prime_inf) {
  CurveProfile out;
  out.g = g;
  out.p = p;
  out.q = q;
  out.p_prime = std::gcd(p, q);
  out.points = std::move(points);
  out.nu_prime_inf = nu_prime_inf;
  return out;
}

std::int64_t CurveProfile::R() const {
  std::int64_t r = 0;
  for (const auto& pt : points) r += pt.r - 1;
  return r;
}

void CurveProfile::validate() const {
  if (g < 0) throw PreconditionError("g >= 0", "got " + std::to_string(g));
  if (p < 1 || q < 1) throw PreconditionError("p, q >= 1", "got p = " + std::to_string(p) + ", q = " + std::to_string(q));
  if (p >= q) throw PreconditionError("p < q", "got p = " + std::to_string(p) + ", q = " + std::to_string(q));
  if (q % p == 0) throw PreconditionError("p does not divide q", std::to_string(p) + " | " + std::to_string(q));
  if (p_prime != std::gcd(p, q)) {
    throw PreconditionError("p' = gcd(p, q)", "got " + std::to_string(p_prime));
  }
  if (nu_prime_inf < 0) throw PreconditionError("nu'_inf >= 0", "got " + std::to_string(nu_prime_inf));
  if (mu_prime_inf) {
    if (*mu_prime_inf < 0) throw PreconditionError("mu'_inf >= 0", "got " + std::to_string(*mu_prime_inf));
    if (*mu_prime_inf > p_prime * nu_prime_inf) {
      throw PreconditionError("mu'_inf <= p' nu'_inf", std::to_string(*mu_prime_inf) + " > " +
                                                           std::to_string(p_prime * nu_prime_inf));
    }
  }
  for (const auto& pt : points) pt.validate();
}

std::int64_t double_points_D(const CurveProfile& c) {
  c.validate();
  return (c.p - 1) * (c.q - 1) - c.p_prime + 1 - 2 * c.g;
}

Rational energy_E(const CurveProfile& c) {
  c.validate();
  std::int64_t e = c.p_prime * c.nu_prime_inf;
  for (const auto& pt : c.points) e += pt.m * (pt.ext_nu - pt.m + pt.r + 1);
  return Rational(e);
}

bool check_mult_constraint(const CurveProfile& c) {
  c.validate();
  std::int64_t lhs = 0;
  for (const auto& pt : c.points) lhs += pt.m - pt.r;
  return lhs <= c.p + 2 * c.g - 1;
}

Rational bmy_budget(const CurveProfile& c, bool include_R) {
  c.validate();
  Rational budget(c.p + c.q - 2 + 4 * c.g + (include_R ? c.R() : 0));
  for (const auto& pt : c.points) budget -= pt.eta_min();
  return budget;
}

bool check_bmy_constraint(const CurveProfile& c, bool include_R) {
  std::int64_t lhs = c.nu_prime_inf;
  for (const auto& pt : c.points) lhs += pt.ext_nu;
  return Rational(lhs) <= bmy_budget(c, include_R);
}

bool genus_formula_check(const CurveProfile& c, std::int64_t two_delta_inf) {
  std::int64_t lhs = (c.q - 1) * (c.q - 2) - two_delta_inf;
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    if (!c.points[i].two_delta) {
      throw PreconditionError("two_delta present", "point " + std::to_string(i) + " has no 2 delta");
    }
    lhs -= *c.points[i].two_delta;
  }
  return lhs == 2 * c.g;
}

Rational delta_gap(const CurveProfile& c) { return Rational(double_points_D(c)) - energy_E(c); }

}  // namespace zl

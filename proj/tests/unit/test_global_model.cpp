#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <vector>

#include "zl/global_model.hpp"

using namespace zl;

namespace {

const SingularPointModel kCusp{2, 1, 1, 2};

}  // namespace

// y^2 = x^3: one place at infinity with pole orders (2, 3), one cusp.
TEST(GlobalModel, CuspidalCubic) {
  const CurveProfile c = CurveProfile::make(0, 2, 3, {kCusp});
  EXPECT_EQ(c.p_prime, 1);
  EXPECT_EQ(c.N(), 1);
  EXPECT_EQ(c.R(), 0);
  EXPECT_EQ(double_points_D(c), 2);
  EXPECT_EQ(energy_E(c), Rational(2));
  EXPECT_EQ(delta_gap(c), Rational(0));
  EXPECT_TRUE(genus_formula_check(c, 0));
  EXPECT_FALSE(genus_formula_check(c, 2));
  EXPECT_TRUE(check_mult_constraint(c));
  EXPECT_EQ(bmy_budget(c), Rational(2 + 3 - 2) - Rational(5, 6));
  EXPECT_TRUE(check_bmy_constraint(c));
}

// x = t^2, y = t^5: rational, so the finite point and infinity carry all of
// (q-1)(q-2) = 12.
TEST(GlobalModel, GenusFormulaWithSingularInfinity) {
  const CurveProfile c = CurveProfile::make(0, 2, 5, {SingularPointModel{2, 1, 3, 4}});
  EXPECT_TRUE(genus_formula_check(c, 8));
  EXPECT_FALSE(genus_formula_check(c, 6));
  const CurveProfile no_delta = CurveProfile::make(0, 2, 5, {SingularPointModel{2, 1, 3, std::nullopt}});
  EXPECT_THROW(genus_formula_check(no_delta, 8), PreconditionError);
}

TEST(GlobalModel, InfinityTermUsesGcd) {
  CurveProfile c = CurveProfile::make(1, 4, 6, {}, 3);
  EXPECT_EQ(c.p_prime, 2);
  EXPECT_EQ(double_points_D(c), 3 * 5 - 2 + 1 - 2);
  EXPECT_EQ(energy_E(c), Rational(6));
  c.mu_prime_inf = 7;
  EXPECT_THROW(c.validate(), PreconditionError);
  c.mu_prime_inf = 6;
  EXPECT_NO_THROW(c.validate());
}

TEST(GlobalModel, Validation) {
  EXPECT_THROW(double_points_D(CurveProfile::make(0, 3, 3)), PreconditionError);
  EXPECT_THROW(double_points_D(CurveProfile::make(0, 2, 4)), PreconditionError);
  EXPECT_THROW(double_points_D(CurveProfile::make(-1, 2, 3)), PreconditionError);
  EXPECT_THROW(double_points_D(CurveProfile::make(0, 2, 3, {}, -1)), PreconditionError);
  CurveProfile c = CurveProfile::make(0, 2, 3);
  c.p_prime = 2;
  EXPECT_THROW(c.validate(), PreconditionError);
  EXPECT_THROW(energy_E(CurveProfile::make(0, 2, 3, {SingularPointModel{1, 1, 0, {}}})), PreconditionError);
}

TEST(GlobalModel, MultiplicityConstraint) {
  // sum (m - r) <= p + 2g - 1.
  const SingularPointModel m4{4, 1, 5, {}};
  EXPECT_FALSE(check_mult_constraint(CurveProfile::make(0, 3, 4, {m4})));
  EXPECT_TRUE(check_mult_constraint(CurveProfile::make(0, 4, 5, {m4})));
  EXPECT_TRUE(check_mult_constraint(CurveProfile::make(1, 2, 3, {m4})));
}

TEST(GlobalModel, BudgetExcessPerClass) {
  const SingularPointModel c3{3, 1, 2, {}}, node{2, 2, 0, {}};
  const CurveProfile c = CurveProfile::make(2, 5, 7, {kCusp, c3, node});
  EXPECT_EQ(c.R(), 1);
  EXPECT_EQ(bmy_budget(c), Rational(5 + 7 - 2 + 8 + 1) - Rational(5, 6) - Rational(1, 2));
  EXPECT_EQ(bmy_budget(c, false), bmy_budget(c) - Rational(1));
}

// Random profiles against the defining sums, plus the structural facts that
// the budget grows by 4 per unit of genus and by R when R is included.
TEST(GlobalModel, RandomProfilesAgreeWithDefinitions) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> small(0, 4), pick(2, 30);
  for (int n = 0; n < 3000; ++n) {
    const std::int64_t p = pick(rng);
    std::int64_t q = p + 1 + small(rng);
    if (q % p == 0) ++q;
    const std::int64_t g = small(rng);
    std::vector<SingularPointModel> pts;
    const std::int64_t npts = small(rng);
    for (std::int64_t i = 0; i < npts; ++i) {
      const std::int64_t r = 1 + small(rng) % 3;
      const std::int64_t m = std::max<std::int64_t>(2, r) + small(rng);
      const std::int64_t ext = (r >= 2 ? r - 2 : 0) + small(rng);
      pts.push_back({m, r, ext, {}});
    }
    const std::int64_t nu_inf = small(rng);
    const CurveProfile c = CurveProfile::make(g, p, q, pts, nu_inf);
    const std::int64_t pp = std::gcd(p, q);
    std::int64_t e = pp * nu_inf, sum_r = 0, sum_ext = nu_inf;
    Rational eta(0);
    for (const auto& pt : pts) {
      e += pt.m * (pt.ext_nu - pt.m + pt.r + 1);
      sum_r += pt.r - 1;
      sum_ext += pt.ext_nu;
      eta += pt.r >= 2 ? Rational(0) : pt.m == 2 ? Rational(5, 6) : Rational(1, 2);
    }
    const std::int64_t D = (p - 1) * (q - 1) - pp + 1 - 2 * g;
    EXPECT_EQ(double_points_D(c), D);
    EXPECT_EQ(energy_E(c), Rational(e));
    EXPECT_EQ(delta_gap(c), Rational(D - e));
    const Rational budget = Rational(p + q - 2 + 4 * g + sum_r) - eta;
    EXPECT_EQ(bmy_budget(c), budget);
    EXPECT_EQ(check_bmy_constraint(c), Rational(sum_ext) <= budget);
    EXPECT_EQ(bmy_budget(c) - bmy_budget(c, false), Rational(c.R()));
    CurveProfile up = c;
    up.g += 1;
    EXPECT_EQ(bmy_budget(up) - bmy_budget(c), Rational(4));
  }
}

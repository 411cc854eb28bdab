#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zl/bounds.hpp"
#include "zl/polynomial.hpp"
#include "zl/rational.hpp"
#include "zl/surd.hpp"

using namespace zl;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

}  // namespace

TEST(RatArith, SmallFractionSum) { EXPECT_EQ(rat_arith(q(1, 2), q(1, 3), ArithOp::kAdd).str(), "5/6"); }

TEST(RatArith, BoundAtGenusFour) {
  const Rational v = rat_arith(rat_arith(q(24, 11), q(4), ArithOp::kMul), q(20, 11), ArithOp::kAdd);
  EXPECT_EQ(v.str(), "116/11");
}

TEST(RatArith, SelfDifferenceIsCanonicalZero) { EXPECT_EQ(rat_arith(q(7, 4), q(7, 4), ArithOp::kSub).str(), "0/1"); }

TEST(RatArith, DivisionByZeroIsDistinct) {
  EXPECT_THROW(rat_arith(q(1), q(0), ArithOp::kDiv), DivisionByZero);
  EXPECT_THROW(Rational(3, 0), DivisionByZero);
}

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(q(6, -4).str(), "-3/2");
  EXPECT_EQ(q(0, 7).str(), "0/1");
  EXPECT_EQ(Rational::parse("10/4").str(), "5/2");
  EXPECT_EQ(Rational::parse("-7").str(), "-7/1");
  EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
}

TEST(Rational, LargeValuesStayExact) {
  Rational big = pow(q(10), 40) + q(1, 3);
  EXPECT_EQ((big - pow(q(10), 40)).str(), "1/3");
  EXPECT_EQ(q(-7, 2).floor(), -4);
  EXPECT_EQ(q(-7, 2).ceil(), -3);
}

TEST(SurdCmp, RootOfFourEqualsTwo) { EXPECT_EQ(surd_cmp(Surd(q(0), q(4)), Surd(q(2))), std::strong_ordering::equal); }

TEST(SurdCmp, GenusOneBoundaryEqualsSix) {
  EXPECT_EQ(surd_cmp(Surd(q(7, 4), q(289, 16)), Surd(q(6))), std::strong_ordering::equal);
}

TEST(SurdCmp, TwoIrrationalSurds) {
  const Surd a(q(2, 3), q(28, 9)), b(q(-1, 4), q(177, 16));
  EXPECT_EQ(surd_cmp(a, b), std::strong_ordering::less);
  EXPECT_EQ(oracle::float_sign(a, b), -1);
}

TEST(SurdCmp, RejectsNegativeRadicand) { EXPECT_THROW(Surd(q(1), q(-1)), std::invalid_argument); }

TEST(SurdFloor, IntegerInput) { EXPECT_EQ(surd_floor(Surd(q(6))), 6); }

TEST(SurdFloor, IrrationalValue) {
  // 13^2 = 169 < 177 < 196 = 14^2.
  EXPECT_EQ(surd_floor(Surd(q(-1, 4), q(177, 16))), 3);
}

TEST(SurdFloor, EnvelopeOfJAtZeroOne) {
  // Oracle: maximise the six formulas in floating point, then floor.
  mpf_class best(-1e9, oracle::kBits);
  for (BoundKind k : kJKinds) {
    const auto [L, S] = oracle::bound_formula(k, 0, 1);
    mpf_class v = oracle::value(Surd(L, S));
    if (v > best) best = v;
  }
  mpf_class fl(0, oracle::kBits);
  mpf_floor(fl.get_mpf_t(), best.get_mpf_t());
  EXPECT_EQ(fl.get_si(), 4);
  EXPECT_EQ(surd_floor(envelope({0, 1}, Family::J).value), 4);
}

TEST(SurdFloor, NegativeValues) {
  EXPECT_EQ(surd_floor(Surd(q(-3))), -3);
  EXPECT_EQ(surd_floor(Surd(q(-5, 2), q(1, 4))), -2);
  EXPECT_EQ(Surd(q(-5, 2), q(1, 4)).ceil(), -2);
  EXPECT_EQ(Surd(q(-5, 2), q(2)).ceil(), -1);
}

TEST(PolyIdentity, Identical) { EXPECT_TRUE(poly_identity_check(std::vector<Rational>{0, 1}, std::vector<Rational>{0, 1})); }

TEST(PolyIdentity, DifferAtOne) {
  EXPECT_FALSE(poly_identity_check(std::vector<Rational>{1, 0, 1}, std::vector<Rational>{1, 1, 1}));
}

TEST(PolyIdentity, TrailingZerosIgnored) {
  EXPECT_TRUE(poly_identity_check(std::vector<Rational>{2, 3, 0, 0}, std::vector<Rational>{2, 3}));
}

// (L_b - L_f)^2 - S_f against (6/847)(g^2 - (2239/3) g - c).  The constant
// printed with this display is 875/12; expanding gives 857/12.
TEST(PolyIdentity, CrossoverDisplay) {
  const BoundShape b = bound_shape(BoundKind::Ib, 0), f = bound_shape(BoundKind::If, 0);
  const Polynomial diff = b.linear - f.linear;
  const Polynomial lhs = diff * diff - f.radicand;
  auto rhs = [](const Rational& c) {
    return Polynomial{-c, q(-2239, 3), q(1)} * Polynomial{q(6, 847)};
  };
  EXPECT_FALSE(poly_identity_check(lhs, rhs(q(875, 12))));
  EXPECT_TRUE(poly_identity_check(lhs, rhs(q(857, 12))));

  // Oracle: expand by hand from the typed-in formulas.
  // L_b - L_f = (24/11 - 29/14) g + (20/11 - 31/28) = (17/154) g + 219/308.
  const Rational a = q(24, 11) - q(29, 14), c = q(20, 11) - q(31, 28);
  EXPECT_EQ(a, q(17, 154));
  EXPECT_EQ(c, q(219, 308));
  const Rational c2 = a * a - q(1, 196), c1 = Rational(2) * a * c - q(1067, 196), c0 = c * c - q(793, 784);
  EXPECT_EQ(c2, q(6, 847));
  EXPECT_EQ(c1 / c2, q(-2239, 3));
  EXPECT_EQ(c0 / c2, q(-857, 12));
}

TEST(PolyIdentity, MultivariateGrid) {
  const int deg[] = {2, 2};
  MultiFn f = [](std::span<const Rational> x) { return (x[0] + x[1]) * (x[0] + x[1]); };
  MultiFn g = [](std::span<const Rational> x) { return x[0] * x[0] + Rational(2) * x[0] * x[1] + x[1] * x[1]; };
  MultiFn h = [](std::span<const Rational> x) { return x[0] * x[0] + x[1] * x[1]; };
  EXPECT_TRUE(identity_on_grid(f, g, deg));
  EXPECT_FALSE(identity_on_grid(f, h, deg));
}

TEST(Polynomial, TailAndRoots) {
  // (g - 2)(g - 5) >= 0 from 5 on, not from 4.
  const Polynomial p{q(10), q(-7), q(1)};
  EXPECT_TRUE(nonnegative_tail(p, q(5)));
  EXPECT_FALSE(nonnegative_tail(p, q(4)));
  EXPECT_TRUE(nonnegative_tail(Polynomial{q(1), q(0), q(1)}, q(-100)));
  EXPECT_FALSE(nonnegative_tail(Polynomial{q(1), q(0), q(0), q(1)}, q(0)));
  const auto r = larger_root(p);
  ASSERT_TRUE(r);
  EXPECT_EQ(surd_cmp(*r, Surd(q(5))), std::strong_ordering::equal);
  EXPECT_FALSE(larger_root(Polynomial{q(1), q(0), q(1)}));
}

// Properties.

TEST(SurdProperties, RationalOrderingAgrees) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Rational a = oracle::random_rational(rng, 50, 12), b = oracle::random_rational(rng, 50, 12);
    EXPECT_EQ(surd_cmp(Surd(a), Surd(b)), a <=> b) << a << " " << b;
  }
}

TEST(SurdProperties, FloorBracketsValue) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Rational L = oracle::random_rational(rng, 200, 16);
    Rational S = oracle::random_rational(rng, 400, 16).abs();
    if (i % 5 == 0) S = S * S;  // rational roots
    const Surd x(L, S);
    const BigInt k = surd_floor(x);
    EXPECT_NE(surd_cmp(Surd(Rational(k)), x), std::strong_ordering::greater) << x.str();
    EXPECT_EQ(surd_cmp(Surd(Rational(BigInt(k + 1))), x), std::strong_ordering::greater) << x.str();
    // The integer characterisation: k - L <= sqrt S iff k <= L or (k - L)^2 <= S.
    const Rational d = Rational(k) - L, d1 = Rational(BigInt(k + 1)) - L;
    EXPECT_TRUE(d.sign() <= 0 || d * d <= S);
    EXPECT_TRUE(d1.sign() > 0 && d1 * d1 > S);
  }
}

TEST(SurdProperties, TotalOrderOnRandomTriples) {
  std::mt19937_64 rng(13);
  auto draw = [&] {
    Rational S = oracle::random_rational(rng, 60, 9).abs();
    if (rng() % 3 == 0) S = S * S;
    return Surd(oracle::random_rational(rng, 20, 9), S);
  };
  for (int i = 0; i < 3000; ++i) {
    const Surd a = draw(), b = draw(), c = draw();
    const auto ab = surd_cmp(a, b), ba = surd_cmp(b, a);
    EXPECT_EQ(ab < 0, ba > 0);
    EXPECT_EQ(ab == 0, ba == 0);
    if (ab <= 0 && surd_cmp(b, c) <= 0) EXPECT_TRUE(surd_cmp(a, c) <= 0);
    if (ab >= 0 && surd_cmp(b, c) >= 0) EXPECT_TRUE(surd_cmp(a, c) >= 0);
  }
}

// surd_cmp(L + sqrt S, M) = Greater iff (L >= M and S > 0) or L > M or
// (L <= M and S > (M - L)^2), checked against both the formula and a
// 1024-bit floating point evaluation.
TEST(SurdProperties, SquaringSoundness) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const Rational L = oracle::random_rational(rng, 40, 8), M = oracle::random_rational(rng, 40, 8);
    Rational S = oracle::random_rational(rng, 80, 8).abs();
    if (i % 4 == 0) S = (M - L) * (M - L);
    if (i % 7 == 0) S = 0;
    const Surd x(L, S), m(M);
    const bool formula = (L >= M && S.sign() > 0) || L > M || (L <= M && S > (M - L) * (M - L));
    EXPECT_EQ(surd_cmp(x, m) > 0, formula) << x.str() << " vs " << M;
    EXPECT_EQ(surd_cmp(x, m) > 0, oracle::float_sign(x, m) > 0) << x.str() << " vs " << M;
  }
}

TEST(SurdProperties, PairwiseAgainstFloatOracle) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 1000; ++i) {
    const Surd a(oracle::random_rational(rng, 30, 7), oracle::random_rational(rng, 90, 7).abs());
    const Surd b(oracle::random_rational(rng, 30, 7), oracle::random_rational(rng, 90, 7).abs());
    const int expect = oracle::float_sign(a, b);
    const auto got = surd_cmp(a, b);
    EXPECT_EQ(got < 0 ? -1 : got > 0 ? 1 : 0, expect) << a.str() << " vs " << b.str();
  }
}

TEST(Surd, DecimalIsDisplayOnly) {
  EXPECT_EQ(Surd(q(-1, 4), q(177, 16)).decimal(3), "3.076");
  EXPECT_EQ(Surd(q(1, 3)).decimal(4), "0.3333");
  EXPECT_EQ(Surd(q(7, 4), q(289, 16)).str(), "7/4 + sqrt(289/16)");
}

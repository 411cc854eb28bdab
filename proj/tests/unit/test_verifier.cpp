#include <gtest/gtest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "zl/errors.hpp"
#include "zl/verifier.hpp"

using namespace zl;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

const std::vector<BoundKind> kI{BoundKind::Ia, BoundKind::Ib, BoundKind::Ic,
                                BoundKind::Id, BoundKind::Ie, BoundKind::If};
const std::vector<BoundKind> kJ{BoundKind::Ja, BoundKind::Jb, BoundKind::Jc,
                                BoundKind::Jd, BoundKind::Je, BoundKind::Jf};

Surd typed(BoundKind k, std::int64_t g, std::int64_t R) {
  const auto [L, S] = oracle::bound_formula(k, g, R);
  return Surd(L, S);
}

// b is >= every other member at (g, R), judged in floating point.
bool dominates(const std::vector<BoundKind>& fam, BoundKind b, std::int64_t g, std::int64_t R) {
  const Surd vb = typed(b, g, R);
  for (BoundKind k : fam)
    if (oracle::float_sign(vb, typed(k, g, R)) < 0) return false;
  return true;
}

mpf_class family_max(const std::vector<BoundKind>& fam, std::int64_t g, std::int64_t R) {
  mpf_class best(0, oracle::kBits);
  bool first = true;
  for (BoundKind k : fam) {
    const mpf_class v = oracle::value(typed(k, g, R));
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

}  // namespace

TEST(CrossoverI, OnsetAndRoots) {
  const CrossoverIReport rep = find_crossover_I(2000);
  EXPECT_EQ(rep.onset, 747);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.previous_dominated_by_f);
  EXPECT_TRUE(rep.onset_dominated_by_b);
  EXPECT_EQ(rep.tails.size(), 5u);
  // The printed quadratic has the wrong constant; both roots still lie in
  // (746, 747).
  EXPECT_FALSE(rep.printed_identity);
  EXPECT_TRUE(rep.corrected_identity);
  EXPECT_EQ(rep.printed_root.lo, 746);
  EXPECT_EQ(rep.printed_root.hi, 747);
  EXPECT_TRUE(rep.printed_root.inside);
  EXPECT_TRUE(rep.corrected_root.inside);
  EXPECT_EQ(surd_cmp(rep.printed_root.root, Surd(q(2239, 6), q(5015746, 36))), std::strong_ordering::equal);
}

TEST(CrossoverI, OnsetAgreesWithFloatScan) {
  std::int64_t onset = -1;
  for (std::int64_t g = 2000; g >= 0 && dominates(kI, BoundKind::Ib, g, 0); --g) onset = g;
  EXPECT_EQ(onset, 747);
  EXPECT_GT(oracle::value(typed(BoundKind::If, 746, 0)), oracle::value(typed(BoundKind::Ib, 746, 0)));
}

TEST(CrossoverJ, ClaimedOnsetHolds) {
  for (std::int64_t R : {1, 2, 17, 100, 200, 250, 251, 300}) {
    const CrossoverJReport rep = find_crossover_J(R, 50);
    EXPECT_TRUE(rep.ok()) << "R=" << R;
    EXPECT_EQ(rep.claimed, std::max<std::int64_t>(0, 752 - 3 * R));
    EXPECT_EQ(rep.scanned_to, rep.claimed + 50);
    // Float scan over the claimed range.
    for (std::int64_t g = rep.claimed; g <= rep.scanned_to; g += 7)
      EXPECT_TRUE(dominates(kJ, BoundKind::Jb, g, R)) << "R=" << R << " g=" << g;
    if (rep.onset > 0) EXPECT_FALSE(dominates(kJ, BoundKind::Jb, rep.onset - 1, R)) << "R=" << R;
  }
  EXPECT_EQ(find_crossover_J(250, 50).onset, 0);
  EXPECT_THROW(find_crossover_J(0, 50), PreconditionError);
}

TEST(ZlFinite, SmallSums) {
  using P = std::vector<std::pair<std::int64_t, std::int64_t>>;
  EXPECT_EQ(check_zl_finite(3), (P{{0, 1}}));
  EXPECT_EQ(check_zl_finite(6), (P{{0, 1}, {0, 2}}));
  EXPECT_EQ(check_zl_finite(60), (P{{0, 1}, {0, 2}}));
  EXPECT_THROW(check_zl_finite(2), PreconditionError);
  // Float oracle over the same range.
  P expected;
  for (std::int64_t g = 0; g + 3 <= 60; ++g)
    for (std::int64_t R = 1; g + 3 * R <= 60; ++R) {
      const mpf_class j = family_max(kJ, g, R);
      if (floor(j) > mpf_class(4 * g + 2 * R + 1)) expected.emplace_back(g, R);
    }
  EXPECT_EQ(expected, (P{{0, 1}, {0, 2}}));
}

TEST(Cuspidal, Corollary) {
  const CuspidalReport rep = check_cuspidal_corollary(2, 2000);
  EXPECT_TRUE(rep.failures.empty());
  EXPECT_EQ(rep.refined_g1, 5);
  EXPECT_TRUE(rep.ok());
  // Float oracle: the largest N failing some bound stays below 4g + 2.
  for (std::int64_t g = 2; g <= 300; ++g) {
    const mpf_class top = family_max(kI, g, 0);
    EXPECT_LT(top, mpf_class(4 * g + 2)) << g;
  }
}

TEST(Envelopes, Validity) {
  const EnvelopeReport rep = check_envelopes(746);
  ASSERT_EQ(rep.envelopes.size(), 3u);
  EXPECT_TRUE(rep.ok());
  const auto& e3 = rep.envelopes[0];
  EXPECT_EQ(e3.envelope.label, "3g+3/2");
  EXPECT_EQ(e3.invalid, (std::vector<std::int64_t>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(e3.onset, 6);
  EXPECT_TRUE(rep.envelopes[1].invalid.empty());
  EXPECT_EQ(rep.envelopes[1].onset, 0);
  EXPECT_TRUE(rep.envelopes[2].invalid.empty());
  EXPECT_EQ(rep.envelopes[2].onset, 0);
  for (const auto& v : rep.envelopes)
    for (std::int64_t g : v.invalid) {
      mpf_class lin(0, oracle::kBits);
      lin = oracle::to_mpf(v.envelope.slope * Rational(g) + v.envelope.intercept);
      EXPECT_LT(lin, family_max(kI, g, 0)) << v.envelope.label << " g=" << g;
    }
  for (std::int64_t g = 0; g <= 746; g += 5)
    for (const auto& v : rep.envelopes) {
      if (std::find(v.invalid.begin(), v.invalid.end(), g) != v.invalid.end()) continue;
      mpf_class lin(0, oracle::kBits);
      lin = oracle::to_mpf(v.envelope.slope * Rational(g) + v.envelope.intercept);
      EXPECT_GE(lin, family_max(kI, g, 0)) << v.envelope.label << " g=" << g;
    }
}

TEST(Exchange, PositiveOnIncreasingTriples) {
  const ExchangeReport rep = check_exchange(30);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.checked, std::size_t{29 * 28 * 27 / 6});
  EXPECT_EQ(rep.minimum, 2);
  EXPECT_THROW(check_exchange(3), PreconditionError);
}

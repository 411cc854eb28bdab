#include "zl/verifier.hpp"

#include <algorithm>

#include "zl/errors.hpp"
#include "zl/local_invariants.hpp"
#include "zl/polynomial.hpp"

namespace zl {

namespace {

bool equals_member(const GenusProfile& prof, Family family, BoundKind member) {
  return surd_cmp(eval_bound(member, prof), envelope(prof, family).value) == std::strong_ordering::equal;
}

RootBracket bracket(const Polynomial& poly) {
  RootBracket b;
  b.root = *larger_root(poly);
  b.lo = b.root.floor().get_si();
  b.hi = b.lo + 1;
  b.inside = surd_cmp(Surd(Rational(b.lo)), b.root) < 0 && surd_cmp(b.root, Surd(Rational(b.hi))) < 0;
  return b;
}

Polynomial tail_quadratic(const Rational& c) {
  // (6/847)(g^2 - (2239/3) g - c)
  return Polynomial({-c, Rational(-2239, 3), Rational(1)}) * Polynomial(Rational(6, 847));
}

}  // namespace

bool CrossoverIReport::ok() const {
  return onset >= 0 && previous_dominated_by_f && onset_dominated_by_b && printed_root.inside &&
         corrected_root.inside && corrected_identity &&
         std::all_of(tails.begin(), tails.end(), [](const TailCertificate& t) { return t.ok(); });
}

CrossoverIReport find_crossover_I(std::int64_t scan_to) {
  if (scan_to < 1) throw PreconditionError("scan_to >= 1", "got " + std::to_string(scan_to));
  CrossoverIReport rep;
  rep.scanned_to = scan_to;
  std::int64_t g = scan_to;
  if (equals_member({g, 0}, Family::I, BoundKind::Ib)) {
    while (g > 0 && equals_member({g - 1, 0}, Family::I, BoundKind::Ib)) --g;
    rep.onset = g;
  }
  if (rep.onset < 0) return rep;

  if (rep.onset > 0) {
    const GenusProfile prev{rep.onset - 1, 0};
    rep.previous_dominated_by_f = surd_cmp(eval_bound(BoundKind::If, prev), eval_bound(BoundKind::Ib, prev)) > 0;
  }
  const GenusProfile at{rep.onset, 0};
  const Surd ib = eval_bound(BoundKind::Ib, at);
  rep.onset_dominated_by_b = std::all_of(kIKinds.begin(), kIKinds.end(), [&](BoundKind k) {
    return surd_cmp(ib, eval_bound(k, at)) >= 0;
  });

  const BoundShape b = bound_shape(BoundKind::Ib, 0);
  const Rational from(rep.onset);
  for (BoundKind k : kIKinds) {
    if (k == BoundKind::Ib) continue;
    const BoundShape x = bound_shape(k, 0);
    const Polynomial lin = b.linear - x.linear;
    TailCertificate t{k};
    t.linear_part = nonnegative_tail(lin, from);
    t.squared_part = x.radicand.degree() < 0 || nonnegative_tail(lin * lin - x.radicand, from);
    rep.tails.push_back(t);
  }

  const BoundShape f = bound_shape(BoundKind::If, 0);
  const Polynomial gap = b.linear - f.linear;
  const Polynomial lhs = gap * gap - f.radicand;
  rep.printed_identity = poly_identity_check(lhs, tail_quadratic(Rational(875, 12)));
  rep.corrected_identity = poly_identity_check(lhs, tail_quadratic(Rational(857, 12)));
  rep.printed_root = bracket(tail_quadratic(Rational(875, 12)));
  rep.corrected_root = bracket(tail_quadratic(Rational(857, 12)));
  return rep;
}

CrossoverJReport find_crossover_J(std::int64_t R, std::int64_t margin) {
  if (R < 1) throw PreconditionError("R >= 1", "got R = " + std::to_string(R));
  if (margin < 0) throw PreconditionError("margin >= 0", "got " + std::to_string(margin));
  CrossoverJReport rep;
  rep.R = R;
  rep.claimed = std::max<std::int64_t>(0, 752 - 3 * R);
  rep.scanned_to = rep.claimed + margin;
  std::int64_t g = rep.scanned_to;
  if (equals_member({g, R}, Family::J, BoundKind::Jb)) {
    while (g > 0 && equals_member({g - 1, R}, Family::J, BoundKind::Jb)) --g;
    rep.onset = g;
  }

  const BoundShape b = bound_shape(BoundKind::Jb, R);
  const BoundShape f = bound_shape(BoundKind::Jf, R);
  const Polynomial gap = b.linear - f.linear;
  const Polynomial shifted({Rational(3 * R - 376), Rational(1)});
  const Polynomial rhs =
      (shifted * shifted + Polynomial(Rational(1936 * R) - Rational(565917, 4))) * Polynomial(Rational(6, 847));
  rep.identity = poly_identity_check(gap * gap - f.radicand, rhs);
  return rep;
}

std::vector<std::pair<std::int64_t, std::int64_t>> check_zl_finite(std::int64_t max_sum) {
  if (max_sum < 3) throw PreconditionError("max_sum >= 3", "got " + std::to_string(max_sum));
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t g = 0; g + 3 <= max_sum; ++g) {
    for (std::int64_t R = 1; g + 3 * R <= max_sum; ++R) {
      const GenusProfile prof{g, R};
      if (envelope(prof, Family::J).value.floor() > zl_bound(prof)) out.emplace_back(g, R);
    }
  }
  return out;
}

CuspidalReport check_cuspidal_corollary(std::int64_t g_from, std::int64_t g_to) {
  CuspidalReport rep;
  rep.g_from = g_from;
  rep.g_to = g_to;
  for (std::int64_t g = g_from; g <= g_to; ++g)
    if (max_allowed_N({g, 0}, Family::I) > 4 * g + 1) rep.failures.push_back(g);
  rep.refined_g1 = refined_max_N({1, 0}, Family::I);
  return rep;
}

const std::vector<LinearEnvelope>& linear_envelopes() {
  static const std::vector<LinearEnvelope> kEnvelopes{
      {"3g+3/2", Rational(3), Rational(3, 2)},
      {"2.4g+6", Rational(12, 5), Rational(6)},
      {"2.2g+20", Rational(11, 5), Rational(20)},
  };
  return kEnvelopes;
}

EnvelopeReport check_envelopes(std::int64_t g_max) {
  if (g_max < 0) throw PreconditionError("g_max >= 0", "got " + std::to_string(g_max));
  EnvelopeReport rep;
  rep.g_max = g_max;
  for (const auto& e : linear_envelopes()) rep.envelopes.push_back({e, {}, {}, -1});

  for (std::int64_t g = 0; g <= g_max; ++g) {
    const Surd I = envelope({g, 0}, Family::I).value;
    bool any = false;
    for (auto& v : rep.envelopes) {
      const Surd value(v.envelope.slope * Rational(g) + v.envelope.intercept);
      if (surd_cmp(value, I) >= 0) {
        any = true;
        if (!v.valid_runs.empty() && v.valid_runs.back().second == g - 1) {
          v.valid_runs.back().second = g;
        } else {
          v.valid_runs.emplace_back(g, g);
        }
      } else {
        v.invalid.push_back(g);
      }
    }
    if (!any) rep.max_failures.push_back(g);
  }
  for (auto& v : rep.envelopes)
    if (!v.valid_runs.empty() && v.valid_runs.back().second == g_max) v.onset = v.valid_runs.back().first;
  return rep;
}

ExchangeReport check_exchange(std::int64_t limit) {
  if (limit < 4) throw PreconditionError("limit >= 4", "got " + std::to_string(limit));
  ExchangeReport rep;
  rep.limit = limit;
  bool first = true;
  for (std::int64_t x = 2; x <= limit; ++x)
    for (std::int64_t y = x + 1; y <= limit; ++y)
      for (std::int64_t z = y + 1; z <= limit; ++z) {
        const std::int64_t v = exchange_form(x, y, z);
        ++rep.checked;
        if (first || v < rep.minimum) rep.minimum = v;
        first = false;
        if (v <= 0 && !rep.counterexample) rep.counterexample = std::make_tuple(x, y, z);
      }
  return rep;
}

}  // namespace zl

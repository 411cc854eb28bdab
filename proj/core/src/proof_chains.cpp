#include "zl/proof_chains.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "chain_formulas.hpp"
#include "zl/errors.hpp"

namespace zl {

using chain::Q;

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

void require(bool ok, const char* constraint, const std::string& detail) {
  if (!ok) throw PreconditionError(constraint, detail);
}

class TraceBuilder {
 public:
  TraceBuilder(ChainTheorem t, ChainCase c) {
    trace_.theorem = t;
    trace_.chain_case = c;
  }
  std::size_t define(std::string label, Q value) {
    return push(std::move(label), std::move(value), std::nullopt, StepRelation::Define, true);
  }
  std::size_t bound(std::string label, Q value, std::size_t parent, StepRelation rel, bool hyp) {
    return push(std::move(label), std::move(value), parent, rel, hyp);
  }
  [[nodiscard]] const Q& at(std::size_t i) const { return trace_.steps[i].value; }
  ChainTrace finish(bool verdict, std::optional<bool> floor_verdict = std::nullopt) {
    trace_.verdict = verdict;
    trace_.floor_verdict = floor_verdict;
    return std::move(trace_);
  }

 private:
  std::size_t push(std::string label, Q value, std::optional<std::size_t> parent, StepRelation rel, bool hyp) {
    trace_.steps.push_back(ChainStep{std::move(label), std::move(value), parent, rel, hyp});
    return trace_.steps.size() - 1;
  }
  ChainTrace trace_;
};

struct Tsums {
  std::int64_t T0 = 0, T1 = 0, T2 = 0, max_j = 0;
};

Tsums t_sums(const std::map<std::int64_t, std::int64_t>& k) {
  Tsums t;
  for (const auto& [j, kj] : k) {
    require(j >= 2, "j >= 2", "ordinary j-tuple points need j >= 2, got j = " + str(j));
    require(kj >= 0, "k_j >= 0", "k_" + str(j) + " = " + str(kj));
    t.T0 += kj;
    t.T1 += kj * j;
    t.T2 += kj * j * j;
    if (kj > 0) t.max_j = std::max(t.max_j, j);
  }
  return t;
}

void require_common(const ChainParams& c) {
  require(c.g >= 0, "g >= 0", "got g = " + str(c.g));
  require(c.N >= 1, "N >= 1", "got N = " + str(c.N));
}

// Convex f on the integers is nondecreasing on [x0, inf) iff f(x0 + 1) >= f(x0).
template <class F>
bool nondecreasing_from(const F& f, const Q& x0) {
  return f(x0 + 1) >= f(x0);
}

}  // namespace

bool operator==(const ChainStep& a, const ChainStep& b) {
  return a.label == b.label && a.value == b.value && a.parent == b.parent && a.relation == b.relation &&
         a.hypothesis_holds == b.hypothesis_holds;
}

const ChainStep* ChainTrace::find(std::string_view label) const {
  for (const auto& s : steps)
    if (s.label == label) return &s;
  return nullptr;
}

const Rational& ChainTrace::value(std::string_view label) const {
  if (const ChainStep* s = find(label)) return s->value;
  throw std::out_of_range("no step labelled " + std::string(label));
}

ChainTrace thm1_finite_chain(const ChainParams& c) {
  require_common(c);
  require(c.R == 0, "R = 0", "cuspidal chains have no extra branches, got R = " + str(c.R));
  require(c.k.empty() && c.A.value_or(1) == 1 && c.B.value_or(1) == 1, "r_i = 1", "cuspidal chains take no tuple points");
  const std::int64_t s = c.s.value_or(0);
  require(s >= 0, "s >= 0", "got s = " + str(s));
  const std::int64_t r = c.r.value_or(c.N - 1 - s);
  require(r >= 0 && r + s + 1 == c.N, "N = r + s + 1", "r = " + str(r) + ", s = " + str(s) + ", N = " + str(c.N));
  const std::int64_t p = c.p.value_or(std::max<std::int64_t>(2, c.N + 1 - 2 * c.g));
  const std::int64_t q = c.q.value_or(p + 1);
  require(p >= 2 && p < q, "2 <= p < q", "p = " + str(p) + ", q = " + str(q));
  require(q % p != 0, "p does not divide q", str(p) + " | " + str(q));
  const std::int64_t pp = std::gcd(p, q);
  require(c.p_prime.value_or(pp) == pp, "p' = gcd(p, q)", "got p' = " + str(*c.p_prime));

  const Q g(c.g), N(c.N), P(p), Qv(q), rr(r), ss(s);
  const Q m1_max = chain::t1_m1_max(g, P, rr, ss);
  const Q m1(c.m1.value_or(static_cast<std::int64_t>(m1_max.floor().get_si())));
  require(m1 >= (s > 0 ? 3 : 2), "m_1 >= m_2", "m_1 = " + m1.str());
  require(m1 <= m1_max, "m_1 + r + 2s <= p + 2g", "m_1 = " + m1.str() + " exceeds " + m1_max.str());

  TraceBuilder t(ChainTheorem::One, ChainCase::Finite);
  const auto iD = t.define("D", chain::D(g, P, Qv, Q(pp)));
  const Q ext = chain::t1_ext_nu1(g, P, Qv, rr, ss);
  t.define("ext_nu1", ext);
  const auto iE = t.define("E", chain::t1_E(g, P, Qv, rr, ss, m1));
  const auto iDelta = t.define("Delta", t.at(iD) - t.at(iE));
  const bool h1 = ext + 2 >= 2 * m1_max - 1;
  const auto iE1 = t.bound("E1", chain::t1_E1(g, P, Qv, rr, ss), iE, StepRelation::UpperBound, h1);
  const bool h2 = q >= p + 1 && m1_max >= 2;
  t.bound("E2", chain::t1_E2(g, N, P, Qv), iE1, StepRelation::UpperBound, h2);
  const auto i2 = t.bound("Delta2", t.at(iD) - chain::t1_E2(g, N, P, Qv), iDelta, StepRelation::LowerBound, h1 && h2);
  const auto i3 = t.bound("Delta3", chain::t1_D3(g, N, P, Qv), i2, StepRelation::LowerBound, pp <= q - p);
  const auto i4 = t.bound("Delta4", chain::t1_D4(g, N, P), i3, StepRelation::LowerBound,
                          c.N - 2 * c.g - 3 >= 0 && q >= p + 1);
  const auto i5 = t.bound("Delta5", chain::t1_D5(g, N), i4, StepRelation::LowerBound,
                          chain::t1_D4_slope(g, N).sign() >= 0 && p >= c.N + 1 - 2 * c.g);
  return t.finish(t.at(i5).sign() > 0);
}

ChainTrace thm1_infinity_chain(const ChainParams& c) {
  require_common(c);
  require(c.R == 0, "R = 0", "cuspidal chains have no extra branches, got R = " + str(c.R));
  require(c.k.empty() && c.A.value_or(1) == 1 && c.B.value_or(1) == 1, "r_i = 1", "cuspidal chains take no tuple points");
  const std::int64_t s = c.s.value_or(0);
  require(s >= 0, "s >= 0", "got s = " + str(s));
  const std::int64_t r = c.r.value_or(c.N - s);
  require(r >= 0 && r + s == c.N, "N = r + s", "r = " + str(r) + ", s = " + str(s) + ", N = " + str(c.N));
  const std::int64_t pp = c.p_prime.value_or(3);
  require(pp >= 3, "p' >= 3", "got p' = " + str(pp));
  const std::int64_t p = c.p.value_or(std::max<std::int64_t>(6, c.N - 2 * c.g + 1));
  require(p >= 6, "p >= 6", "got p = " + str(p));
  require(2 * pp <= p, "p' <= p/2", "p' = " + str(pp) + ", p = " + str(p));
  const std::int64_t q = c.q.value_or(p + pp);
  require(q > p, "p < q", "p = " + str(p) + ", q = " + str(q));

  const Q g(c.g), N(c.N), P(p), Qv(q), PP(pp), ss(s);
  const Q p0 = N - 2 * g + 1;
  TraceBuilder t(ChainTheorem::One, ChainCase::Infinity);
  const auto iD = t.define("D", chain::D(g, P, Qv, PP));
  const auto iE = t.define("E", chain::t1i_E(g, N, P, Qv, PP, ss));
  const auto iDelta = t.define("Delta", t.at(iD) - t.at(iE));
  t.bound("E6", chain::t1i_E6(g, N, P, Qv, PP), iE, StepRelation::UpperBound, true);
  const auto i6 = t.bound("Delta6", chain::t1i_D6(g, N, P, Qv, PP), iDelta, StepRelation::LowerBound, true);
  const auto i7 = t.bound("Delta7", chain::t1i_D7(g, N, P, PP), i6, StepRelation::LowerBound, q >= p + pp);
  const auto i73 = t.bound("Delta7(3)", chain::t1i_D7(g, N, P, Q(3)), i7, StepRelation::EndpointMin, true);
  const auto d73 = [&](const Q& x) { return chain::t1i_D7(g, N, x, Q(3)); };
  const auto i8 = t.bound("Delta8", chain::t1i_D8(g, N), i73, StepRelation::LowerBound,
                          P >= p0 && nondecreasing_from(d73, p0));
  const auto i9 = t.bound("Delta9", chain::t1i_D9(g, N, P), i7, StepRelation::EndpointMin, true);
  const auto d9 = [&](const Q& x) { return chain::t1i_D9(g, N, x); };
  const auto i10 = t.bound("Delta10", chain::t1i_D10(g, N), i9, StepRelation::LowerBound,
                           P >= p0 && nondecreasing_from(d9, p0));
  const bool verdict = t.at(i8).sign() > 0 && t.at(i10).sign() > 0;
  const bool floor_verdict = t.at(i73).sign() > 0 && t.at(i9).sign() > 0;
  return t.finish(verdict, floor_verdict);
}

ChainTrace thm2_finite_chain(const ChainParams& c) {
  require_common(c);
  require(c.R >= 1, "R >= 1", "got R = " + str(c.R));
  const std::int64_t A = c.A.value_or(2);
  const std::int64_t B = c.B.value_or(A);
  require(A >= 2, "A >= 2", "got A = " + str(A));
  require(B >= 1 && B <= A, "1 <= B <= A", "B = " + str(B) + ", A = " + str(A));
  std::map<std::int64_t, std::int64_t> k = c.k;
  if (k.empty() && c.R - B + 1 > 0) k[2] = c.R - B + 1;
  const Tsums T = t_sums(k);
  require(std::max(B, T.max_j) == A, "A = max r_i", "A = " + str(A) + ", largest branch count " + str(std::max(B, T.max_j)));
  require(T.T1 - T.T0 + B - 1 == c.R, "T1 - T0 + B - 1 = R", "T1 = " + str(T.T1) + ", T0 = " + str(T.T0));
  const std::int64_t s = c.s.value_or(0);
  require(s >= 0, "s >= 0", "got s = " + str(s));
  const std::int64_t r = c.r.value_or(c.N - 1 - s - T.T0);
  require(r >= 0 && T.T0 + r + s + 1 == c.N, "T0 + r + s + 1 = N",
          "r = " + str(r) + ", s = " + str(s) + ", T0 = " + str(T.T0));
  const std::int64_t p = c.p.value_or(std::max<std::int64_t>(2, c.N - c.R - 2 * c.g + 1));
  const std::int64_t q = c.q.value_or(p + 1);
  require(p >= 2 && p < q, "2 <= p < q", "p = " + str(p) + ", q = " + str(q));
  require(q % p != 0, "p does not divide q", str(p) + " | " + str(q));
  const std::int64_t pp = std::gcd(p, q);
  require(c.p_prime.value_or(pp) == pp, "p' = gcd(p, q)", "got p' = " + str(*c.p_prime));

  const Q g(c.g), R(c.R), N(c.N), P(p), Qv(q), rr(r), ss(s), QA(A), QB(B);
  const Q T0(T.T0), T1(T.T1), T21(T.T2 - T.T1);
  const Q m1_max = chain::t2_m1_max(g, P, rr, ss, QB);
  const Q m1(c.m1.value_or(static_cast<std::int64_t>(m1_max.floor().get_si())));
  require(m1 >= std::max<std::int64_t>(B, 2), "m_1 >= max(B, 2)", "m_1 = " + m1.str());
  require(m1 <= m1_max, "m_1 - B + r + 2s <= p + 2g - 1", "m_1 = " + m1.str() + " exceeds " + m1_max.str());

  TraceBuilder t(ChainTheorem::Two, ChainCase::Finite);
  const auto iD = t.define("D", chain::D(g, P, Qv, Q(pp)));
  const Q ext = chain::t2_ext_nu1(g, R, P, Qv, rr, ss, T0, T1);
  t.define("ext_nu1", ext);
  const auto iE = t.define("E", chain::t2_E(ext, rr, ss, T21, m1, QB));
  const auto iDelta = t.define("Delta", t.at(iD) - t.at(iE));
  const Q r1 = rr + ss;
  const bool h1 = B == A && ext + QB + 1 >= 2 * m1_max - 1 && q >= p + 1;
  const auto iE1 = t.bound("E1", chain::t2_E1(g, N, P, Qv, r1, QA, T21), iE, StepRelation::UpperBound, h1);
  const auto iE2 = t.bound("E2", chain::t2_E2(g, R, N, P, Qv, r1, QA), iE1, StepRelation::UpperBound, true);
  const Q r_min = N + QA - R - 2;
  const bool h3 = r1 >= r_min && r1 <= P + 2 * g - 1 && N >= r1 + 1 && q >= p + 1;
  const auto iE3 = t.bound("E3", chain::t2_E3(g, R, N, P, Qv, QA), iE2, StepRelation::UpperBound, h3);
  const bool h4 = P + 2 * g + 1 + R - N >= 0;
  t.bound("E4", chain::t2_E4(g, R, N, P, Qv), iE3, StepRelation::UpperBound, h4);
  const auto i4 = t.bound("Delta4", chain::t2_D4(g, R, N, P, Qv), iDelta, StepRelation::LowerBound, h1 && h3 && h4);
  const auto i5 = t.bound("Delta5", chain::t2_D5(g, R, N, P), i4, StepRelation::LowerBound,
                          c.N - 2 * c.g - 3 - c.R >= 0 && q >= p + 1);
  const auto i6 = t.bound("Delta6", chain::t2_D6(g, R, N), i5, StepRelation::LowerBound,
                          chain::t2_D5_slope(g, R, N).sign() >= 0 && p >= c.N - c.R - 2 * c.g + 1);
  return t.finish(t.at(i6).sign() > 0);
}

ChainTrace thm2_infinity_chain(const ChainParams& c) {
  require_common(c);
  require(c.R >= 1, "R >= 1", "got R = " + str(c.R));
  const std::int64_t A = c.A.value_or(2);
  require(A >= 2, "A >= 2", "got A = " + str(A));
  std::map<std::int64_t, std::int64_t> k = c.k;
  if (k.empty()) k[2] = c.R;
  const Tsums T = t_sums(k);
  require(T.max_j == A, "A = max r_i", "A = " + str(A) + ", largest branch count " + str(T.max_j));
  require(T.T1 - T.T0 == c.R, "T1 - T0 = R", "T1 = " + str(T.T1) + ", T0 = " + str(T.T0));
  const std::int64_t s = c.s.value_or(0);
  require(s >= 0, "s >= 0", "got s = " + str(s));
  const std::int64_t r = c.r.value_or(c.N - s - T.T0);
  require(r >= 0 && r + s + T.T0 == c.N, "r + s + T0 = N", "r = " + str(r) + ", s = " + str(s) + ", T0 = " + str(T.T0));
  const std::int64_t pp = c.p_prime.value_or(3);
  require(pp >= 3, "p' >= 3", "got p' = " + str(pp));
  require(pp > A, "p' > A", "p' = " + str(pp) + ", A = " + str(A));
  const std::int64_t p = c.p.value_or(std::max<std::int64_t>(6, c.N - c.R - 2 * c.g + 1));
  require(p >= 6, "p >= 6", "got p = " + str(p));
  require(2 * pp <= p, "p' <= p/2", "p' = " + str(pp) + ", p = " + str(p));
  require(r + 2 * s <= p + 2 * c.g - 1, "r + 2s <= p + 2g - 1", "r = " + str(r) + ", s = " + str(s));
  const std::int64_t q = c.q.value_or(p + pp);
  require(q > p, "p < q", "p = " + str(p) + ", q = " + str(q));

  const Q g(c.g), R(c.R), N(c.N), P(p), Qv(q), PP(pp), rr(r), ss(s), QA(A);
  const Q T0(T.T0), T1(T.T1), T21(T.T2 - T.T1);
  const Q p0 = N - R - 2 * g + 1;
  TraceBuilder t(ChainTheorem::Two, ChainCase::Infinity);
  const auto iD = t.define("D", chain::D(g, P, Qv, PP));
  const Q nu = chain::t2i_nu_inf(g, R, P, Qv, rr, ss, T0, T1);
  t.define("nu'_inf", nu);
  const auto iE = t.define("E", chain::t2i_E(nu, PP, rr, ss, T21));
  const auto iDelta = t.define("Delta", t.at(iD) - t.at(iE));
  const Q r1 = rr + ss;
  const auto iE7 = t.bound("E7", chain::t2i_E7(g, N, P, Qv, PP, r1, T21), iE, StepRelation::UpperBound, true);
  const auto iE8 = t.bound("E8", chain::t2i_E8(g, R, N, P, Qv, PP, r1, QA), iE7, StepRelation::UpperBound, true);
  const bool h9 = r1 >= N - R;
  t.bound("E9", chain::t2i_E9(g, R, N, P, Qv, PP), iE8, StepRelation::UpperBound, h9);
  const auto i9 = t.bound("Delta9", chain::t2i_D9(g, R, N, P, Qv, PP), iDelta, StepRelation::LowerBound, h9);
  const auto i10 = t.bound("Delta10", chain::t2i_D10(g, R, N, P, PP), i9, StepRelation::LowerBound, q >= p + pp);
  const auto i103 = t.bound("Delta10(3)", chain::t2i_D10(g, R, N, P, Q(3)), i10, StepRelation::EndpointMin, true);
  const auto d103 = [&](const Q& x) { return chain::t2i_D10(g, R, N, x, Q(3)); };
  const auto i11 = t.bound("Delta11", chain::t2i_D11(g, R, N), i103, StepRelation::LowerBound,
                           P >= p0 && nondecreasing_from(d103, p0));
  const auto i12 = t.bound("Delta12", chain::t2i_D12(g, R, N, P), i10, StepRelation::EndpointMin, true);
  const auto d12 = [&](const Q& x) { return chain::t2i_D12(g, R, N, x); };
  const auto i13 = t.bound("Delta13", chain::t2i_D13(g, R, N), i12, StepRelation::LowerBound,
                           P >= p0 && nondecreasing_from(d12, p0));
  const bool verdict = t.at(i11).sign() > 0 && t.at(i13).sign() > 0;
  const bool floor_verdict = t.at(i103).sign() > 0 && t.at(i12).sign() > 0;
  return t.finish(verdict, floor_verdict);
}

ChainTrace run_chain(ChainTheorem theorem, ChainCase chain_case, const ChainParams& params) {
  if (theorem == ChainTheorem::One)
    return chain_case == ChainCase::Finite ? thm1_finite_chain(params) : thm1_infinity_chain(params);
  return chain_case == ChainCase::Finite ? thm2_finite_chain(params) : thm2_infinity_chain(params);
}

std::vector<std::size_t> check_trace(const ChainTrace& trace) {
  std::vector<std::size_t> bad;
  const auto& st = trace.steps;
  for (std::size_t i = 0; i < st.size(); ++i) {
    const ChainStep& s = st[i];
    if (!s.parent || !s.hypothesis_holds) continue;
    const Q& parent = st[*s.parent].value;
    switch (s.relation) {
      case StepRelation::Define: break;
      case StepRelation::UpperBound:
        if (s.value < parent) bad.push_back(i);
        break;
      case StepRelation::LowerBound:
        if (s.value > parent) bad.push_back(i);
        break;
      case StepRelation::EndpointMin: {
        const Q* lo = nullptr;
        for (const auto& o : st)
          if (o.relation == StepRelation::EndpointMin && o.parent == s.parent && (!lo || o.value < *lo)) lo = &o.value;
        if (parent < *lo) bad.push_back(i);
        break;
      }
    }
  }
  return bad;
}

std::string_view name(Endpoint e) {
  switch (e) {
    case Endpoint::T1Delta5: return "thm1-finite-Delta5";
    case Endpoint::T1Delta8: return "thm1-infinity-Delta8";
    case Endpoint::T1Delta10: return "thm1-infinity-Delta10";
    case Endpoint::T2Delta6: return "thm2-finite-Delta6";
    case Endpoint::T2Delta11: return "thm2-infinity-Delta11";
    case Endpoint::T2Delta13: return "thm2-infinity-Delta13";
  }
  return "?";
}

BoundKind endpoint_kind(Endpoint e) {
  switch (e) {
    case Endpoint::T1Delta5: return BoundKind::Ic;
    case Endpoint::T1Delta8: return BoundKind::Id;
    case Endpoint::T1Delta10: return BoundKind::If;
    case Endpoint::T2Delta6: return BoundKind::Jc;
    case Endpoint::T2Delta11: return BoundKind::Jd;
    case Endpoint::T2Delta13: return BoundKind::Jf;
  }
  return BoundKind::Ia;
}

Rational endpoint_scale(Endpoint e) {
  return (e == Endpoint::T1Delta10 || e == Endpoint::T2Delta13) ? Rational(7, 6) : Rational(1);
}

Rational endpoint_value(Endpoint e, const Rational& g, const Rational& R, const Rational& N) {
  switch (e) {
    case Endpoint::T1Delta5: return chain::t1_D5(g, N);
    case Endpoint::T1Delta8: return chain::t1i_D8(g, N);
    case Endpoint::T1Delta10: return chain::t1i_D10(g, N);
    case Endpoint::T2Delta6: return chain::t2_D6(g, R, N);
    case Endpoint::T2Delta11: return chain::t2i_D11(g, R, N);
    case Endpoint::T2Delta13: return chain::t2i_D13(g, R, N);
  }
  return Rational(0);
}

EndpointCertificate certify_endpoint(Endpoint e, std::size_t grid_size) {
  EndpointCertificate cert{e};
  const BoundKind kind = endpoint_kind(e);
  const bool j_family = family_of(kind) == Family::J;
  const Rational scale = endpoint_scale(e);

  // Variables (g, R, N); R is shifted to start at 1 for the J family.
  const MultiFn lhs = [&](std::span<const Rational> x) {
    return endpoint_value(e, x[0], j_family ? x[1] + 1 : Rational(0), x[2]);
  };
  const MultiFn rhs = [&](std::span<const Rational> x) {
    const std::int64_t R = j_family ? x[1].numerator().get_si() + 1 : 0;
    const BoundShape shape = bound_shape(kind, R);
    const Rational d = x[2] - shape.linear.eval(x[0]);
    return scale * (d * d - shape.radicand.eval(x[0]));
  };
  const std::array<int, 3> degrees{2, j_family ? 2 : 0, 2};
  cert.identity = identity_on_grid(lhs, rhs, degrees);

  constexpr std::int64_t kPerLine = 20;
  for (std::int64_t line = 0; cert.grid_points < grid_size; ++line) {
    const std::int64_t g = j_family ? line / 2 : line;
    const std::int64_t R = j_family ? 1 + line % 2 : 0;
    const GenusProfile prof{g, R};
    const BoundShape shape = bound_shape(kind, R);
    const std::int64_t start = shape.linear.eval(Rational(g)).floor().get_si() + 1;
    for (std::int64_t N = start; N < start + kPerLine && cert.grid_points < grid_size; ++N) {
      const Rational v = endpoint_value(e, Rational(g), Rational(R), Rational(N));
      const bool positive = is_strict(kind) ? v.sign() > 0 : v.sign() >= 0;
      ++cert.grid_points;
      if (positive != holds(kind, N, prof)) ++cert.grid_mismatches;
    }
  }
  return cert;
}

}  // namespace zl

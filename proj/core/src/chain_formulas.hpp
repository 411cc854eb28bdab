#pragma once

// Raw chain expressions.  No preconditions are checked here; callers decide
// which parameter points are meaningful.  Templated on the exact number type:
// traces use Rational, the lemma grid a fixed-width rational.

#include "zl/rational.hpp"

namespace zl::chain {

using Q = Rational;

template <class T>
T frac(long long n, long long d) {
  return T(n) / T(d);
}

/// (p-1)(q-1) - p' + 1 - 2g.
template <class Q>
Q D(const Q& g, const Q& p, const Q& q, const Q& pp) { return (p - 1) * (q - 1) - pp + 1 - 2 * g; }

// Cuspidal, finite points dominate.  N = r + s + 1.

template <class Q>
Q t1_ext_nu1(const Q& g, const Q& p, const Q& q, const Q& r, const Q& s) {
  return p + q + 4 * g - frac<Q>(5, 2) - frac<Q>(11, 6) * r - frac<Q>(7, 2) * s;
}
template <class Q>
Q t1_m1_max(const Q& g, const Q& p, const Q& r, const Q& s) { return p + 2 * g - r - 2 * s; }
template <class Q>
Q t1_E(const Q& g, const Q& p, const Q& q, const Q& r, const Q& s, const Q& m1) {
  return m1 * (t1_ext_nu1(g, p, q, r, s) - m1 + 2) + 2 * r + 6 * s;
}
template <class Q>
Q t1_E1(const Q& g, const Q& p, const Q& q, const Q& r, const Q& s) {
  return 2 * r + 6 * s + (p + 2 * g - r - 2 * s) * (q + 2 * g - frac<Q>(5, 6) * r - frac<Q>(3, 2) * s - frac<Q>(1, 2));
}
template <class Q>
Q t1_E2(const Q& g, const Q& N, const Q& p, const Q& q) {
  return 2 * N - 2 + (p + 2 * g - N + 1) * (q + 2 * g - frac<Q>(5, 6) * N + frac<Q>(1, 3));
}
template <class Q>
Q t1_D3(const Q& g, const Q& N, const Q& p, const Q& q) {
  return (p - 1) * (q - 1) - (p + 2 * g - N + 1) * (q + 2 * g - frac<Q>(5, 6) * N + frac<Q>(1, 3)) - 2 * g - 2 * N + p - q + 3;
}
template <class Q>
Q t1_D4(const Q& g, const Q& N, const Q& p) { return t1_D3(g, N, p, p + 1); }
template <class Q>
Q t1_D5(const Q& g, const Q& N) { return t1_D4(g, N, N + 1 - 2 * g); }
/// p-coefficient of D4.
template <class Q>
Q t1_D4_slope(const Q& g, const Q& N) { return frac<Q>(11, 6) * N - 4 * g - frac<Q>(10, 3); }

// Cuspidal, p' nu'_inf dominates.  N = r + s.

template <class Q>
Q t1i_nu_inf(const Q& g, const Q& N, const Q& p, const Q& q, const Q& s) {
  const Q r = N - s;
  return p + q + 4 * g - frac<Q>(11, 6) * r - frac<Q>(7, 2) * s - 2;
}
template <class Q>
Q t1i_E(const Q& g, const Q& N, const Q& p, const Q& q, const Q& pp, const Q& s) {
  return 2 * N + 4 * s + pp * (p + q + 4 * g - frac<Q>(11, 6) * N - frac<Q>(5, 3) * s - 2);
}
template <class Q>
Q t1i_E6(const Q& g, const Q& N, const Q& p, const Q& q, const Q& pp) {
  return 2 * N + pp * (p + q + 4 * g - frac<Q>(11, 6) * N - 2);
}
template <class Q>
Q t1i_D6(const Q& g, const Q& N, const Q& p, const Q& q, const Q& pp) {
  return (p - 1) * (q - 1) - pp + 1 - pp * (p + q + 4 * g - frac<Q>(11, 6) * N - 2) - 2 * g - 2 * N;
}
template <class Q>
Q t1i_D7(const Q& g, const Q& N, const Q& p, const Q& pp) { return t1i_D6(g, N, p, p + pp, pp); }
template <class Q>
Q t1i_D8(const Q& g, const Q& N) { return t1i_D7(g, N, N - 2 * g + 1, Q(3)); }
template <class Q>
Q t1i_D9(const Q& g, const Q& N, const Q& p) { return t1i_D7(g, N, p, p / 2); }
template <class Q>
Q t1i_D10(const Q& g, const Q& N) { return t1i_D9(g, N, N - 2 * g + 1); }

// Multi-branch, finite points dominate.  T_n = sum_j k_j j^n.

/// ext nu_1 at equality in the codimension budget.
template <class Q>
Q t2_ext_nu1(const Q& g, const Q& R, const Q& p, const Q& q, const Q& r, const Q& s, const Q& T0,
                    const Q& T1) {
  return p + q - 2 + R + 4 * g - frac<Q>(11, 6) * r - frac<Q>(7, 2) * s - T1 + 2 * T0;
}
template <class Q>
Q t2_m1_max(const Q& g, const Q& p, const Q& r, const Q& s, const Q& B) { return p + 2 * g - 1 + B - r - 2 * s; }
template <class Q>
Q t2_E(const Q& ext_nu1, const Q& r, const Q& s, const Q& T2_minus_T1, const Q& m1, const Q& B) {
  return 2 * r + 6 * s + T2_minus_T1 + m1 * (ext_nu1 - m1 + B + 1);
}
template <class Q>
Q t2_E1(const Q& g, const Q& N, const Q& p, const Q& q, const Q& r, const Q& A, const Q& T2_minus_T1) {
  return (p + 2 * g - 1 + A - r) * (q + 2 * g + A - frac<Q>(11, 6) * r + N - 2) + 2 * r + T2_minus_T1;
}
/// With k_3 = ... = k_{A-1} = 0; the 2r from the unibranched points is kept.
template <class Q>
Q t2_E2(const Q& g, const Q& R, const Q& N, const Q& p, const Q& q, const Q& r, const Q& A) {
  return (p + 2 * g + A - r - 1) * (q + 2 * g + A + N - frac<Q>(11, 6) * r - 2) + A * (R - N + r + 1) + (R + N + r) -
         A * A;
}
template <class Q>
Q t2_E3(const Q& g, const Q& R, const Q& N, const Q& p, const Q& q, const Q& A) {
  return (p + 2 * g + 1 + R - N) * (q + 2 * g + frac<Q>(11, 6) * R - frac<Q>(5, 6) * A - frac<Q>(5, 6) * N + frac<Q>(5, 3)) +
         2 * N - 2;
}
template <class Q>
Q t2_E4(const Q& g, const Q& R, const Q& N, const Q& p, const Q& q) { return t2_E3(g, R, N, p, q, Q(2)); }
template <class Q>
Q t2_D4(const Q& g, const Q& R, const Q& N, const Q& p, const Q& q) {
  return (p - 1) * (q - 1) - q + p - 2 * g + 1 - t2_E4(g, R, N, p, q);
}
template <class Q>
Q t2_D5(const Q& g, const Q& R, const Q& N, const Q& p) { return t2_D4(g, R, N, p, p + 1); }
template <class Q>
Q t2_D6(const Q& g, const Q& R, const Q& N) { return t2_D5(g, R, N, N - R - 2 * g + 1); }
template <class Q>
Q t2_D5_slope(const Q& g, const Q& R, const Q& N) {
  return frac<Q>(11, 6) * N - frac<Q>(17, 6) * R - 4 * g - 3;
}

// Multi-branch, p' nu'_inf dominates.

template <class Q>
Q t2i_nu_inf(const Q& g, const Q& R, const Q& p, const Q& q, const Q& r, const Q& s, const Q& T0,
                    const Q& T1) {
  return p + q - 2 + R + 4 * g - frac<Q>(11, 6) * r - frac<Q>(7, 2) * s - T1 + 2 * T0;
}
template <class Q>
Q t2i_E(const Q& nu_inf, const Q& pp, const Q& r, const Q& s, const Q& T2_minus_T1) {
  return 2 * r + 6 * s + T2_minus_T1 + pp * nu_inf;
}
template <class Q>
Q t2i_E7(const Q& g, const Q& N, const Q& p, const Q& q, const Q& pp, const Q& r, const Q& T2_minus_T1) {
  return 2 * r + T2_minus_T1 + pp * (p + q - 2 + 4 * g - frac<Q>(17, 6) * r + N);
}
template <class Q>
Q t2i_E8(const Q& g, const Q& R, const Q& N, const Q& p, const Q& q, const Q& pp, const Q& r, const Q& A) {
  return A * (R - N + r) + R + N + r + pp * (p + q - 2 + 4 * g - frac<Q>(17, 6) * r + N);
}
template <class Q>
Q t2i_E9(const Q& g, const Q& R, const Q& N, const Q& p, const Q& q, const Q& pp) {
  return 2 * N + pp * (p + q - 2 + 4 * g + frac<Q>(17, 6) * R - frac<Q>(11, 6) * N);
}
template <class Q>
Q t2i_D9(const Q& g, const Q& R, const Q& N, const Q& p, const Q& q, const Q& pp) {
  return (p - 1) * (q - 1) - pp + 1 - 2 * g - t2i_E9(g, R, N, p, q, pp);
}
template <class Q>
Q t2i_D10(const Q& g, const Q& R, const Q& N, const Q& p, const Q& pp) {
  return t2i_D9(g, R, N, p, p + pp, pp);
}
template <class Q>
Q t2i_D11(const Q& g, const Q& R, const Q& N) { return t2i_D10(g, R, N, N - R - 2 * g + 1, Q(3)); }
template <class Q>
Q t2i_D12(const Q& g, const Q& R, const Q& N, const Q& p) { return t2i_D10(g, R, N, p, p / 2); }
template <class Q>
Q t2i_D13(const Q& g, const Q& R, const Q& N) { return t2i_D12(g, R, N, N - R - 2 * g + 1); }

}  // namespace zl::chain

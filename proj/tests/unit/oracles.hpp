// Independent reference computations used as test oracles.  Nothing here
// calls into the code under test except for the Rational value type.
#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include <gmpxx.h>

#include "zl/bounds.hpp"
#include "zl/rational.hpp"
#include "zl/surd.hpp"

namespace oracle {

inline constexpr mp_bitcnt_t kBits = 1024;

inline mpf_class to_mpf(const zl::Rational& r) { return mpf_class(r.raw(), kBits); }

inline mpf_class value(const zl::Surd& s) {
  mpf_class v(0, kBits);
  v = to_mpf(s.linear()) + sqrt(to_mpf(s.radicand()));
  return v;
}

/// Sign of a - b in 1024-bit floating point, with |a - b| < 2^-900 read as 0.
inline int float_sign(const zl::Surd& a, const zl::Surd& b) {
  mpf_class d(0, kBits);
  d = value(a) - value(b);
  mpf_class eps(1, kBits);
  mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), 900);
  if (abs(d) < eps) return 0;
  return sgn(d);
}

/// Bound formulas typed in directly from the theorem statements, as (L, S).
inline std::pair<zl::Rational, zl::Rational> bound_formula(zl::BoundKind k, std::int64_t gi, std::int64_t Ri) {
  using zl::Rational;
  const Rational g(gi), R(Ri);
  auto f = [](long long n, long long d) { return Rational(n, d); };
  switch (k) {
    case zl::BoundKind::Ia: return {Rational(2) * g + Rational(3), 0};
    case zl::BoundKind::Ib: return {f(24, 11) * g + f(20, 11), 0};
    case zl::BoundKind::Ic: return {Rational(2) * g + f(2, 3), f(20, 3) * g + f(28, 9)};
    case zl::BoundKind::Id: return {Rational(2) * g - f(1, 4), Rational(7) * g + f(177, 16)};
    case zl::BoundKind::Ie: return {f(36, 17) * g + f(18, 17), 0};
    case zl::BoundKind::If:
      return {f(29, 14) * g + f(31, 28), f(1, 196) * g * g + f(1067, 196) * g + f(793, 784)};
    case zl::BoundKind::Ja: return {Rational(2) * g + Rational(3) + R, 0};
    case zl::BoundKind::Jb: return {f(24, 11) * g + f(17, 11) * R + f(18, 11), 0};
    case zl::BoundKind::Jc: return {Rational(2) * g + R + f(2, 3), f(20, 3) * g + Rational(4) * R + f(22, 9)};
    case zl::BoundKind::Jd: return {Rational(2) * g + R - f(1, 4), Rational(7) * g + Rational(5) * R + f(177, 16)};
    case zl::BoundKind::Je: return {f(36, 17) * g + f(23, 17) * R + f(18, 17), 0};
    case zl::BoundKind::Jf: {
      const Rational s = g + Rational(3) * R;
      return {f(29, 14) * g + f(17, 14) * R + f(31, 28),
              s * s / Rational(196) + f(1067, 196) * g + f(513, 196) * R + f(793, 784)};
    }
  }
  return {0, 0};
}

/// Smallest N >= 0 with N >= f (or N > f when strict), by linear scan in
/// floating point; only used where f is far from an integer or exactly one.
inline std::int64_t scan_threshold(zl::BoundKind k, std::int64_t g, std::int64_t R, bool strict) {
  const auto [L, S] = bound_formula(k, g, R);
  const zl::Surd f(L, S);
  for (std::int64_t N = 0;; ++N) {
    const int s = float_sign(zl::Surd(zl::Rational(N)), f);
    if (s > 0 || (s == 0 && !strict)) return N;
  }
}

inline zl::Rational random_rational(std::mt19937_64& rng, long long num_range, long long den_max) {
  std::uniform_int_distribution<long long> n(-num_range, num_range), d(1, den_max);
  return zl::Rational(n(rng), d(rng));
}

}  // namespace oracle

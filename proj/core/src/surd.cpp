#include "zl/surd.hpp"

#include <stdexcept>

namespace zl {
namespace {

std::strong_ordering from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// sign(d + sqrt(s1) - sqrt(s2)), s1, s2 >= 0.
int sign_of_difference(const Rational& d, const Rational& s1, const Rational& s2) {
  const int sd = d.sign();
  const int st = (s1 > s2) ? 1 : (s1 < s2 ? -1 : 0);
  if (sd == 0) return st;
  if (st == 0 || sd == st) return sd;

  // Opposite signs: compare |d| with |sqrt(s1) - sqrt(s2)|.
  // d^2 vs s1 + s2 - 2 sqrt(s1 s2), i.e. sign(e + 2 sqrt(s1 s2)) with e = d^2 - s1 - s2.
  const Rational e = d * d - s1 - s2;
  const Rational prod = s1 * s2;
  int magnitude;
  if (e.sign() >= 0) {
    magnitude = (e.sign() > 0 || prod.sign() > 0) ? 1 : 0;
  } else {
    // e < 0: sign(2 sqrt(prod) - |e|) = sign(4 prod - e^2)
    magnitude = (Rational(4) * prod - e * e).sign();
  }
  if (magnitude > 0) return sd;
  if (magnitude < 0) return st;
  return 0;
}

BigInt isqrt_floor(const Rational& s) {
  BigInt f = s.floor();
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
  return r;
}

}  // namespace

Surd::Surd(Rational linear, Rational radicand)
    : linear_(std::move(linear)), radicand_(std::move(radicand)) {
  if (radicand_.sign() < 0) throw std::invalid_argument("surd radicand must be nonnegative, got " + radicand_.str());
}

bool Surd::is_rational() const {
  Rational root;
  return rational_sqrt(radicand_, root);
}

std::strong_ordering surd_cmp(const Surd& a, const Surd& b) {
  return from_sign(sign_of_difference(a.linear() - b.linear(), a.radicand(), b.radicand()));
}

bool operator==(const Surd& a, const Surd& b) { return surd_cmp(a, b) == 0; }
std::strong_ordering operator<=>(const Surd& a, const Surd& b) { return surd_cmp(a, b); }

BigInt Surd::floor() const {
  // floor(L + sqrt S) is floor(L) + floor(sqrt S) or one more.
  BigInt k = linear_.floor() + isqrt_floor(radicand_);
  if (surd_cmp(Surd(Rational(BigInt(k + 1))), *this) <= 0) k += 1;
  return k;
}

BigInt Surd::ceil() const {
  BigInt f = floor();
  if (surd_cmp(Surd(Rational(f)), *this) == 0) return f;
  return BigInt(f + 1);
}

BigInt surd_floor(const Surd& x) { return x.floor(); }

std::string Surd::decimal(int digits) const {
  if (radicand_.is_zero()) return linear_.decimal(digits);
  const mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(64 + 4 * (digits > 0 ? digits : 0));
  mpf_class l(linear_.raw(), bits);
  mpf_class s(radicand_.raw(), bits);
  mpf_class v(0, bits);
  v = l + sqrt(s);
  // Route through a rational with enough digits so rounding is shared with Rational::decimal.
  mpq_class q(v);
  return Rational::from_mpq(q).decimal(digits);
}

std::string Surd::str() const {
  if (radicand_.is_zero()) return linear_.str();
  return linear_.str() + " + sqrt(" + radicand_.str() + ")";
}

bool rational_sqrt(const Rational& s, Rational& root) {
  if (s.sign() < 0) return false;
  BigInt n = s.numerator();
  BigInt d = s.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  return true;
}

}  // namespace zl

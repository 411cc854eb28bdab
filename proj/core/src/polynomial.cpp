#include "zl/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace zl {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
Polynomial::Polynomial(const Rational& constant) : coeffs_{constant} { trim(); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return Polynomial(std::move(out));
}

std::string Polynomial::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[i].str() << ")";
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

bool poly_identity_check(std::span<const Rational> a, std::span<const Rational> b) {
  const std::size_t points = std::max<std::size_t>({a.size(), b.size(), 1});
  auto eval = [](std::span<const Rational> c, const Rational& x) {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  for (std::size_t k = 0; k < points; ++k) {
    const Rational x(static_cast<long>(k));
    if (eval(a, x) != eval(b, x)) return false;
  }
  return true;
}

bool poly_identity_check(const Polynomial& a, const Polynomial& b) {
  return poly_identity_check(std::span<const Rational>(a.coeffs()), std::span<const Rational>(b.coeffs()));
}

bool identity_on_grid(const MultiFn& f, const MultiFn& g, std::span<const int> degrees) {
  std::vector<int> idx(degrees.size(), 0);
  std::vector<Rational> point(degrees.size());
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) point[i] = Rational(idx[i]);
    if (f(point) != g(point)) return false;
    std::size_t k = 0;
    while (k < idx.size() && idx[k] == degrees[k]) idx[k++] = 0;
    if (k == idx.size()) return true;
    ++idx[k];
  }
}

bool nonnegative_tail(const Polynomial& p, const Rational& from) {
  switch (p.degree()) {
    case -1: return true;
    case 0: return p.coeff(0).sign() >= 0;
    case 1: return p.coeff(1).sign() > 0 && p.eval(from).sign() >= 0;
    case 2: {
      if (p.coeff(2).sign() <= 0) return false;
      const Rational disc = p.coeff(1) * p.coeff(1) - Rational(4) * p.coeff(2) * p.coeff(0);
      if (disc.sign() < 0) return true;
      return p.eval(from).sign() >= 0 && p.derivative().eval(from).sign() >= 0;
    }
    default: return false;
  }
}

std::optional<Surd> larger_root(const Polynomial& p) {
  if (p.degree() != 2) return std::nullopt;
  const Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
  const Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() < 0) return std::nullopt;
  // roots are -b/(2a) +- sqrt(disc/(4a^2))
  return Surd(-b / (Rational(2) * a), disc / (Rational(4) * a * a));
}

}  // namespace zl

#include "zl/local_invariants.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace zl {

SymmetricTable::SymmetricTable(std::size_t size, std::int64_t fill)
    : size_(size), upper_(size < 2 ? 0 : size * (size - 1) / 2, fill) {}

std::size_t SymmetricTable::index(std::size_t i, std::size_t j) const {
  if (i == j || i >= size_ || j >= size_) {
    throw std::out_of_range("table index (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  if (i > j) std::swap(i, j);
  // row-major strict upper triangle
  return i * size_ - i * (i + 1) / 2 + (j - i - 1);
}

std::int64_t SymmetricTable::at(std::size_t i, std::size_t j) const { return upper_[index(i, j)]; }
void SymmetricTable::set(std::size_t i, std::size_t j, std::int64_t value) { upper_[index(i, j)] = value; }

SymmetricTable SymmetricTable::permuted(std::span<const std::size_t> order) const {
  SymmetricTable out(size_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = i + 1; j < size_; ++j) out.set(i, j, at(order[i], order[j]));
  return out;
}

std::optional<TripleViolation> TangencyTable::triple_violation() const {
  const std::size_t r = size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t k = j + 1; k < r; ++k) {
        const std::int64_t a = at(i, j), b = at(i, k), c = at(j, k);
        const std::int64_t lo = std::min({a, b, c});
        if ((a == lo) + (b == lo) + (c == lo) < 2) return TripleViolation{i, j, k};
      }
  return std::nullopt;
}

std::int64_t TangencyTable::prefix_max_sum() const {
  std::int64_t sum = 0;
  for (std::size_t j = 1; j < size(); ++j) {
    std::int64_t best = at(0, j);
    for (std::size_t i = 1; i < j; ++i) best = std::max(best, at(i, j));
    sum += best;
  }
  return sum;
}

Rational excess_lower_bound(ExcessClass c) {
  switch (c) {
    case ExcessClass::CuspMult2: return Rational(5, 6);
    case ExcessClass::CuspGeneral: return Rational(1, 2);
    case ExcessClass::MultiBranch: return Rational(0);
  }
  return Rational(0);
}

bool excess_bound_strict(ExcessClass c) { return c == ExcessClass::CuspGeneral; }

ExcessClass SingularPointModel::excess_class() const {
  if (r >= 2) return ExcessClass::MultiBranch;
  return m == 2 ? ExcessClass::CuspMult2 : ExcessClass::CuspGeneral;
}

void SingularPointModel::validate() const {
  if (r < 1) throw PreconditionError("r >= 1", "got r = " + std::to_string(r));
  if (m < 2) throw PreconditionError("m >= 2", "a singular point has multiplicity at least 2, got " + std::to_string(m));
  if (m < r) {
    throw PreconditionError("m >= r", "multiplicity " + std::to_string(m) + " below branch count " + std::to_string(r));
  }
  if (r >= 2 && ext_nu < r - 2) {
    throw PreconditionError("ext_nu >= r - 2", "got ext_nu = " + std::to_string(ext_nu) + " with r = " + std::to_string(r));
  }
  if (two_delta && *two_delta < 0) throw PreconditionError("two_delta >= 0", "got " + std::to_string(*two_delta));
}

std::int64_t milnor_decompose(std::int64_t n, std::int64_t m, std::int64_t mu_prime) {
  if (n < 2) throw PreconditionError("n >= 2", "got n = " + std::to_string(n));
  if (m <= n) throw PreconditionError("m > n", "got n = " + std::to_string(n) + ", m = " + std::to_string(m));
  if (mu_prime < 0) throw PreconditionError("mu' >= 0", "got " + std::to_string(mu_prime));
  return (n - 1) * (m - 1) + std::gcd(n, m) - 1 + mu_prime;
}

SingularPointModel ordinary_point(std::int64_t n) {
  if (n < 2) throw PreconditionError("n >= 2", "got n = " + std::to_string(n));
  return SingularPointModel{n, n, n - 2, n * n - n};
}

BrnReport brn_rhs(const SingularPointModel& point) {
  point.validate();
  BrnReport out;
  out.rhs = point.m * (point.ext_nu - point.m + point.r + 1);
  if (point.two_delta) out.holds = *point.two_delta <= out.rhs;
  return out;
}

std::int64_t max_intersection(const BranchModel& bi, const BranchModel& bj, std::int64_t nu_ij) {
  return std::min(bi.m * (bj.y_codim() + nu_ij + 1), bj.m * (bi.y_codim() + nu_ij + 1));
}

Composition compose_multibranch(std::span<const BranchModel> branches, const TangencyTable& tangency,
                                const SymmetricTable& intersections) {
  const std::size_t r = branches.size();
  if (r < 2) throw CompositionError("r >= 2", "a multi-branch point needs at least two branches", {});
  if (tangency.size() != r || intersections.size() != r) {
    throw CompositionError("table size", "tangency and intersection tables must be " + std::to_string(r) + " x " +
                                             std::to_string(r), {});
  }
  for (std::size_t i = 0; i < r; ++i) {
    const BranchModel& b = branches[i];
    if (b.m < 1) throw CompositionError("m_i >= 1", "branch " + std::to_string(i), {i});
    if (b.y_codim() < 0) throw CompositionError("nu_i >= 0", "branch " + std::to_string(i) + " has ext_nu below m - 2", {i});
    if (b.two_delta < 0 || !b.admissible()) {
      throw CompositionError("2 delta_i <= m_i nu_i", "branch " + std::to_string(i), {i});
    }
  }
  if (auto v = tangency.triple_violation()) {
    throw CompositionError("triple rule", "minimum of nu over branches (" + std::to_string(v->i) + ", " +
                                              std::to_string(v->j) + ", " + std::to_string(v->k) + ") occurs once",
                           {v->i, v->j, v->k});
  }
  std::int64_t eps_sum = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      if (tangency.at(i, j) < 0) throw CompositionError("nu_ij >= 0", "pair", {i, j});
      const std::int64_t eps = intersections.at(i, j);
      if (eps < 1) throw CompositionError("eps_ij >= 1", "intersection index must be positive", {i, j});
      const std::int64_t cap = max_intersection(branches[i], branches[j], tangency.at(i, j));
      if (eps > cap) {
        throw CompositionError("eps_ij <= m_i (nu_j + nu_ij + 1)",
                               "eps = " + std::to_string(eps) + " exceeds " + std::to_string(cap), {i, j});
      }
      eps_sum += eps;
    }

  Composition out;
  std::int64_t m = 0, ext = 0, two_delta = 0, smooth = 0;
  for (const BranchModel& b : branches) {
    m += b.m;
    ext += b.ext_nu;
    two_delta += b.two_delta;
    if (b.ext_nu < 0) smooth += -b.ext_nu;
  }
  const auto rr = static_cast<std::int64_t>(r);
  ext += tangency.prefix_max_sum() + 2 * rr - 2;
  out.point = SingularPointModel{m, rr, ext, two_delta + 2 * eps_sum};
  out.ext_nu_smooth_as_zero = ext + smooth;
  out.conventions_differ = smooth != 0;
  return out;
}

S12Report check_s12(const TangencyTable& tangency) {
  const std::size_t r = tangency.size();
  if (auto v = tangency.triple_violation()) {
    throw CompositionError("triple rule", "table violates the triple rule", {v->i, v->j, v->k});
  }
  S12Report out;
  out.order.resize(r);
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  if (r < 2) {
    out.holds = true;
    return out;
  }
  const std::size_t last = r - 1;
  std::size_t best = 0;
  for (std::size_t i = 1; i < last; ++i)
    if (tangency.at(i, last) > tangency.at(best, last)) best = i;
  std::swap(out.order[best], out.order[last - 1]);
  const TangencyTable t(tangency.permuted(out.order));
  for (std::size_t i = 0; i < last; ++i) out.lhs += t.at(i, last);
  out.rhs = t.prefix_max_sum();
  out.holds = out.lhs <= out.rhs;
  return out;
}

std::int64_t mu_prime_bound(std::int64_t n_prime, std::int64_t nu_prime) {
  if (n_prime < 1) throw PreconditionError("n' >= 1", "got " + std::to_string(n_prime));
  if (nu_prime < 0) throw PreconditionError("nu' >= 0", "got " + std::to_string(nu_prime));
  return n_prime * nu_prime;
}

std::int64_t exchange_form(std::int64_t x, std::int64_t y, std::int64_t z) {
  return z * x * (x - z) + z * y * (z - y) + x * y * (y - x);
}

}  // namespace zl

#include "zl/bounds.hpp"

#include <algorithm>

#include "zl/errors.hpp"

namespace zl {
namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

void require_genus(const GenusProfile& p) {
  if (p.g < 0) throw PreconditionError("g >= 0", "got g = " + std::to_string(p.g));
  if (p.R < 0) throw PreconditionError("R >= 0", "got R = " + std::to_string(p.R));
}

void require_family_domain(BoundKind kind, const GenusProfile& p) {
  require_genus(p);
  if (family_of(kind) == Family::J && p.R < 1) {
    throw PreconditionError("R >= 1", "J-family bounds are only defined for R > 0");
  }
}

}  // namespace

const std::array<BoundKind, 6>& members(Family family) { return family == Family::I ? kIKinds : kJKinds; }

Family family_of(BoundKind kind) { return static_cast<int>(kind) < 6 ? Family::I : Family::J; }

std::string_view name(BoundKind kind) {
  static constexpr std::array<std::string_view, 12> kNames{"Ia", "Ib", "Ic", "Id", "Ie", "If",
                                                           "Ja", "Jb", "Jc", "Jd", "Je", "Jf"};
  return kNames[static_cast<std::size_t>(kind)];
}

std::optional<BoundKind> bound_from_name(std::string_view n) {
  for (int i = 0; i < 12; ++i) {
    auto k = static_cast<BoundKind>(i);
    if (name(k) == n) return k;
  }
  return std::nullopt;
}

bool is_strict(BoundKind kind) {
  switch (kind) {
    case BoundKind::Ia:
    case BoundKind::Ib:
    case BoundKind::Ja:
    case BoundKind::Jb:
    case BoundKind::Je:
      return false;
    default:
      return true;
  }
}

Surd eval_bound(BoundKind kind, const GenusProfile& profile) {
  require_family_domain(kind, profile);
  const Rational g(profile.g);
  const Rational R(profile.R);
  switch (kind) {
    case BoundKind::Ia: return Surd(2 * g + 3);
    case BoundKind::Ib: return Surd(q(24, 11) * g + q(20, 11));
    case BoundKind::Ic: return Surd(2 * g + q(2, 3), q(20, 3) * g + q(28, 9));
    case BoundKind::Id: return Surd(2 * g - q(1, 4), 7 * g + q(177, 16));
    case BoundKind::Ie: return Surd(q(36, 17) * g + q(18, 17));
    case BoundKind::If: return Surd(q(29, 14) * g + q(31, 28), g * g / 196 + q(1067, 196) * g + q(793, 784));
    case BoundKind::Ja: return Surd(2 * g + 3 + R);
    case BoundKind::Jb: return Surd(q(24, 11) * g + q(17, 11) * R + q(18, 11));
    case BoundKind::Jc: return Surd(2 * g + R + q(2, 3), q(20, 3) * g + 4 * R + q(22, 9));
    case BoundKind::Jd: return Surd(2 * g + R - q(1, 4), 7 * g + 5 * R + q(177, 16));
    case BoundKind::Je: return Surd(q(36, 17) * g + q(23, 17) * R + q(18, 17));
    case BoundKind::Jf: {
      const Rational s = g + 3 * R;
      return Surd(q(29, 14) * g + q(17, 14) * R + q(31, 28),
                  s * s / 196 + q(1067, 196) * g + q(513, 196) * R + q(793, 784));
    }
  }
  throw std::invalid_argument("unknown bound kind");
}

BoundShape bound_shape(BoundKind kind, std::int64_t R_int) {
  if (family_of(kind) == Family::J && R_int < 1) {
    throw PreconditionError("R >= 1", "J-family bounds are only defined for R > 0");
  }
  const Polynomial g = Polynomial::x();
  const Rational R(R_int);
  auto lin = [&](const Rational& a, const Rational& b) { return Polynomial({b, a}); };
  switch (kind) {
    case BoundKind::Ia: return {lin(2, 3), {}};
    case BoundKind::Ib: return {lin(q(24, 11), q(20, 11)), {}};
    case BoundKind::Ic: return {lin(2, q(2, 3)), lin(q(20, 3), q(28, 9))};
    case BoundKind::Id: return {lin(2, -q(1, 4)), lin(7, q(177, 16))};
    case BoundKind::Ie: return {lin(q(36, 17), q(18, 17)), {}};
    case BoundKind::If: return {lin(q(29, 14), q(31, 28)), Polynomial({q(793, 784), q(1067, 196), q(1, 196)})};
    case BoundKind::Ja: return {lin(2, 3 + R), {}};
    case BoundKind::Jb: return {lin(q(24, 11), q(17, 11) * R + q(18, 11)), {}};
    case BoundKind::Jc: return {lin(2, R + q(2, 3)), lin(q(20, 3), 4 * R + q(22, 9))};
    case BoundKind::Jd: return {lin(2, R - q(1, 4)), lin(7, 5 * R + q(177, 16))};
    case BoundKind::Je: return {lin(q(36, 17), q(23, 17) * R + q(18, 17)), {}};
    case BoundKind::Jf: {
      const Polynomial s = g + Polynomial(3 * R);
      return {lin(q(29, 14), q(17, 14) * R + q(31, 28)),
              s * s * Polynomial(q(1, 196)) + lin(q(1067, 196), q(513, 196) * R + q(793, 784))};
    }
  }
  throw std::invalid_argument("unknown bound kind");
}

bool holds(BoundKind kind, std::int64_t N, const GenusProfile& profile) {
  if (N < 0) throw PreconditionError("N >= 0", "got N = " + std::to_string(N));
  const auto c = surd_cmp(Surd(Rational(static_cast<long>(N))), eval_bound(kind, profile));
  return is_strict(kind) ? c > 0 : c >= 0;
}

std::int64_t threshold(BoundKind kind, const GenusProfile& profile) {
  const Surd f = eval_bound(kind, profile);
  const BigInt t = is_strict(kind) ? f.floor() + 1 : f.ceil();
  // N counts points, so the threshold is never below zero.
  return std::max<std::int64_t>(0, t.get_si());
}

Envelope envelope(const GenusProfile& profile, Family family) {
  const auto& kinds = members(family);
  Envelope best{kinds[0], eval_bound(kinds[0], profile)};
  for (std::size_t i = 1; i < kinds.size(); ++i) {
    Surd v = eval_bound(kinds[i], profile);
    if (surd_cmp(v, best.value) > 0) best = {kinds[i], std::move(v)};
  }
  return best;
}

std::int64_t max_allowed_N(const GenusProfile& profile, Family family) {
  std::int64_t all_hold = 0;
  for (BoundKind k : members(family)) all_hold = std::max(all_hold, threshold(k, profile));
  return all_hold - 1;
}

std::int64_t refined_max_N(const GenusProfile& profile, Family family) {
  if (family == Family::I && profile.g == 1) return 5;
  if (family == Family::J && profile.g == 0 && profile.R == 1) return 3;
  if (family == Family::J && profile.g == 0 && profile.R == 2) return 5;
  return max_allowed_N(profile, family);
}

std::int64_t zl_bound(const GenusProfile& profile) {
  require_genus(profile);
  return 2 * profile.betti() + 1;
}

}  // namespace zl

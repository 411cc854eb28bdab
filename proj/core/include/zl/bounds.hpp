#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "zl/polynomial.hpp"
#include "zl/surd.hpp"

namespace zl {

/// The six cuspidal bounds I_a..I_f and the six multi-branch bounds J_a..J_f.
enum class BoundKind { Ia, Ib, Ic, Id, Ie, If, Ja, Jb, Jc, Jd, Je, Jf };

enum class Family { I, J };

inline constexpr std::array<BoundKind, 6> kIKinds{BoundKind::Ia, BoundKind::Ib, BoundKind::Ic,
                                                  BoundKind::Id, BoundKind::Ie, BoundKind::If};
inline constexpr std::array<BoundKind, 6> kJKinds{BoundKind::Ja, BoundKind::Jb, BoundKind::Jc,
                                                  BoundKind::Jd, BoundKind::Je, BoundKind::Jf};

const std::array<BoundKind, 6>& members(Family family);
Family family_of(BoundKind kind);
std::string_view name(BoundKind kind);
std::optional<BoundKind> bound_from_name(std::string_view name);

/// True when the hypothesis reads N > f, false when it reads N >= f.
/// Non-strict: Ia, Ib, Ja, Jb, Je.  Note Ie is strict while Je is not.
bool is_strict(BoundKind kind);

/// Geometric genus g and total branch excess R = sum (r_i - 1).
struct GenusProfile {
  std::int64_t g = 0;
  std::int64_t R = 0;

  [[nodiscard]] std::int64_t betti() const { return 2 * g + R; }
};

/// Exact value of the named bound.  J kinds require R >= 1; I kinds ignore R.
Surd eval_bound(BoundKind kind, const GenusProfile& profile);

/// The bound as L(g) + sqrt(S(g)) with L and S polynomials in g at fixed R.
struct BoundShape {
  Polynomial linear;
  Polynomial radicand;
};
BoundShape bound_shape(BoundKind kind, std::int64_t R);

/// N >= f or N > f according to the kind's strictness.
bool holds(BoundKind kind, std::int64_t N, const GenusProfile& profile);

/// Smallest integer N for which holds(kind, N, profile) is true.
std::int64_t threshold(BoundKind kind, const GenusProfile& profile);

struct Envelope {
  BoundKind argmax;
  Surd value;
};
/// Maximum of the six family members (first maximiser in kind order on ties).
Envelope envelope(const GenusProfile& profile, Family family);

/// Largest N not excluded by the theorem: (min N where all six hold) - 1.
std::int64_t max_allowed_N(const GenusProfile& profile, Family family);

/// max_allowed_N with the three hand-checked small cases tightened:
/// (I, g=1) -> 5, (J, g=0, R=1) -> 3, (J, g=0, R=2) -> 5.
std::int64_t refined_max_N(const GenusProfile& profile, Family family);

/// 2 b_1 + 1 = 2 (2g + R) + 1.
std::int64_t zl_bound(const GenusProfile& profile);

}  // namespace zl

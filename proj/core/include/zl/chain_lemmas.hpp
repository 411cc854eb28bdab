#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zl {

/// Integer box over which the monotonicity and concavity claims of the
/// chains are tested as discrete differences.
struct LemmaGrid {
  std::int64_t g_max = 10;
  std::int64_t N_max = 60;
  std::int64_t p_max = 80;
  /// q ranges over [p + 1, p + q_span].
  std::int64_t q_span = 2;
  /// Multi-branch lemmas use R in [1, R_max] and A in [2, A_max].
  std::int64_t R_max = 3;
  std::int64_t A_max = 4;

  friend bool operator==(const LemmaGrid&, const LemmaGrid&) = default;
};

struct LemmaResult {
  std::string name;
  std::string claim;
  std::size_t checked = 0;
  std::size_t counterexamples = 0;
  /// Points where a claimed strict sign was only weak (difference zero).
  std::size_t zero_steps = 0;
  /// Up to five counterexamples as "key=value ..." strings.
  std::vector<std::string> examples;

  [[nodiscard]] bool ok() const { return checked > 0 && counterexamples == 0; }

  friend bool operator==(const LemmaResult&, const LemmaResult&) = default;
};

struct LemmaReport {
  std::vector<LemmaResult> lemmas;
  /// Points (with p at or above its boundary and Je holding) where
  /// Delta12 >= Delta13, and where Delta12 <= Delta13.
  std::size_t delta12_ge_delta13 = 0;
  std::size_t delta12_le_delta13 = 0;
  std::size_t delta12_points = 0;

  [[nodiscard]] bool ok() const;

  friend bool operator==(const LemmaReport&, const LemmaReport&) = default;
};

LemmaReport check_chain_lemmas(const LemmaGrid& grid = {});

}  // namespace zl

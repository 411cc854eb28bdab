#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zl/bounds.hpp"
#include "zl/surd.hpp"

namespace zl {

/// Exact certificate that I_b(g) >= I_x(g) for every real g >= from.
struct TailCertificate {
  BoundKind competitor;
  /// L_b - L_x >= 0 on the tail.
  bool linear_part = false;
  /// (L_b - L_x)^2 - S_x >= 0 on the tail (vacuous when S_x = 0).
  bool squared_part = false;

  [[nodiscard]] bool ok() const { return linear_part && squared_part; }

  friend bool operator==(const TailCertificate&, const TailCertificate&) = default;
};

struct RootBracket {
  Surd root;
  std::int64_t lo = 0, hi = 0;
  bool inside = false;

  friend bool operator==(const RootBracket&, const RootBracket&) = default;
};

struct CrossoverIReport {
  std::int64_t onset = -1;
  std::int64_t scanned_to = 0;
  /// I_f(onset - 1) > I_b(onset - 1).
  bool previous_dominated_by_f = false;
  /// I_b(onset) >= all five others.
  bool onset_dominated_by_b = false;
  std::vector<TailCertificate> tails;
  /// Larger root of g^2 - (2239/3) g - 875/12 and of g^2 - (2239/3) g - 857/12.
  RootBracket printed_root;
  RootBracket corrected_root;
  /// (L_b - L_f)^2 - S_f = (6/847)(g^2 - (2239/3) g - c) for c = 875/12 and 857/12.
  bool printed_identity = false;
  bool corrected_identity = false;

  [[nodiscard]] bool ok() const;

  friend bool operator==(const CrossoverIReport&, const CrossoverIReport&) = default;
};

/// Smallest g with I(g) = I_b(g) for every scanned g' >= g up to scan_to,
/// with exact tail certificates beyond it.
CrossoverIReport find_crossover_I(std::int64_t scan_to = 2000);

struct CrossoverJReport {
  std::int64_t R = 1;
  std::int64_t onset = -1;
  /// max(0, 752 - 3R).
  std::int64_t claimed = 0;
  std::int64_t scanned_to = 0;
  /// (J_b - L_f)^2 - S_f = (6/847)((g + 3R - 376)^2 - 141479.25 + 1936 R) in g.
  bool identity = false;

  [[nodiscard]] bool ok() const { return onset >= 0 && onset <= claimed && identity; }

  friend bool operator==(const CrossoverJReport&, const CrossoverJReport&) = default;
};

/// Scans g in [0, max(0, 752 - 3R) + margin].  Requires R >= 1.
CrossoverJReport find_crossover_J(std::int64_t R, std::int64_t margin = 50);

/// All (g, R) with g >= 0, R >= 1, g + 3R <= max_sum and floor(J(g, R)) > 4g + 2R + 1.
std::vector<std::pair<std::int64_t, std::int64_t>> check_zl_finite(std::int64_t max_sum);

struct CuspidalReport {
  std::int64_t g_from = 2, g_to = 2000;
  /// g where max_allowed_N(g, I) > 4g + 1.
  std::vector<std::int64_t> failures;
  std::int64_t refined_g1 = 0;

  [[nodiscard]] bool ok() const { return failures.empty() && refined_g1 == 5; }

  friend bool operator==(const CuspidalReport&, const CuspidalReport&) = default;
};
CuspidalReport check_cuspidal_corollary(std::int64_t g_from = 2, std::int64_t g_to = 2000);

struct LinearEnvelope {
  std::string label;
  Rational slope, intercept;

  friend bool operator==(const LinearEnvelope&, const LinearEnvelope&) = default;
};
/// 3g + 3/2, 2.4g + 6, 2.2g + 20.
const std::vector<LinearEnvelope>& linear_envelopes();

struct EnvelopeValidity {
  LinearEnvelope envelope;
  /// Maximal runs [a, b] of g where the envelope is >= I(g).
  std::vector<std::pair<std::int64_t, std::int64_t>> valid_runs;
  std::vector<std::int64_t> invalid;
  /// Smallest g0 with validity on all of [g0, g_max], or -1.
  std::int64_t onset = -1;

  friend bool operator==(const EnvelopeValidity&, const EnvelopeValidity&) = default;
};

struct EnvelopeReport {
  std::int64_t g_max = 746;
  std::vector<EnvelopeValidity> envelopes;
  /// g where the maximum of the three is below I(g).
  std::vector<std::int64_t> max_failures;

  [[nodiscard]] bool ok() const { return max_failures.empty(); }

  friend bool operator==(const EnvelopeReport&, const EnvelopeReport&) = default;
};
EnvelopeReport check_envelopes(std::int64_t g_max = 746);

struct ExchangeReport {
  std::int64_t limit = 4;
  std::size_t checked = 0;
  std::optional<std::tuple<std::int64_t, std::int64_t, std::int64_t>> counterexample;
  /// Smallest value of the form over the scanned triples.
  std::int64_t minimum = 0;

  [[nodiscard]] bool ok() const { return checked > 0 && !counterexample; }

  friend bool operator==(const ExchangeReport&, const ExchangeReport&) = default;
};
/// z x (x - z) + z y (z - y) + x y (y - x) > 0 for 2 <= x < y < z <= limit.
ExchangeReport check_exchange(std::int64_t limit);

}  // namespace zl

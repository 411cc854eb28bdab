#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zl/bounds.hpp"
#include "zl/global_model.hpp"

namespace zl {

enum class SearchTheorem { One, Two };

/// Finite box of (g, R, N, p, q) to scan.  Theorem One scans cuspidal
/// configurations (R = 0) against I_a..I_f unless `multibranch` is set;
/// Theorem Two scans R in [1, R_max] against J_a..J_f.
struct SearchBox {
  SearchTheorem theorem = SearchTheorem::One;
  std::int64_t g_max = 1;
  std::int64_t R_max = 2;
  std::int64_t N_max = 10;
  std::int64_t p_max = 20;
  /// q ranges over [p + 1, p + q_slack].
  std::int64_t q_slack = 8;
  /// Bit i set: the i-th bound of the family (a..f) is not imposed.
  std::uint8_t drop_mask = 0;
  /// Theorem One only: allow multi-branch points with R in [0, R_max].
  bool multibranch = false;
  /// Refuse to start when the pre-flight count exceeds this (0: no cap).
  std::uint64_t budget = 0;
  unsigned threads = 1;
  /// Keep at most this many configurations per (g, R, N), in scan order
  /// (0: keep all).  Counting is unaffected.
  std::uint64_t keep_per_task = 0;

  /// Throws PreconditionError on empty or malformed boxes.
  void validate() const;
};

inline constexpr std::uint8_t kDropAll = 0x3f;

/// One multiset of point types (m_i, r_i) with its best codimension assignment.
struct FeasibleConfig {
  std::int64_t g = 0, R = 0, N = 0, p = 0, q = 0, p_prime = 1;
  /// (m, r) in nonincreasing order.
  std::vector<std::pair<std::int64_t, std::int64_t>> types;
  /// Smallest D - E over all codimension assignments allowed by the budget.
  std::int64_t delta_min = 0;
  /// A concrete profile attaining delta_gap(witness) <= 0.
  CurveProfile witness;

  friend bool operator==(const FeasibleConfig&, const FeasibleConfig&) = default;
};

struct FeasibilityReport {
  std::vector<FeasibleConfig> configs;
  /// Multisets of point types visited.
  std::uint64_t scanned_count = 0;
  /// All feasible multisets, including those not kept.
  std::uint64_t feasible_count = 0;

  friend bool operator==(const FeasibilityReport&, const FeasibilityReport&) = default;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t estimate, std::uint64_t budget);
  [[nodiscard]] std::uint64_t estimate() const { return estimate_; }

 private:
  std::uint64_t estimate_;
};

/// Exact number of multisets feasibility_search would visit.
std::uint64_t estimate_search(const SearchBox& box);

/// Enumerates every N-point multiset of types (m, r), m >= max(r, 2), with
/// sum (r - 1) = R and sum (m - r) <= p + 2g - 1, for each (g, R, N, p, q)
/// in the box whose N satisfies the non-dropped bounds.  Each point starts at
/// its least codimension 2m - r - 2 and least excess; the remaining
/// codimension budget goes wholly to the largest of max m_i and p'.  A
/// multiset is reported when the resulting D - E is <= 0.
///
/// Throws BudgetExceeded before scanning when the box is over budget.
FeasibilityReport feasibility_search(const SearchBox& box);

}  // namespace zl

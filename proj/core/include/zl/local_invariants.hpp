#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zl/errors.hpp"
#include "zl/rational.hpp"

namespace zl {

/// One analytic branch of a singular point, described numerically.
///
/// `ext_nu` is the branch's external codimension.  A smooth branch has
/// ext_nu = -1, i.e. y-codimension zero; this is what makes the composition
/// rule reproduce ext_nu = n - 2 for the ordinary n-tuple point.
struct BranchModel {
  std::int64_t m = 1;
  std::int64_t ext_nu = -1;
  std::int64_t two_delta = 0;

  /// nu_i = ext_nu - m + 2.
  [[nodiscard]] std::int64_t y_codim() const { return ext_nu - m + 2; }
  /// 2 delta_i <= m_i nu_i.
  [[nodiscard]] bool admissible() const { return two_delta <= m * y_codim(); }
};

/// Symmetric r x r table of integers, diagonal unused.
class SymmetricTable {
 public:
  SymmetricTable() = default;
  explicit SymmetricTable(std::size_t size, std::int64_t fill = 0);

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] std::int64_t at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, std::int64_t value);

  /// Table with rows and columns permuted: result(i, j) = at(order[i], order[j]).
  [[nodiscard]] SymmetricTable permuted(std::span<const std::size_t> order) const;

 private:
  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const;
  std::size_t size_ = 0;
  std::vector<std::int64_t> upper_;
};

struct TripleViolation {
  std::size_t i, j, k;
};

/// Tangency codimensions nu_ij between branches.  The triple rule: in every
/// triple of branches the minimum of the three pairwise values occurs twice.
class TangencyTable : public SymmetricTable {
 public:
  using SymmetricTable::SymmetricTable;
  explicit TangencyTable(SymmetricTable t) : SymmetricTable(std::move(t)) {}

  [[nodiscard]] std::optional<TripleViolation> triple_violation() const;
  [[nodiscard]] bool satisfies_triple_rule() const { return !triple_violation().has_value(); }

  /// sum_{j=2..r} max_{i<j} nu_ij (0-based: j = 1..r-1).
  [[nodiscard]] std::int64_t prefix_max_sum() const;
};

enum class ExcessClass { CuspMult2, CuspGeneral, MultiBranch };

/// 5/6, 1/2, 0.
Rational excess_lower_bound(ExcessClass c);
/// The cuspidal bound for m >= 3 is strict (eta > 1/2); the others are not.
bool excess_bound_strict(ExcessClass c);

/// Numeric profile of one singular point.
struct SingularPointModel {
  std::int64_t m = 2;
  std::int64_t r = 1;
  std::int64_t ext_nu = 1;
  std::optional<std::int64_t> two_delta;

  [[nodiscard]] ExcessClass excess_class() const;
  [[nodiscard]] Rational eta_min() const { return excess_lower_bound(excess_class()); }

  /// Throws PreconditionError unless m >= r >= 1, m >= 2, and
  /// ext_nu >= r - 2 for multi-branch points.
  void validate() const;

  friend bool operator==(const SingularPointModel&, const SingularPointModel&) = default;
};

/// mu = (n-1)(m-1) + gcd(n, m) - 1 + mu'.  Requires 2 <= n < m, mu' >= 0.
std::int64_t milnor_decompose(std::int64_t n, std::int64_t m, std::int64_t mu_prime);

/// The ordinary n-tuple point: m = r = n, ext_nu = n - 2, 2 delta = n^2 - n.
SingularPointModel ordinary_point(std::int64_t n);

struct BrnReport {
  std::int64_t rhs = 0;
  /// 2 delta <= rhs, when the point carries 2 delta.
  std::optional<bool> holds;
};

/// m (ext_nu - m + r + 1); the r = 1 and r = 2 cases are the classical
/// single- and double-branch bounds.
BrnReport brn_rhs(const SingularPointModel& point);

/// Composition failures carry the offending branch indices (0-based).
class CompositionError : public PreconditionError {
 public:
  CompositionError(std::string constraint, const std::string& detail, std::vector<std::size_t> indices)
      : PreconditionError(std::move(constraint), detail), indices_(std::move(indices)) {}
  [[nodiscard]] const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  std::vector<std::size_t> indices_;
};

struct Composition {
  SingularPointModel point;
  /// ext_nu obtained when smooth branches are entered with ext_nu = 0
  /// instead of -1.  Differs from point.ext_nu exactly when there are
  /// smooth branches; kept for comparison with the clamped reading.
  std::int64_t ext_nu_smooth_as_zero = 0;
  bool conventions_differ = false;
};

/// Builds the multi-branch point from its branches:
///   m = sum m_i
///   ext_nu = sum ext_nu_i + sum_{j>=2} max_{i<j} nu_ij + 2r - 2
///   2 delta = sum 2 delta_i + 2 sum_{i<j} eps_ij
/// Requires eps_ij <= m_i (nu_j + nu_ij + 1) and <= m_j (nu_i + nu_ij + 1),
/// eps_ij >= 1, admissible branches, and the triple rule.
Composition compose_multibranch(std::span<const BranchModel> branches, const TangencyTable& tangency,
                                const SymmetricTable& intersections);

/// Largest intersection index permitted between branches i and j.
std::int64_t max_intersection(const BranchModel& bi, const BranchModel& bj, std::int64_t nu_ij);

struct S12Report {
  std::int64_t lhs = 0;  // sum_{i<r} nu_{i r}
  std::int64_t rhs = 0;  // sum_{j>=2} max_{i<j} nu_ij
  bool holds = false;
  /// Branch order used: the last two positions realise max_{i<r} nu_{ir}.
  std::vector<std::size_t> order;
};

/// Evaluates both sides of sum_{i<r} nu_ir <= sum_j max_{i<j} nu_ij after
/// moving the branch closest to the last one into position r-1.
/// Throws CompositionError if the triple rule fails.
S12Report check_s12(const TangencyTable& tangency);

/// mu' <= n' nu'.
std::int64_t mu_prime_bound(std::int64_t n_prime, std::int64_t nu_prime);

/// z x (x - z) + z y (z - y) + x y (y - x).
std::int64_t exchange_form(std::int64_t x, std::int64_t y, std::int64_t z);

}  // namespace zl

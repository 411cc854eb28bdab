#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zl/bounds.hpp"
#include "zl/rational.hpp"

namespace zl {

enum class ChainTheorem { One, Two };
enum class ChainCase { Finite, Infinity };

/// Inputs to a chain replay.  Unset fields take the extremal values the proof
/// substitutes (q = p + 1 or p + p', s = 0, A = B = 2, m_1 at its bound, ...).
struct ChainParams {
  std::int64_t g = 0;
  std::int64_t R = 0;
  std::int64_t N = 1;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> p_prime;
  /// Unibranched points of multiplicity 2 and 3.
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> s;
  /// k[j] = number of ordinary j-tuple points.
  std::map<std::int64_t, std::int64_t> k;
  std::optional<std::int64_t> A;
  std::optional<std::int64_t> B;
  std::optional<std::int64_t> m1;
};

/// How a step relates to its parent.
enum class StepRelation {
  Define,       // no claim
  UpperBound,   // value >= parent
  LowerBound,   // value <= parent
  EndpointMin,  // parent >= min over the sibling endpoints sharing this parent
};

struct ChainStep {
  std::string label;
  Rational value;
  std::optional<std::size_t> parent;
  StepRelation relation = StepRelation::Define;
  /// Whether the lemma that justifies the relation applies at these parameters.
  bool hypothesis_holds = true;
};

struct ChainTrace {
  ChainTheorem theorem = ChainTheorem::One;
  ChainCase chain_case = ChainCase::Finite;
  std::vector<ChainStep> steps;
  /// Final lower bound(s) on D - E positive.
  bool verdict = false;
  /// Infinity chains only: both p'-endpoints positive at the evaluated p,
  /// without the substitution p -> its lower bound.
  std::optional<bool> floor_verdict;

  [[nodiscard]] const ChainStep* find(std::string_view label) const;
  /// Throws std::out_of_range for an unknown label.
  [[nodiscard]] const Rational& value(std::string_view label) const;

  friend bool operator==(const ChainTrace&, const ChainTrace&) = default;
};

bool operator==(const ChainStep& a, const ChainStep& b);

/// Cuspidal curves, a finite singular point dominates.  Steps:
/// D, ext_nu1, E, Delta, E1, E2, Delta2, Delta3, Delta4, Delta5.
ChainTrace thm1_finite_chain(const ChainParams& params);
/// Cuspidal curves, p' nu'_inf dominates.  Steps:
/// D, E, Delta, E6, Delta6, Delta7, Delta7(3), Delta8, Delta9, Delta10.
ChainTrace thm1_infinity_chain(const ChainParams& params);
/// Multi-branch curves, a finite singular point dominates.  Steps:
/// D, ext_nu1, E, Delta, E1, E2, E3, E4, Delta4, Delta5, Delta6.
ChainTrace thm2_finite_chain(const ChainParams& params);
/// Multi-branch curves, p' nu'_inf dominates.  Steps:
/// D, E, Delta, E7, E8, E9, Delta9, Delta10, Delta10(3), Delta11, Delta12, Delta13.
ChainTrace thm2_infinity_chain(const ChainParams& params);

ChainTrace run_chain(ChainTheorem theorem, ChainCase chain_case, const ChainParams& params);

/// Indices of steps whose relation fails although the hypothesis holds.
std::vector<std::size_t> check_trace(const ChainTrace& trace);

/// The six closed-form endpoints and the bound each one encodes.
enum class Endpoint { T1Delta5, T1Delta8, T1Delta10, T2Delta6, T2Delta11, T2Delta13 };
inline constexpr Endpoint kEndpoints[] = {Endpoint::T1Delta5,  Endpoint::T1Delta8,  Endpoint::T1Delta10,
                                          Endpoint::T2Delta6,  Endpoint::T2Delta11, Endpoint::T2Delta13};

std::string_view name(Endpoint e);
BoundKind endpoint_kind(Endpoint e);
/// c with endpoint = c ((N - L)^2 - S) where the bound is L + sqrt(S).
Rational endpoint_scale(Endpoint e);
/// The endpoint obtained by substituting the chain's boundary values.
Rational endpoint_value(Endpoint e, const Rational& g, const Rational& R, const Rational& N);

struct EndpointCertificate {
  Endpoint endpoint;
  /// endpoint(g, R, N) == c ((N - L(g, R))^2 - S(g, R)) as polynomials.
  bool identity = false;
  /// Grid points with N > L where the sign of the endpoint was compared
  /// with holds(kind, N).
  std::size_t grid_points = 0;
  std::size_t grid_mismatches = 0;

  [[nodiscard]] bool ok() const { return identity && grid_points > 0 && grid_mismatches == 0; }
};

/// Certifies the completed-square form and compares signs on `grid_size`
/// integer points (g, R, N) in the endpoint's validity regime.
EndpointCertificate certify_endpoint(Endpoint e, std::size_t grid_size = 200);

}  // namespace zl

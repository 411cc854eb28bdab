#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "report_io.hpp"
#include "zl/chain_lemmas.hpp"
#include "zl/feasibility.hpp"
#include "zl/proof_chains.hpp"

namespace zl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::int64_t kExpectedCrossoverI = 747;

struct CommandResult {
  io::Document doc;
  int exit_code = kExitOk;
};

struct BoundsOptions {
  std::int64_t g = 0;
  std::optional<std::int64_t> R;
  int precision = 6;
};
CommandResult cmd_bounds(const BoundsOptions& opt);

enum class VerifyTarget { CrossoverI, CrossoverJ, Zl, Envelopes, Exchange, Lemmas };

struct VerifyOptions {
  VerifyTarget target = VerifyTarget::CrossoverI;
  int precision = 6;
  std::int64_t scan_to = 2000;                  // crossover-i
  std::int64_t r_min = 1, r_max = 250;          // crossover-j
  std::int64_t margin = 50;                     // crossover-j
  std::int64_t max_sum = 752;                   // zl
  std::int64_t g_max = 746;                     // envelopes
  std::int64_t limit = 60;                      // exchange
  LemmaGrid grid;                               // lemmas
};
CommandResult cmd_verify(const VerifyOptions& opt);

struct ChainOptions {
  ChainTheorem theorem = ChainTheorem::One;
  ChainCase chain_case = ChainCase::Finite;
  ChainParams params;
  int precision = 6;
};
CommandResult cmd_chain(const ChainOptions& opt);

struct SearchOptions {
  SearchBox box;
  /// Configurations listed in the output, after filtering.
  std::size_t show = 50;
  /// Only list configurations whose g, R, N, p or q equal these values.
  std::map<std::string, std::int64_t> only;
};
CommandResult cmd_search(const SearchOptions& opt);

/// "all", or a comma list of letters a..f or bound names (Ia, Jc, ...).
/// Throws PreconditionError on anything else.
std::uint8_t parse_drop(const std::string& text);

/// "g=0,N=6" -> {g: 0, N: 6}.  Keys are g, R, N, p, q.
std::map<std::string, std::int64_t> parse_only(const std::string& text);

}  // namespace zl::cli

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "zl/chain_lemmas.hpp"
#include "zl/feasibility.hpp"
#include "zl/global_model.hpp"
#include "zl/proof_chains.hpp"
#include "zl/rational.hpp"
#include "zl/surd.hpp"
#include "zl/verifier.hpp"

namespace zl::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

enum class Format { Table, Csv, Json };

/// "table", "csv" or "json"; nullopt otherwise.
std::optional<Format> parse_format(std::string_view text);

/// The explicit flag wins, then $ZLCHECK_FORMAT, then table.  Throws
/// PreconditionError for an unknown name from either source.
Format resolve_format(const std::optional<std::string>& flag);

/// Exact text of a surd, collapsed to "num/den" when the radical is rational.
std::string exact_text(const Surd& s);

/// One emitted line.  CSV columns, in this order:
///   section  group the row belongs to (a bound family, "trace", "summary", ...)
///   item     what the row describes
///   exact    exact value as "num/den", "L + sqrt(S)" or an integer
///   decimal  display-only rendering of `exact`, may be empty
///   status   verdict or annotation ("pass", "FAIL", "N >= 7", ...)
struct Row {
  std::string section, item, exact, decimal, status;
};

/// Output of one command: rows for table/CSV and a structured body for JSON.
struct Document {
  std::string command;
  std::vector<Row> rows;
  json data = json::object();
};

void render(const Document& doc, Format format, std::ostream& os);

}  // namespace zl::io

// nlohmann serializers, found by argument-dependent lookup.
namespace zl {

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);
void to_json(nlohmann::json& j, const Surd& s);
void from_json(const nlohmann::json& j, Surd& s);

void to_json(nlohmann::json& j, const ChainStep& s);
void from_json(const nlohmann::json& j, ChainStep& s);
void to_json(nlohmann::json& j, const ChainTrace& t);
void from_json(const nlohmann::json& j, ChainTrace& t);

void to_json(nlohmann::json& j, const SingularPointModel& p);
void from_json(const nlohmann::json& j, SingularPointModel& p);
void to_json(nlohmann::json& j, const CurveProfile& c);
void from_json(const nlohmann::json& j, CurveProfile& c);
void to_json(nlohmann::json& j, const FeasibleConfig& c);
void from_json(const nlohmann::json& j, FeasibleConfig& c);
void to_json(nlohmann::json& j, const FeasibilityReport& r);
void from_json(const nlohmann::json& j, FeasibilityReport& r);

void to_json(nlohmann::json& j, const TailCertificate& t);
void from_json(const nlohmann::json& j, TailCertificate& t);
void to_json(nlohmann::json& j, const RootBracket& b);
void from_json(const nlohmann::json& j, RootBracket& b);
void to_json(nlohmann::json& j, const CrossoverIReport& r);
void from_json(const nlohmann::json& j, CrossoverIReport& r);
void to_json(nlohmann::json& j, const CrossoverJReport& r);
void from_json(const nlohmann::json& j, CrossoverJReport& r);
void to_json(nlohmann::json& j, const CuspidalReport& r);
void from_json(const nlohmann::json& j, CuspidalReport& r);
void to_json(nlohmann::json& j, const LinearEnvelope& e);
void from_json(const nlohmann::json& j, LinearEnvelope& e);
void to_json(nlohmann::json& j, const EnvelopeValidity& v);
void from_json(const nlohmann::json& j, EnvelopeValidity& v);
void to_json(nlohmann::json& j, const EnvelopeReport& r);
void from_json(const nlohmann::json& j, EnvelopeReport& r);
void to_json(nlohmann::json& j, const ExchangeReport& r);
void from_json(const nlohmann::json& j, ExchangeReport& r);
void to_json(nlohmann::json& j, const LemmaResult& r);
void from_json(const nlohmann::json& j, LemmaResult& r);
void to_json(nlohmann::json& j, const LemmaReport& r);
void from_json(const nlohmann::json& j, LemmaReport& r);

}  // namespace zl

#include "report_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "zl/errors.hpp"

namespace zl::io {

std::optional<Format> parse_format(std::string_view text) {
  if (text == "table") return Format::Table;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  return std::nullopt;
}

Format resolve_format(const std::optional<std::string>& flag) {
  if (flag) {
    if (auto f = parse_format(*flag)) return *f;
    throw PreconditionError("format", "unknown output format '" + *flag + "'");
  }
  if (const char* env = std::getenv("ZLCHECK_FORMAT"); env && *env) {
    if (auto f = parse_format(env)) return *f;
    throw PreconditionError("ZLCHECK_FORMAT", std::string("unknown output format '") + env + "'");
  }
  return Format::Table;
}

std::string exact_text(const Surd& s) {
  if (s.radicand().is_zero()) return s.linear().str();
  Rational root;
  if (rational_sqrt(s.radicand(), root)) return (s.linear() + root).str();
  return s.str();
}

namespace {

std::string csv_field(const std::string& f) {
  if (f.find_first_of(",\"\n") == std::string::npos) return f;
  std::string out = "\"";
  for (char c : f) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_table(const Document& doc, std::ostream& os) {
  std::size_t w_item = 4, w_exact = 5, w_dec = 7;
  for (const Row& r : doc.rows) {
    w_item = std::max(w_item, r.item.size());
    w_exact = std::max(w_exact, r.exact.size());
    w_dec = std::max(w_dec, r.decimal.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  std::string section;
  bool first = true;
  for (const Row& r : doc.rows) {
    if (first || r.section != section) {
      if (!first) os << '\n';
      os << "[" << r.section << "]\n";
      section = r.section;
      first = false;
    }
    os << "  " << pad(r.item, w_item) << "  " << pad(r.exact, w_exact) << "  " << pad(r.decimal, w_dec) << "  "
       << r.status << '\n';
  }
}

}  // namespace

void render(const Document& doc, Format format, std::ostream& os) {
  switch (format) {
    case Format::Table:
      render_table(doc, os);
      break;
    case Format::Csv:
      os << "section,item,exact,decimal,status\n";
      for (const Row& r : doc.rows)
        os << csv_field(r.section) << ',' << csv_field(r.item) << ',' << csv_field(r.exact) << ','
           << csv_field(r.decimal) << ',' << csv_field(r.status) << '\n';
      break;
    case Format::Json: {
      json out = doc.data;
      out["schema"] = kSchemaVersion;
      out["command"] = doc.command;
      os << out.dump(2) << '\n';
      break;
    }
  }
}

}  // namespace zl::io

namespace zl {

using nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

BoundKind kind_from(const json& j) {
  const auto s = j.get<std::string>();
  if (auto k = bound_from_name(s)) return *k;
  throw json::other_error::create(501, "unknown bound kind " + s, &j);
}

std::string_view relation_name(StepRelation r) {
  switch (r) {
    case StepRelation::Define: return "define";
    case StepRelation::UpperBound: return "upper";
    case StepRelation::LowerBound: return "lower";
    case StepRelation::EndpointMin: return "endpoint-min";
  }
  return "define";
}

StepRelation relation_from(const std::string& s) {
  if (s == "upper") return StepRelation::UpperBound;
  if (s == "lower") return StepRelation::LowerBound;
  if (s == "endpoint-min") return StepRelation::EndpointMin;
  return StepRelation::Define;
}

}  // namespace

void to_json(json& j, const Rational& r) { j = r.str(); }
void from_json(const json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

void to_json(json& j, const Surd& s) { j = json{{"linear", s.linear()}, {"radicand", s.radicand()}}; }
void from_json(const json& j, Surd& s) { s = Surd(j.at("linear").get<Rational>(), j.at("radicand").get<Rational>()); }

void to_json(json& j, const ChainStep& s) {
  j = json{{"label", s.label},
           {"value", s.value},
           {"parent", opt(s.parent)},
           {"relation", relation_name(s.relation)},
           {"hypothesis_holds", s.hypothesis_holds}};
}
void from_json(const json& j, ChainStep& s) {
  s.label = j.at("label").get<std::string>();
  s.value = j.at("value").get<Rational>();
  s.parent = get_opt<std::size_t>(j, "parent");
  s.relation = relation_from(j.at("relation").get<std::string>());
  s.hypothesis_holds = j.at("hypothesis_holds").get<bool>();
}

void to_json(json& j, const ChainTrace& t) {
  j = json{{"theorem", t.theorem == ChainTheorem::One ? 1 : 2},
           {"case", t.chain_case == ChainCase::Finite ? "finite" : "infinity"},
           {"steps", t.steps},
           {"verdict", t.verdict},
           {"floor_verdict", opt(t.floor_verdict)}};
}
void from_json(const json& j, ChainTrace& t) {
  t.theorem = j.at("theorem").get<int>() == 1 ? ChainTheorem::One : ChainTheorem::Two;
  t.chain_case = j.at("case").get<std::string>() == "finite" ? ChainCase::Finite : ChainCase::Infinity;
  t.steps = j.at("steps").get<std::vector<ChainStep>>();
  t.verdict = j.at("verdict").get<bool>();
  t.floor_verdict = get_opt<bool>(j, "floor_verdict");
}

void to_json(json& j, const SingularPointModel& p) {
  j = json{{"m", p.m}, {"r", p.r}, {"ext_nu", p.ext_nu}, {"two_delta", opt(p.two_delta)}};
}
void from_json(const json& j, SingularPointModel& p) {
  p.m = j.at("m").get<std::int64_t>();
  p.r = j.at("r").get<std::int64_t>();
  p.ext_nu = j.at("ext_nu").get<std::int64_t>();
  p.two_delta = get_opt<std::int64_t>(j, "two_delta");
}

void to_json(json& j, const CurveProfile& c) {
  j = json{{"g", c.g},           {"p", c.p},
           {"q", c.q},           {"p_prime", c.p_prime},
           {"points", c.points}, {"nu_prime_inf", c.nu_prime_inf},
           {"mu_prime_inf", opt(c.mu_prime_inf)}};
}
void from_json(const json& j, CurveProfile& c) {
  c.g = j.at("g").get<std::int64_t>();
  c.p = j.at("p").get<std::int64_t>();
  c.q = j.at("q").get<std::int64_t>();
  c.p_prime = j.at("p_prime").get<std::int64_t>();
  c.points = j.at("points").get<std::vector<SingularPointModel>>();
  c.nu_prime_inf = j.at("nu_prime_inf").get<std::int64_t>();
  c.mu_prime_inf = get_opt<std::int64_t>(j, "mu_prime_inf");
}

void to_json(json& j, const FeasibleConfig& c) {
  j = json{{"g", c.g},         {"R", c.R},       {"N", c.N},
           {"p", c.p},         {"q", c.q},       {"p_prime", c.p_prime},
           {"types", c.types}, {"delta_min", c.delta_min}, {"witness", c.witness}};
}
void from_json(const json& j, FeasibleConfig& c) {
  c.g = j.at("g").get<std::int64_t>();
  c.R = j.at("R").get<std::int64_t>();
  c.N = j.at("N").get<std::int64_t>();
  c.p = j.at("p").get<std::int64_t>();
  c.q = j.at("q").get<std::int64_t>();
  c.p_prime = j.at("p_prime").get<std::int64_t>();
  c.types = j.at("types").get<std::vector<std::pair<std::int64_t, std::int64_t>>>();
  c.delta_min = j.at("delta_min").get<std::int64_t>();
  c.witness = j.at("witness").get<CurveProfile>();
}

void to_json(json& j, const FeasibilityReport& r) {
  j = json{{"configs", r.configs}, {"scanned_count", r.scanned_count}, {"feasible_count", r.feasible_count}};
}
void from_json(const json& j, FeasibilityReport& r) {
  r.configs = j.at("configs").get<std::vector<FeasibleConfig>>();
  r.scanned_count = j.at("scanned_count").get<std::uint64_t>();
  r.feasible_count = j.at("feasible_count").get<std::uint64_t>();
}

void to_json(json& j, const TailCertificate& t) {
  j = json{{"competitor", name(t.competitor)}, {"linear_part", t.linear_part}, {"squared_part", t.squared_part}};
}
void from_json(const json& j, TailCertificate& t) {
  t.competitor = kind_from(j.at("competitor"));
  t.linear_part = j.at("linear_part").get<bool>();
  t.squared_part = j.at("squared_part").get<bool>();
}

void to_json(json& j, const RootBracket& b) {
  j = json{{"root", b.root}, {"lo", b.lo}, {"hi", b.hi}, {"inside", b.inside}};
}
void from_json(const json& j, RootBracket& b) {
  b.root = j.at("root").get<Surd>();
  b.lo = j.at("lo").get<std::int64_t>();
  b.hi = j.at("hi").get<std::int64_t>();
  b.inside = j.at("inside").get<bool>();
}

void to_json(json& j, const CrossoverIReport& r) {
  j = json{{"onset", r.onset},
           {"scanned_to", r.scanned_to},
           {"previous_dominated_by_f", r.previous_dominated_by_f},
           {"onset_dominated_by_b", r.onset_dominated_by_b},
           {"tails", r.tails},
           {"printed_root", r.printed_root},
           {"corrected_root", r.corrected_root},
           {"printed_identity", r.printed_identity},
           {"corrected_identity", r.corrected_identity}};
}
void from_json(const json& j, CrossoverIReport& r) {
  r.onset = j.at("onset").get<std::int64_t>();
  r.scanned_to = j.at("scanned_to").get<std::int64_t>();
  r.previous_dominated_by_f = j.at("previous_dominated_by_f").get<bool>();
  r.onset_dominated_by_b = j.at("onset_dominated_by_b").get<bool>();
  r.tails = j.at("tails").get<std::vector<TailCertificate>>();
  r.printed_root = j.at("printed_root").get<RootBracket>();
  r.corrected_root = j.at("corrected_root").get<RootBracket>();
  r.printed_identity = j.at("printed_identity").get<bool>();
  r.corrected_identity = j.at("corrected_identity").get<bool>();
}

void to_json(json& j, const CrossoverJReport& r) {
  j = json{{"R", r.R}, {"onset", r.onset}, {"claimed", r.claimed}, {"scanned_to", r.scanned_to}, {"identity", r.identity}};
}
void from_json(const json& j, CrossoverJReport& r) {
  r.R = j.at("R").get<std::int64_t>();
  r.onset = j.at("onset").get<std::int64_t>();
  r.claimed = j.at("claimed").get<std::int64_t>();
  r.scanned_to = j.at("scanned_to").get<std::int64_t>();
  r.identity = j.at("identity").get<bool>();
}

void to_json(json& j, const CuspidalReport& r) {
  j = json{{"g_from", r.g_from}, {"g_to", r.g_to}, {"failures", r.failures}, {"refined_g1", r.refined_g1}};
}
void from_json(const json& j, CuspidalReport& r) {
  r.g_from = j.at("g_from").get<std::int64_t>();
  r.g_to = j.at("g_to").get<std::int64_t>();
  r.failures = j.at("failures").get<std::vector<std::int64_t>>();
  r.refined_g1 = j.at("refined_g1").get<std::int64_t>();
}

void to_json(json& j, const LinearEnvelope& e) {
  j = json{{"label", e.label}, {"slope", e.slope}, {"intercept", e.intercept}};
}
void from_json(const json& j, LinearEnvelope& e) {
  e.label = j.at("label").get<std::string>();
  e.slope = j.at("slope").get<Rational>();
  e.intercept = j.at("intercept").get<Rational>();
}

void to_json(json& j, const EnvelopeValidity& v) {
  j = json{{"envelope", v.envelope}, {"valid_runs", v.valid_runs}, {"invalid", v.invalid}, {"onset", v.onset}};
}
void from_json(const json& j, EnvelopeValidity& v) {
  v.envelope = j.at("envelope").get<LinearEnvelope>();
  v.valid_runs = j.at("valid_runs").get<std::vector<std::pair<std::int64_t, std::int64_t>>>();
  v.invalid = j.at("invalid").get<std::vector<std::int64_t>>();
  v.onset = j.at("onset").get<std::int64_t>();
}

void to_json(json& j, const EnvelopeReport& r) {
  j = json{{"g_max", r.g_max}, {"envelopes", r.envelopes}, {"max_failures", r.max_failures}};
}
void from_json(const json& j, EnvelopeReport& r) {
  r.g_max = j.at("g_max").get<std::int64_t>();
  r.envelopes = j.at("envelopes").get<std::vector<EnvelopeValidity>>();
  r.max_failures = j.at("max_failures").get<std::vector<std::int64_t>>();
}

void to_json(json& j, const ExchangeReport& r) {
  j = json{{"limit", r.limit}, {"checked", r.checked}, {"minimum", r.minimum}, {"counterexample", nullptr}};
  if (r.counterexample) {
    const auto& [x, y, z] = *r.counterexample;
    j["counterexample"] = json::array({x, y, z});
  }
}
void from_json(const json& j, ExchangeReport& r) {
  r.limit = j.at("limit").get<std::int64_t>();
  r.checked = j.at("checked").get<std::size_t>();
  r.minimum = j.at("minimum").get<std::int64_t>();
  r.counterexample.reset();
  if (const auto& c = j.at("counterexample"); !c.is_null())
    r.counterexample = std::make_tuple(c.at(0).get<std::int64_t>(), c.at(1).get<std::int64_t>(),
                                       c.at(2).get<std::int64_t>());
}

void to_json(json& j, const LemmaResult& r) {
  j = json{{"name", r.name},
           {"claim", r.claim},
           {"checked", r.checked},
           {"counterexamples", r.counterexamples},
           {"zero_steps", r.zero_steps},
           {"examples", r.examples}};
}
void from_json(const json& j, LemmaResult& r) {
  r.name = j.at("name").get<std::string>();
  r.claim = j.at("claim").get<std::string>();
  r.checked = j.at("checked").get<std::size_t>();
  r.counterexamples = j.at("counterexamples").get<std::size_t>();
  r.zero_steps = j.at("zero_steps").get<std::size_t>();
  r.examples = j.at("examples").get<std::vector<std::string>>();
}

void to_json(json& j, const LemmaReport& r) {
  j = json{{"lemmas", r.lemmas},
           {"delta12_ge_delta13", r.delta12_ge_delta13},
           {"delta12_le_delta13", r.delta12_le_delta13},
           {"delta12_points", r.delta12_points}};
}
void from_json(const json& j, LemmaReport& r) {
  r.lemmas = j.at("lemmas").get<std::vector<LemmaResult>>();
  r.delta12_ge_delta13 = j.at("delta12_ge_delta13").get<std::size_t>();
  r.delta12_le_delta13 = j.at("delta12_le_delta13").get<std::size_t>();
  r.delta12_points = j.at("delta12_points").get<std::size_t>();
}

}  // namespace zl

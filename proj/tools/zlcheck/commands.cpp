#include "commands.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zl/bounds.hpp"
#include "zl/errors.hpp"
#include "zl/global_model.hpp"
#include "zl/local_invariants.hpp"
#include "zl/verifier.hpp"

namespace zl::cli {

using io::json;
using io::Row;

namespace {

std::string pass(bool ok) { return ok ? "pass" : "FAIL"; }
std::string yes(bool b) { return b ? "true" : "false"; }

void require(bool ok, const std::string& constraint, const std::string& detail) {
  if (!ok) throw PreconditionError(constraint, detail);
}

json surd_json(const Surd& s, int precision) {
  json j = s;
  j["exact"] = io::exact_text(s);
  j["decimal"] = s.decimal(precision);
  return j;
}

// "0..5, 9" from a sorted list of integers.
std::string runs_text(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t k = i;
    while (k + 1 < v.size() && v[k + 1] == v[k] + 1) ++k;
    if (i > 0) os << ", ";
    os << v[i];
    if (k > i) os << ".." << v[k];
    i = k + 1;
  }
  return os.str();
}

std::string types_text(const std::vector<std::pair<std::int64_t, std::int64_t>>& types) {
  std::ostringstream os;
  for (std::size_t i = 0; i < types.size();) {
    std::size_t k = i;
    while (k < types.size() && types[k] == types[i]) ++k;
    if (i > 0) os << ' ';
    os << '(' << types[i].first << ',' << types[i].second << ')';
    if (k - i > 1) os << '^' << (k - i);
    i = k;
  }
  return os.str();
}

void family_rows(CommandResult& out, Family fam, const GenusProfile& gp, int precision) {
  const std::string sec = fam == Family::I ? "I" : "J";
  json fj = json::object();
  for (BoundKind k : members(fam)) {
    const Surd v = eval_bound(k, gp);
    const std::int64_t t = threshold(k, gp);
    out.doc.rows.push_back({sec, std::string(name(k)), io::exact_text(v), v.decimal(precision),
                            "N >= " + std::to_string(t)});
    json e = surd_json(v, precision);
    e["threshold"] = t;
    fj[std::string(name(k))] = e;
  }
  const Envelope env = envelope(gp, fam);
  out.doc.rows.push_back({sec, "max", io::exact_text(env.value), env.value.decimal(precision),
                          "attained by " + std::string(name(env.argmax))});
  json mj = surd_json(env.value, precision);
  mj["argmax"] = name(env.argmax);
  fj["max"] = mj;
  out.doc.data[sec] = fj;

  const std::string ssec = "summary " + sec;
  const std::int64_t man = max_allowed_N(gp, fam), ref = refined_max_N(gp, fam), zl = zl_bound(gp);
  out.doc.rows.push_back({ssec, "max_allowed_N", std::to_string(man), "", ""});
  out.doc.rows.push_back({ssec, "refined_max_N", std::to_string(ref), "",
                          ref <= zl ? "within zl_bound" : "exceeds zl_bound"});
  out.doc.rows.push_back({ssec, "zl_bound", std::to_string(zl), "", "2 b1 + 1"});
  json sj{{"max_allowed_N", man}, {"refined_max_N", ref}, {"zl_bound", zl}};
  if (fam == Family::J) {
    const BigInt fl = env.value.floor();
    const bool exception = fl > zl;
    out.doc.rows.push_back({ssec, "floor_J", fl.get_str(), "",
                            exception ? "exception: floor_J > zl_bound" : "floor_J <= zl_bound"});
    sj["floor"] = fl.get_str();
    sj["exception"] = exception;
  }
  out.doc.data["summary_" + sec] = sj;
}

}  // namespace

CommandResult cmd_bounds(const BoundsOptions& opt) {
  require(opt.g >= 0, "g >= 0", "got g = " + std::to_string(opt.g));
  if (opt.R) require(*opt.R >= 1, "R >= 1", "got R = " + std::to_string(*opt.R));
  CommandResult out;
  out.doc.command = "bounds";
  out.doc.data["g"] = opt.g;
  out.doc.data["R"] = opt.R ? json(*opt.R) : json(nullptr);
  family_rows(out, Family::I, {opt.g, 0}, opt.precision);
  if (opt.R) family_rows(out, Family::J, {opt.g, *opt.R}, opt.precision);
  return out;
}

namespace {

CommandResult verify_crossover_i(const VerifyOptions& opt) {
  CommandResult out;
  const CrossoverIReport rep = find_crossover_I(opt.scan_to);
  const std::string sec = "crossover-i";
  auto& rows = out.doc.rows;
  rows.push_back({sec, "onset", std::to_string(rep.onset), "",
                  pass(rep.onset == kExpectedCrossoverI) + " (expected " + std::to_string(kExpectedCrossoverI) + ")"});
  rows.push_back({sec, "scanned_to", std::to_string(rep.scanned_to), "", ""});
  rows.push_back({sec, "If(onset-1) > Ib(onset-1)", yes(rep.previous_dominated_by_f), "",
                  pass(rep.previous_dominated_by_f)});
  rows.push_back({sec, "Ib(onset) >= others", yes(rep.onset_dominated_by_b), "", pass(rep.onset_dominated_by_b)});
  for (const TailCertificate& t : rep.tails)
    rows.push_back({"tails", "Ib >= " + std::string(name(t.competitor)) + " for g >= onset",
                    "linear " + yes(t.linear_part) + ", squared " + yes(t.squared_part), "", pass(t.ok())});
  auto bracket = [&](const char* item, const RootBracket& b) {
    rows.push_back({"roots", item, io::exact_text(b.root), b.root.decimal(opt.precision),
                    (b.inside ? "in (" : "not in (") + std::to_string(b.lo) + ", " + std::to_string(b.hi) + ")"});
  };
  bracket("root, c = 875/12", rep.printed_root);
  bracket("root, c = 857/12", rep.corrected_root);
  rows.push_back({"identities", "(Lb-Lf)^2 - Sf = (6/847)(g^2 - 2239/3 g - 875/12)", yes(rep.printed_identity), "",
                  rep.printed_identity ? "holds" : "does not hold"});
  rows.push_back({"identities", "(Lb-Lf)^2 - Sf = (6/847)(g^2 - 2239/3 g - 857/12)", yes(rep.corrected_identity), "",
                  rep.corrected_identity ? "holds" : "does not hold"});
  const bool ok = rep.ok() && rep.onset == kExpectedCrossoverI;
  rows.push_back({"verdict", "crossover-i", "", "", pass(ok)});
  out.doc.data["report"] = rep;
  out.doc.data["ok"] = ok;
  out.exit_code = ok ? kExitOk : kExitViolation;
  return out;
}

CommandResult verify_crossover_j(const VerifyOptions& opt) {
  require(opt.r_min >= 1, "r_min >= 1", "got " + std::to_string(opt.r_min));
  require(opt.r_max >= opt.r_min, "r_max >= r_min", "got " + std::to_string(opt.r_max));
  CommandResult out;
  json reps = json::array();
  bool ok = true;
  for (std::int64_t R = opt.r_min; R <= opt.r_max; ++R) {
    const CrossoverJReport rep = find_crossover_J(R, opt.margin);
    ok = ok && rep.ok();
    out.doc.rows.push_back({"crossover-j", "R=" + std::to_string(R), std::to_string(rep.onset), "",
                            pass(rep.ok()) + " (claimed " + std::to_string(rep.claimed) + ", identity " +
                                yes(rep.identity) + ")"});
    reps.push_back(rep);
  }
  out.doc.rows.push_back({"verdict", "crossover-j", "", "", pass(ok)});
  out.doc.data["reports"] = reps;
  out.doc.data["ok"] = ok;
  out.exit_code = ok ? kExitOk : kExitViolation;
  return out;
}

CommandResult verify_zl(const VerifyOptions& opt) {
  CommandResult out;
  const auto found = check_zl_finite(opt.max_sum);
  std::vector<std::pair<std::int64_t, std::int64_t>> expected;
  for (std::int64_t R : {1, 2})
    if (3 * R <= opt.max_sum) expected.emplace_back(0, R);
  json exc = json::array();
  bool refined_ok = true;
  for (const auto& [g, R] : found) {
    const GenusProfile gp{g, R};
    const BigInt fl = envelope(gp, Family::J).value.floor();
    const std::int64_t ref = refined_max_N(gp, Family::J), zl = zl_bound(gp);
    const bool known = std::find(expected.begin(), expected.end(), std::make_pair(g, R)) != expected.end();
    refined_ok = refined_ok && ref <= zl;
    out.doc.rows.push_back({"exceptions", "g=" + std::to_string(g) + " R=" + std::to_string(R), fl.get_str(), "",
                            "floor_J > " + std::to_string(zl) + (known ? ", expected" : ", UNEXPECTED") +
                                ", refined max N " + std::to_string(ref)});
    exc.push_back(json{{"g", g}, {"R", R}, {"floor", fl.get_str()}, {"zl_bound", zl}, {"refined_max_N", ref}});
  }
  for (const auto& e : expected)
    if (std::find(found.begin(), found.end(), e) == found.end())
      out.doc.rows.push_back({"exceptions", "g=" + std::to_string(e.first) + " R=" + std::to_string(e.second), "", "",
                              "MISSING"});
  const bool ok = found == expected && refined_ok;
  out.doc.rows.push_back({"verdict", "zl, g + 3R <= " + std::to_string(opt.max_sum), "", "", pass(ok)});
  out.doc.data["max_sum"] = opt.max_sum;
  out.doc.data["exceptions"] = exc;
  out.doc.data["ok"] = ok;
  out.exit_code = ok ? kExitOk : kExitViolation;
  return out;
}

CommandResult verify_envelopes(const VerifyOptions& opt) {
  CommandResult out;
  const EnvelopeReport rep = check_envelopes(opt.g_max);
  for (const EnvelopeValidity& v : rep.envelopes)
    out.doc.rows.push_back({"envelopes", v.envelope.label, "onset " + std::to_string(v.onset), "",
                            v.invalid.empty() ? "valid on 0.." + std::to_string(rep.g_max)
                                              : "fails at g = " + runs_text(v.invalid)});
  out.doc.rows.push_back({"envelopes", "max of the three", std::to_string(rep.max_failures.size()) + " failures", "",
                          rep.max_failures.empty() ? "pass" : "FAIL at g = " + runs_text(rep.max_failures)});
  out.doc.rows.push_back({"verdict", "envelopes", "", "", pass(rep.ok())});
  out.doc.data["report"] = rep;
  out.doc.data["ok"] = rep.ok();
  out.exit_code = rep.ok() ? kExitOk : kExitViolation;
  return out;
}

CommandResult verify_exchange(const VerifyOptions& opt) {
  CommandResult out;
  const ExchangeReport rep = check_exchange(opt.limit);
  out.doc.rows.push_back({"exchange", "triples checked", std::to_string(rep.checked), "", ""});
  out.doc.rows.push_back({"exchange", "minimum value", std::to_string(rep.minimum), "", ""});
  if (rep.counterexample) {
    const auto& [x, y, z] = *rep.counterexample;
    out.doc.rows.push_back({"exchange", "counterexample",
                            "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")", "",
                            std::to_string(exchange_form(x, y, z))});
  }
  out.doc.rows.push_back({"verdict", "exchange, limit " + std::to_string(opt.limit), "", "", pass(rep.ok())});
  out.doc.data["report"] = rep;
  out.doc.data["ok"] = rep.ok();
  out.exit_code = rep.ok() ? kExitOk : kExitViolation;
  return out;
}

CommandResult verify_lemmas(const VerifyOptions& opt) {
  const LemmaGrid& g = opt.grid;
  require(g.g_max >= 0 && g.N_max >= 1 && g.p_max >= 2, "grid", "need g_max >= 0, N_max >= 1, p_max >= 2");
  CommandResult out;
  const LemmaReport rep = check_chain_lemmas(g);
  for (const LemmaResult& l : rep.lemmas) {
    std::string status = pass(l.ok());
    if (l.zero_steps > 0) status += ", " + std::to_string(l.zero_steps) + " zero steps";
    for (const auto& e : l.examples) status += "; " + e;
    out.doc.rows.push_back({"lemmas", l.name, std::to_string(l.checked) + " checked", "", status});
  }
  out.doc.rows.push_back({"direction", "Delta12 >= Delta13", std::to_string(rep.delta12_ge_delta13), "",
                          "of " + std::to_string(rep.delta12_points) + " points"});
  out.doc.rows.push_back({"direction", "Delta12 <= Delta13", std::to_string(rep.delta12_le_delta13), "",
                          "of " + std::to_string(rep.delta12_points) + " points"});
  out.doc.rows.push_back({"verdict", "lemmas", "", "", pass(rep.ok())});
  out.doc.data["report"] = rep;
  out.doc.data["ok"] = rep.ok();
  out.exit_code = rep.ok() ? kExitOk : kExitViolation;
  return out;
}

}  // namespace

CommandResult cmd_verify(const VerifyOptions& opt) {
  CommandResult out;
  switch (opt.target) {
    case VerifyTarget::CrossoverI: out = verify_crossover_i(opt); break;
    case VerifyTarget::CrossoverJ: out = verify_crossover_j(opt); break;
    case VerifyTarget::Zl: out = verify_zl(opt); break;
    case VerifyTarget::Envelopes: out = verify_envelopes(opt); break;
    case VerifyTarget::Exchange: out = verify_exchange(opt); break;
    case VerifyTarget::Lemmas: out = verify_lemmas(opt); break;
  }
  out.doc.command = "verify";
  return out;
}

CommandResult cmd_chain(const ChainOptions& opt) {
  CommandResult out;
  out.doc.command = "chain";
  const ChainTrace trace = run_chain(opt.theorem, opt.chain_case, opt.params);
  const auto bad = check_trace(trace);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ChainStep& s = trace.steps[i];
    std::string status;
    const std::string parent = s.parent ? trace.steps[*s.parent].label : "";
    switch (s.relation) {
      case StepRelation::Define: status = "define"; break;
      case StepRelation::UpperBound: status = ">= " + parent; break;
      case StepRelation::LowerBound: status = "<= " + parent; break;
      case StepRelation::EndpointMin: status = "endpoint of " + parent; break;
    }
    if (!s.hypothesis_holds) status += " (hypothesis not met)";
    if (std::find(bad.begin(), bad.end(), i) != bad.end()) status += " FAIL";
    out.doc.rows.push_back({"trace", s.label, s.value.str(), s.value.decimal(opt.precision), status});
  }
  auto verdict_row = [&](const std::vector<std::string>& labels, bool positive) {
    std::string item;
    const Rational* low = nullptr;
    for (const auto& l : labels) {
      item += (item.empty() ? "" : ", ") + l;
      const Rational& v = trace.value(l);
      if (!low || v < *low) low = &v;
    }
    out.doc.rows.push_back({"verdict", "min(" + item + ")", low->str(), low->decimal(opt.precision),
                            positive ? "positive" : "not positive"});
  };
  if (trace.chain_case == ChainCase::Finite) {
    verdict_row({trace.steps.back().label}, trace.verdict);
  } else if (trace.theorem == ChainTheorem::One) {
    verdict_row({"Delta8", "Delta10"}, trace.verdict);
    if (trace.floor_verdict) verdict_row({"Delta7(3)", "Delta9"}, *trace.floor_verdict);
  } else {
    verdict_row({"Delta11", "Delta13"}, trace.verdict);
    if (trace.floor_verdict) verdict_row({"Delta10(3)", "Delta12"}, *trace.floor_verdict);
  }
  out.doc.data["trace"] = trace;
  out.doc.data["relation_failures"] = bad;
  out.exit_code = bad.empty() ? kExitOk : kExitViolation;
  return out;
}

CommandResult cmd_search(const SearchOptions& opt) {
  CommandResult out;
  out.doc.command = "search";
  const SearchBox& box = opt.box;
  FeasibilityReport rep = feasibility_search(box);

  auto keep = [&](const FeasibleConfig& c) {
    for (const auto& [k, v] : opt.only) {
      const std::int64_t have = k == "g" ? c.g : k == "R" ? c.R : k == "N" ? c.N : k == "p" ? c.p : c.q;
      if (have != v) return false;
    }
    return true;
  };
  std::vector<FeasibleConfig> listed;
  for (const FeasibleConfig& c : rep.configs) {
    if (listed.size() >= opt.show) break;
    if (keep(c)) listed.push_back(c);
  }

  auto& rows = out.doc.rows;
  rows.push_back({"search", "theorem", box.theorem == SearchTheorem::One ? "1" : "2", "", ""});
  rows.push_back({"search", "scanned", std::to_string(rep.scanned_count), "", ""});
  rows.push_back({"search", "feasible", std::to_string(rep.feasible_count), "", ""});
  rows.push_back({"search", "listed", std::to_string(listed.size()), "", ""});
  for (const FeasibleConfig& c : listed) {
    std::ostringstream item;
    item << "g=" << c.g << " R=" << c.R << " N=" << c.N << " p=" << c.p << " q=" << c.q;
    rows.push_back({"configs", item.str(), delta_gap(c.witness).str(), "", types_text(c.types)});
  }
  const bool strict = box.drop_mask == 0;
  const bool ok = !strict || rep.feasible_count == 0;
  rows.push_back({"verdict", strict ? "nothing dropped" : "inequalities dropped", "", "",
                  strict ? pass(ok) : "sanity mode"});

  json data = rep;
  data["configs"] = listed;
  data["box"] = json{{"theorem", box.theorem == SearchTheorem::One ? 1 : 2},
                     {"g_max", box.g_max},
                     {"R_max", box.R_max},
                     {"N_max", box.N_max},
                     {"p_max", box.p_max},
                     {"q_slack", box.q_slack},
                     {"drop_mask", box.drop_mask},
                     {"multibranch", box.multibranch},
                     {"keep_per_task", box.keep_per_task}};
  out.doc.data["report"] = data;
  out.doc.data["ok"] = ok;
  out.exit_code = ok ? kExitOk : kExitViolation;
  return out;
}

std::uint8_t parse_drop(const std::string& text) {
  if (text == "all") return kDropAll;
  std::uint8_t mask = 0;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int idx = -1;
    if (tok.size() == 1 && tok[0] >= 'a' && tok[0] <= 'f') idx = tok[0] - 'a';
    if (auto k = bound_from_name(tok)) {
      const auto& fam = members(family_of(*k));
      idx = static_cast<int>(std::find(fam.begin(), fam.end(), *k) - fam.begin());
    }
    if (idx < 0) throw PreconditionError("drop", "unknown inequality '" + tok + "'");
    mask = static_cast<std::uint8_t>(mask | (1u << idx));
  }
  if (mask == 0) throw PreconditionError("drop", "empty list");
  return mask;
}

std::map<std::string, std::int64_t> parse_only(const std::string& text) {
  static const std::set<std::string> keys{"g", "R", "N", "p", "q"};
  std::map<std::string, std::int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || !keys.count(tok.substr(0, eq)))
      throw PreconditionError("only", "expected key=value with key in g, R, N, p, q; got '" + tok + "'");
    try {
      out[tok.substr(0, eq)] = std::stoll(tok.substr(eq + 1));
    } catch (const std::exception&) {
      throw PreconditionError("only", "not an integer in '" + tok + "'");
    }
  }
  return out;
}

}  // namespace zl::cli

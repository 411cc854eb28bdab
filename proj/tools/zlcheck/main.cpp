// zlcheck: command line front end for the zl library.
//
// Exit codes: 0 all expectations met, 1 a check found a violation,
// 2 usage error (bad flags, failed precondition, search over budget).

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "zl/errors.hpp"

using namespace zl;
using namespace zl::cli;

namespace {

template <class T>
std::optional<T> opt_of(CLI::Option* o, const T& v) {
  return o->count() ? std::optional<T>(v) : std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of singular-point count bounds for curves with one place at infinity", "zlcheck"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format_flag;
  int precision = 6;
  auto* fmt_opt = app.add_option("--format", format_flag, "table, csv or json (default: $ZLCHECK_FORMAT, else table)");
  app.add_option("--precision", precision, "Decimal digits for display-only columns")->check(CLI::Range(0, 200));

  // bounds
  BoundsOptions bo;
  std::int64_t bounds_R = 0;
  auto* bounds = app.add_subcommand("bounds", "All bound values, thresholds and envelopes at one (g, R)");
  bounds->add_option("--g", bo.g, "Geometric genus")->required();
  auto* bounds_R_opt = bounds->add_option("--R", bounds_R, "Total branch excess; adds the J family");

  // verify
  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Batch checks with documented expectations");
  verify->require_subcommand(1);
  auto* v_ci = verify->add_subcommand("crossover-i", "Onset of I = Ib with tail certificates");
  v_ci->add_option("--scan-to", vo.scan_to, "Last g scanned exactly");
  auto* v_cj = verify->add_subcommand("crossover-j", "Onset of J = Jb for each R");
  v_cj->add_option("--r-min", vo.r_min);
  v_cj->add_option("--r-max", vo.r_max);
  v_cj->add_option("--margin", vo.margin, "Scan this far past the claimed onset");
  auto* v_zl = verify->add_subcommand("zl", "floor(J) <= 4g + 2R + 1 over g + 3R <= max-sum");
  v_zl->add_option("--max-sum", vo.max_sum);
  auto* v_env = verify->add_subcommand("envelopes", "Validity of the three linear envelopes of I");
  v_env->add_option("--g-max", vo.g_max);
  auto* v_ex = verify->add_subcommand("exchange", "zx(x-z) + zy(z-y) + xy(y-x) > 0 for 2 <= x < y < z <= limit");
  v_ex->add_option("--limit", vo.limit);
  auto* v_lem = verify->add_subcommand("lemmas", "Monotonicity and concavity claims of the chains on a grid");
  v_lem->add_option("--g-max", vo.grid.g_max);
  v_lem->add_option("--n-max", vo.grid.N_max);
  v_lem->add_option("--p-max", vo.grid.p_max);
  v_lem->add_option("--r-max", vo.grid.R_max);

  // chain
  int theorem = 1;
  std::string chain_case;
  ChainOptions co;
  std::int64_t p = 0, q = 0, pp = 0, r = 0, s = 0, A = 0, B = 0, m1 = 0;
  std::vector<std::string> kspec;
  auto* chain = app.add_subcommand("chain", "Replay one proof chain with exact values");
  chain->add_option("--theorem", theorem)->required()->check(CLI::IsMember({1, 2}));
  chain->add_option("--case", chain_case)->required()->check(CLI::IsMember({"finite", "infinity"}));
  chain->add_option("--g", co.params.g)->required();
  chain->add_option("--R", co.params.R);
  chain->add_option("--N", co.params.N)->required();
  auto* o_p = chain->add_option("--p", p);
  auto* o_q = chain->add_option("--q", q);
  auto* o_pp = chain->add_option("--p-prime", pp);
  auto* o_r = chain->add_option("--r", r, "Unibranched double points");
  auto* o_s = chain->add_option("--s", s, "Unibranched triple points");
  auto* o_A = chain->add_option("--A", A);
  auto* o_B = chain->add_option("--B", B);
  auto* o_m1 = chain->add_option("--m1", m1);
  chain->add_option("--k", kspec, "j=count: number of ordinary j-tuple points (repeatable)");

  // search
  SearchOptions so;
  int search_theorem = 1;
  std::string drop, only;
  auto* search = app.add_subcommand("search", "Brute-force feasibility search over a finite box");
  search->add_option("--theorem", search_theorem)->check(CLI::IsMember({1, 2}));
  search->add_option("--g-max", so.box.g_max);
  auto* o_rmax = search->add_option("--r-max", so.box.R_max);
  search->add_option("--n-max", so.box.N_max);
  search->add_option("--p-max", so.box.p_max);
  search->add_option("--q-slack", so.box.q_slack);
  search->add_option("--drop", drop, "Inequalities not imposed: all, or a list such as a,c or Ib,If");
  search->add_flag("--multibranch", so.box.multibranch, "Theorem 1: admit multi-branch points, R <= r-max");
  search->add_option("--budget", so.box.budget, "Refuse boxes whose pre-flight count exceeds this");
  search->add_option("--threads", so.box.threads)->check(CLI::PositiveNumber);
  so.box.keep_per_task = 256;
  search->add_option("--keep", so.box.keep_per_task, "Configurations kept per (g, R, N); 0 keeps all");
  search->add_option("--show", so.show, "Configurations listed");
  search->add_option("--only", only, "List only configurations matching e.g. g=0,N=6,p=4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const io::Format format = io::resolve_format(opt_of(fmt_opt, format_flag));
    CommandResult res;
    if (*bounds) {
      bo.R = opt_of(bounds_R_opt, bounds_R);
      bo.precision = precision;
      res = cmd_bounds(bo);
    } else if (*verify) {
      vo.precision = precision;
      if (*v_ci) vo.target = VerifyTarget::CrossoverI;
      if (*v_cj) vo.target = VerifyTarget::CrossoverJ;
      if (*v_zl) vo.target = VerifyTarget::Zl;
      if (*v_env) vo.target = VerifyTarget::Envelopes;
      if (*v_ex) vo.target = VerifyTarget::Exchange;
      if (*v_lem) vo.target = VerifyTarget::Lemmas;
      res = cmd_verify(vo);
    } else if (*chain) {
      co.theorem = theorem == 1 ? ChainTheorem::One : ChainTheorem::Two;
      co.chain_case = chain_case == "finite" ? ChainCase::Finite : ChainCase::Infinity;
      co.params.p = opt_of(o_p, p);
      co.params.q = opt_of(o_q, q);
      co.params.p_prime = opt_of(o_pp, pp);
      co.params.r = opt_of(o_r, r);
      co.params.s = opt_of(o_s, s);
      co.params.A = opt_of(o_A, A);
      co.params.B = opt_of(o_B, B);
      co.params.m1 = opt_of(o_m1, m1);
      for (const std::string& k : kspec) {
        const auto eq = k.find('=');
        if (eq == std::string::npos) throw PreconditionError("k", "expected j=count, got '" + k + "'");
        try {
          co.params.k[std::stoll(k.substr(0, eq))] = std::stoll(k.substr(eq + 1));
        } catch (const std::logic_error&) {
          throw PreconditionError("k", "expected integers in '" + k + "'");
        }
      }
      co.precision = precision;
      res = cmd_chain(co);
    } else if (*search) {
      so.box.theorem = search_theorem == 1 ? SearchTheorem::One : SearchTheorem::Two;
      if (!o_rmax->count() && so.box.theorem == SearchTheorem::One && !so.box.multibranch) so.box.R_max = 0;
      if (!drop.empty()) so.box.drop_mask = parse_drop(drop);
      if (!only.empty()) so.only = parse_only(only);
      res = cmd_search(so);
    }
    io::render(res.doc, format, std::cout);
    return res.exit_code;
  } catch (const PreconditionError& e) {
    std::cerr << "zlcheck: precondition failed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "zlcheck: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "zlcheck: " << e.what() << '\n';
    return kExitUsage;
  }
}

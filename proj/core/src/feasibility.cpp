#include "zl/feasibility.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <string>
#include <thread>

#include "zl/errors.hpp"

namespace zl {

namespace {

struct Task {
  std::int64_t g, R, N;
};

std::vector<Task> tasks(const SearchBox& box) {
  const bool two = box.theorem == SearchTheorem::Two;
  const Family fam = two ? Family::J : Family::I;
  const std::int64_t r_lo = two ? 1 : 0;
  const std::int64_t r_hi = (two || box.multibranch) ? box.R_max : 0;
  std::vector<Task> out;
  for (std::int64_t g = 0; g <= box.g_max; ++g)
    for (std::int64_t R = r_lo; R <= r_hi; ++R)
      for (std::int64_t N = 1; N <= box.N_max; ++N) {
        bool ok = true;
        const auto& kinds = members(fam);
        for (std::size_t i = 0; i < kinds.size() && ok; ++i)
          if (!(box.drop_mask & (1u << i))) ok = holds(kinds[i], N, {g, two ? R : 0});
        if (ok) out.push_back({g, R, N});
      }
  return out;
}

using Type = std::pair<std::int64_t, std::int64_t>;

std::vector<Type> point_types(std::int64_t R, std::int64_t cap) {
  std::vector<Type> out;
  for (std::int64_t r = 1; r <= R + 1; ++r)
    for (std::int64_t m = std::max<std::int64_t>(r, 2); m <= r + cap; ++m) out.emplace_back(m, r);
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Excess lower bounds in sixths: 5/6, 1/2, 0.
std::int64_t eta6(std::int64_t m, std::int64_t r) { return r >= 2 ? 0 : (m == 2 ? 5 : 3); }

class Scanner {
 public:
  Scanner(const Task& t, std::int64_t p, std::int64_t q, std::vector<FeasibleConfig>& out, std::uint64_t& feasible,
          std::uint64_t keep)
      : t_(t), p_(p), q_(q), pp_(std::gcd(p, q)), cap_(p + 2 * t.g - 1), out_(out), feasible_(feasible), keep_(keep) {
    D_ = (p - 1) * (q - 1) - pp_ + 1 - 2 * t.g;
    types_ = point_types(t.R, cap_);
    chosen_.reserve(static_cast<std::size_t>(t.N));
  }

  std::uint64_t run() {
    rec(0, 0, t_.R, cap_, 0, 0, 0, 0);
    return count_;
  }

 private:
  void rec(std::int64_t depth, std::size_t first, std::int64_t r_left, std::int64_t m_left, std::int64_t e_min,
           std::int64_t nu_min, std::int64_t eta, std::int64_t m_max) {
    if (depth == t_.N) {
      if (r_left != 0) return;
      ++count_;
      const std::int64_t slack6 = 6 * (p_ + q_ - 2 + 4 * t_.g + t_.R) - eta - 6 * nu_min;
      if (slack6 < 0) return;
      const std::int64_t units = slack6 / 6;
      const std::int64_t c = std::max(m_max, pp_);
      if (D_ - e_min - c * units <= 0) {
        ++feasible_;
        if (keep_ == 0 || out_.size() < keep_) emit(e_min, units, c, m_max);
      }
      return;
    }
    for (std::size_t i = first; i < types_.size(); ++i) {
      const auto [m, r] = types_[i];
      if (r - 1 > r_left || m - r > m_left) continue;
      chosen_.push_back(types_[i]);
      rec(depth + 1, i, r_left - (r - 1), m_left - (m - r), e_min + m * (m - 1), nu_min + 2 * m - r - 2,
          eta + eta6(m, r), std::max(m_max, m));
      chosen_.pop_back();
    }
  }

  void emit(std::int64_t e_min, std::int64_t units, std::int64_t c, std::int64_t m_max) {
    FeasibleConfig cfg;
    cfg.g = t_.g;
    cfg.R = t_.R;
    cfg.N = t_.N;
    cfg.p = p_;
    cfg.q = q_;
    cfg.p_prime = pp_;
    cfg.types = chosen_;
    cfg.delta_min = D_ - e_min - c * units;
    // Spend only what is needed to bring D - E to zero or below.
    const std::int64_t need = std::max<std::int64_t>(0, (D_ - e_min + c - 1) / c);
    const std::int64_t spend = std::min(need, units);
    std::vector<SingularPointModel> pts;
    for (const auto& [m, r] : chosen_) pts.push_back(SingularPointModel{m, r, 2 * m - r - 2, std::nullopt});
    std::int64_t nu_inf = 0;
    if (m_max >= pp_) {
      pts.front().ext_nu += spend;
    } else {
      nu_inf = spend;
    }
    cfg.witness = CurveProfile::make(t_.g, p_, q_, std::move(pts), nu_inf);
    out_.push_back(std::move(cfg));
  }

  Task t_;
  std::int64_t p_, q_, pp_, cap_, D_;
  std::vector<Type> types_;
  std::vector<Type> chosen_;
  std::vector<FeasibleConfig>& out_;
  std::uint64_t& feasible_;
  std::uint64_t keep_;
  std::uint64_t count_ = 0;
};

// Number of N-element multisets of point types with sum (r - 1) = R and
// sum (m - r) <= cap, for every N up to n_max.
std::vector<std::uint64_t> count_multisets(std::int64_t R, std::int64_t cap, std::int64_t n_max) {
  const auto n1 = static_cast<std::size_t>(n_max + 1), a1 = static_cast<std::size_t>(R + 1),
             b1 = static_cast<std::size_t>(cap + 1);
  std::vector<std::uint64_t> dp(n1 * a1 * b1, 0);
  auto at = [&](std::size_t n, std::size_t a, std::size_t b) -> std::uint64_t& { return dp[(n * a1 + a) * b1 + b]; };
  at(0, 0, 0) = 1;
  for (const auto& [m, r] : point_types(R, cap)) {
    const auto da = static_cast<std::size_t>(r - 1), db = static_cast<std::size_t>(m - r);
    for (std::size_t n = 1; n < n1; ++n)
      for (std::size_t a = da; a < a1; ++a)
        for (std::size_t b = db; b < b1; ++b) at(n, a, b) += at(n - 1, a - da, b - db);
  }
  std::vector<std::uint64_t> out(n1, 0);
  for (std::size_t n = 0; n < n1; ++n)
    for (std::size_t b = 0; b < b1; ++b) out[n] += at(n, static_cast<std::size_t>(R), b);
  return out;
}

}  // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t estimate, std::uint64_t budget)
    : std::runtime_error("search would visit " + std::to_string(estimate) + " configurations, budget is " +
                         std::to_string(budget)),
      estimate_(estimate) {}

void SearchBox::validate() const {
  auto need = [](bool ok, const char* what, std::int64_t v) {
    if (!ok) throw PreconditionError(what, "got " + std::to_string(v));
  };
  need(g_max >= 0, "g_max >= 0", g_max);
  need(N_max >= 1, "N_max >= 1", N_max);
  need(p_max >= 2, "p_max >= 2", p_max);
  need(q_slack >= 1, "q_slack >= 1", q_slack);
  need(theorem == SearchTheorem::One && !multibranch ? R_max >= 0 : R_max >= 1, "R_max >= 1", R_max);
  need(drop_mask <= kDropAll, "drop mask within a..f", drop_mask);
  need(threads >= 1, "threads >= 1", threads);
}

std::uint64_t estimate_search(const SearchBox& box) {
  box.validate();
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::uint64_t>> memo;
  std::uint64_t total = 0;
  for (const Task& t : tasks(box)) {
    for (std::int64_t p = 2; p <= box.p_max; ++p) {
      const std::int64_t cap = p + 2 * t.g - 1;
      auto it = memo.find({t.R, cap});
      if (it == memo.end()) it = memo.emplace(std::make_pair(t.R, cap), count_multisets(t.R, cap, box.N_max)).first;
      for (std::int64_t q = p + 1; q <= p + box.q_slack; ++q)
        if (q % p != 0) total += it->second[static_cast<std::size_t>(t.N)];
    }
  }
  return total;
}

FeasibilityReport feasibility_search(const SearchBox& box) {
  box.validate();
  if (box.budget > 0) {
    const std::uint64_t est = estimate_search(box);
    if (est > box.budget) throw BudgetExceeded(est, box.budget);
  }
  const std::vector<Task> work = tasks(box);
  std::vector<std::vector<FeasibleConfig>> found(work.size());
  std::vector<std::uint64_t> counts(work.size(), 0), feasible(work.size(), 0);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      for (std::int64_t p = 2; p <= box.p_max; ++p)
        for (std::int64_t q = p + 1; q <= p + box.q_slack; ++q) {
          if (q % p == 0) continue;
          counts[i] += Scanner(work[i], p, q, found[i], feasible[i], box.keep_per_task).run();
        }
    }
  };
  const unsigned n = std::min<unsigned>(box.threads, static_cast<unsigned>(std::max<std::size_t>(1, work.size())));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  FeasibilityReport rep;
  for (std::size_t i = 0; i < work.size(); ++i) {
    rep.scanned_count += counts[i];
    rep.feasible_count += feasible[i];
    for (auto& c : found[i]) rep.configs.push_back(std::move(c));
  }
  return rep;
}

}  // namespace zl

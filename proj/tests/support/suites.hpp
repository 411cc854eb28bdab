// Exhaustive and randomised property suites shared by the unit tests (at
// reduced sizes) and the acceptance runner (at full size).  Expected values
// are recomputed here from the defining sums, not read back from the
// library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zl/local_invariants.hpp"

namespace suites {

struct Outcome {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

/// Calls f on every symmetric r x r table with entries in [0, hi].
inline void for_each_table(std::size_t r, std::int64_t hi, const std::function<void(const zl::TangencyTable&)>& f) {
  const std::size_t pairs = r * (r - 1) / 2;
  std::vector<std::int64_t> v(pairs, 0);
  zl::TangencyTable t(r);
  while (true) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) t.set(i, j, v[k++]);
    f(t);
    std::size_t pos = 0;
    while (pos < pairs && v[pos] == hi) v[pos++] = 0;
    if (pos == pairs) return;
    ++v[pos];
  }
}

/// In every triple the smallest of the three values occurs at least twice.
inline bool triple_rule(const zl::TangencyTable& t) {
  const std::size_t r = t.size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t k = j + 1; k < r; ++k) {
        std::int64_t a = t.at(i, j), b = t.at(i, k), c = t.at(j, k);
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        if (a != b) return false;
      }
  return true;
}

/// sum over j >= 1 of max over i < j of t(order[i], order[j]).
inline std::int64_t prefix_max(const zl::TangencyTable& t, const std::vector<std::size_t>& order) {
  std::int64_t s = 0;
  for (std::size_t j = 1; j < order.size(); ++j) {
    std::int64_t best = -1;
    for (std::size_t i = 0; i < j; ++i) best = std::max(best, t.at(order[i], order[j]));
    s += best;
  }
  return s;
}

/// Every composition of r in [2, r_max] branches with m_i <= m_max,
/// m_i - 2 <= ext_nu_i <= ext_max, maximal 2 delta_i = m_i nu_i, tangencies
/// nu_ij <= nu_max obeying the triple rule, and maximal eps_ij.  Checks the
/// composed point against the defining sums and 2 delta <= m (ext - m + r + 1).
inline Outcome composition_suite(std::size_t r_max, std::int64_t m_max, std::int64_t ext_max, std::int64_t nu_max) {
  Outcome out;
  std::vector<zl::BranchModel> kinds;
  for (std::int64_t m = 1; m <= m_max; ++m)
    for (std::int64_t e = m - 2; e <= ext_max; ++e) kinds.push_back({m, e, m * (e - m + 2)});

  for (std::size_t r = 2; r <= r_max; ++r) {
    std::vector<zl::TangencyTable> tables;
    for_each_table(r, nu_max, [&](const zl::TangencyTable& t) {
      if (triple_rule(t)) tables.push_back(t);
    });
    // Branch multisets; tables range over all orderings, so sorted branch
    // lists lose nothing.
    std::vector<std::size_t> idx(r, 0);
    while (true) {
      std::vector<zl::BranchModel> br;
      for (std::size_t i : idx) br.push_back(kinds[i]);
      for (const auto& t : tables) {
        zl::SymmetricTable eps(r);
        std::int64_t eps_sum = 0;
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = i + 1; j < r; ++j) {
            const std::int64_t nui = br[i].ext_nu - br[i].m + 2, nuj = br[j].ext_nu - br[j].m + 2;
            const std::int64_t e = std::min(br[i].m * (nuj + t.at(i, j) + 1), br[j].m * (nui + t.at(i, j) + 1));
            eps.set(i, j, e);
            eps_sum += e;
          }
        const zl::Composition c = zl::compose_multibranch(br, t, eps);
        std::int64_t m = 0, ext = 0, td = 0;
        for (const auto& b : br) {
          m += b.m;
          ext += b.ext_nu;
          td += b.two_delta;
        }
        std::vector<std::size_t> id(r);
        std::iota(id.begin(), id.end(), std::size_t{0});
        const auto rr = static_cast<std::int64_t>(r);
        ext += prefix_max(t, id) + 2 * rr - 2;
        td += 2 * eps_sum;
        ++out.checked;
        const auto& p = c.point;
        if (p.m != m || p.r != rr || p.ext_nu != ext || p.two_delta != td) {
          out.fail("composition disagrees with the defining sums");
          continue;
        }
        if (td > m * (ext - m + rr + 1)) {
          std::ostringstream os;
          os << "2delta " << td << " > " << m * (ext - m + rr + 1) << " for r=" << r << " branches";
          for (const auto& b : br) os << " (" << b.m << "," << b.ext_nu << ")";
          out.fail(os.str());
        }
      }
      std::size_t pos = r;
      while (pos > 0 && idx[pos - 1] == kinds.size() - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t k = pos; k < r; ++k) idx[k] = idx[pos - 1];
    }
  }
  return out;
}

/// check_s12 on one table, with both sides recomputed here: the left side
/// does not depend on the order of the first r - 1 branches, and the right
/// side is evaluated under the order the report used.
inline void s12_one(const zl::TangencyTable& t, Outcome& out) {
  const zl::S12Report rep = zl::check_s12(t);
  const std::size_t r = t.size();
  std::int64_t lhs = 0;
  for (std::size_t i = 0; i + 1 < r; ++i) lhs += t.at(i, r - 1);
  const std::int64_t rhs = prefix_max(t, rep.order);
  ++out.checked;
  if (rep.lhs != lhs || rep.rhs != rhs) out.fail("s12 report disagrees with recomputed sides");
  if (!(lhs <= rhs) || !rep.holds) {
    std::ostringstream os;
    os << "s12 fails: " << lhs << " > " << rhs << " at r=" << r;
    out.fail(os.str());
  }
  // The branch closest to the last one sits in position r - 2.
  std::int64_t best = -1;
  for (std::size_t i = 0; i + 1 < r; ++i) best = std::max(best, t.at(i, r - 1));
  if (r >= 2 && t.at(rep.order[r - 2], rep.order[r - 1]) != best) out.fail("s12 order does not put the max at r-1");
}

/// All triple-rule tables with r <= r_max and entries <= hi, by filtering
/// every table.  Only usable for small sizes.
inline Outcome s12_exhaustive(std::size_t r_max, std::int64_t hi) {
  Outcome out;
  for (std::size_t r = 2; r <= r_max; ++r)
    for_each_table(r, hi, [&](const zl::TangencyTable& t) {
      if (triple_rule(t)) s12_one(t, out);
    });
  return out;
}

/// Calls f on every triple-rule r x r table with entries in [0, hi],
/// generated directly.  Such a table is the same as a chain of partitions
/// E_1 >= E_2 >= ... >= E_hi (coarse to fine) of the branches, with
/// nu_ij = #{k : i and j share a block of E_k}.
inline void for_each_triple_table(std::size_t r, std::int64_t hi,
                                  const std::function<void(const zl::TangencyTable&)>& f) {
  // Partitions as restricted growth strings.
  std::vector<std::vector<int>> parts;
  std::vector<int> cur(r, 0);
  std::function<void(std::size_t, int)> grow = [&](std::size_t i, int blocks) {
    if (i == r) {
      parts.push_back(cur);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      cur[i] = b;
      grow(i + 1, std::max(blocks, b + 1));
    }
  };
  cur[0] = 0;
  grow(1, 1);
  // finer[a]: partitions d that refine a (a included).
  std::vector<std::vector<std::size_t>> finer(parts.size());
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t d = 0; d < parts.size(); ++d) {
      bool ok = true;
      for (std::size_t i = 0; i < r && ok; ++i)
        for (std::size_t j = i + 1; j < r && ok; ++j)
          if (parts[d][i] == parts[d][j] && parts[a][i] != parts[a][j]) ok = false;
      if (ok) finer[a].push_back(d);
    }
  std::vector<std::size_t> chain(static_cast<std::size_t>(hi), 0);
  zl::TangencyTable t(r);
  std::function<void(std::int64_t, std::size_t)> walk = [&](std::int64_t k, std::size_t from) {
    if (k == hi) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
          std::int64_t v = 0;
          for (std::size_t c : chain) v += parts[c][i] == parts[c][j] ? 1 : 0;
          t.set(i, j, v);
        }
      f(t);
      return;
    }
    for (std::size_t d : finer[from]) {
      chain[static_cast<std::size_t>(k)] = d;
      walk(k + 1, d);
    }
  };
  walk(0, 0);  // parts[0] is the single block.
}

/// check_s12 on every triple-rule table with 2 <= r <= r_max, entries <= hi.
inline Outcome s12_all(std::size_t r_max, std::int64_t hi) {
  Outcome out;
  for (std::size_t r = 2; r <= r_max; ++r)
    for_each_triple_table(r, hi, [&](const zl::TangencyTable& t) {
      if (!triple_rule(t)) {
        out.fail("enumerator produced a table violating the triple rule");
        return;
      }
      s12_one(t, out);
    });
  return out;
}

/// Random triple-rule tables: the max-min (bottleneck) closure of a random
/// symmetric table satisfies the triple rule, and every triple-rule table
/// is its own closure.
inline zl::TangencyTable random_triple_table(std::size_t r, std::int64_t hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, hi);
  std::vector<std::vector<std::int64_t>> a(r, std::vector<std::int64_t>(r, hi));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) a[i][j] = a[j][i] = d(rng);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (i != j) a[i][j] = std::max(a[i][j], std::min(a[i][k], a[k][j]));
  zl::TangencyTable t(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) t.set(i, j, a[i][j]);
  return t;
}

inline Outcome s12_random(std::size_t r_max, std::int64_t hi, std::size_t samples, std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < samples; ++n) {
    const std::size_t r = 2 + n % (r_max - 1);
    const zl::TangencyTable t = random_triple_table(r, hi, rng);
    if (!triple_rule(t)) {
      out.fail("generator produced a table violating the triple rule");
      continue;
    }
    s12_one(t, out);
  }
  return out;
}

}  // namespace suites

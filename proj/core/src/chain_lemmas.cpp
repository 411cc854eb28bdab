#include "zl/chain_lemmas.hpp"

#include <algorithm>
#include <sstream>

#include <boost/rational.hpp>

#include "chain_formulas.hpp"
#include "zl/bounds.hpp"

namespace zl {

namespace {

// Grid values have denominators dividing 36 and stay far below 2^40, so a
// fixed-width exact rational suffices and avoids heap traffic.
using L = boost::rational<long long>;

class Recorder {
 public:
  Recorder(std::string name, std::string claim) {
    r_.name = std::move(name);
    r_.claim = std::move(claim);
  }
  // ok: the claim survives at this point; zero: it survives only weakly.
  template <class... Kv>
  void record(bool ok, bool zero, const Kv&... kv) {
    ++r_.checked;
    if (zero) ++r_.zero_steps;
    if (ok) return;
    ++r_.counterexamples;
    if (r_.examples.size() < 5) {
      std::ostringstream os;
      ((os << kv), ...);
      r_.examples.push_back(os.str());
    }
  }
  LemmaResult take() { return std::move(r_); }

 private:
  LemmaResult r_;
};

// Splits with k_3 = ... = k_{A-1} = 0 and T1 - T0 + A - 1 = R.
struct Split {
  long long T0, T21;
};
std::vector<Split> splits(long long R, long long A) {
  std::vector<Split> out;
  for (long long kA = 0; (A - 1) * kA <= R - A + 1; ++kA) {
    const long long k2 = R - A + 1 - (A - 1) * kA;
    const long long T0 = k2 + kA, T1 = 2 * k2 + A * kA, T2 = 4 * k2 + A * A * kA;
    out.push_back({T0, T2 - T1});
  }
  return out;
}

}  // namespace

bool LemmaReport::ok() const {
  return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaResult& l) { return l.ok(); });
}

LemmaReport check_chain_lemmas(const LemmaGrid& G) {
  LemmaReport rep;

  Recorder e1s("E1-decreasing-in-s", "cuspidal finite: E1 strictly decreases in s at fixed N (q >= p+1, m_1 >= 2)");
  Recorder d3q("Delta3-nondecreasing-in-q", "cuspidal finite: Delta3 nondecreasing in q when N >= 2g + 3");
  Recorder d4p("Delta4-nondecreasing-in-p", "cuspidal finite: Delta4 nondecreasing in p when Ib holds");
  Recorder d7c("Delta7-concave-in-p'", "cuspidal infinity: p' -> Delta7 concave on [3, p/2]");
  Recorder e4s("E-decreasing-in-s", "multi-branch finite: E strictly decreases in s at fixed N, R, k");
  Recorder e2r("E2-decreasing-in-r", "multi-branch finite: E2 strictly decreases in r");
  Recorder e3a("E3-decreasing-in-A", "multi-branch finite: E3 strictly decreases in A");
  Recorder d10c("Delta10-concave-in-p'", "multi-branch infinity: p' -> Delta10 concave on [3, p/2]");

  for (long long gi = 0; gi <= G.g_max; ++gi) {
    const L g(gi);
    for (long long Ni = 1; Ni <= G.N_max; ++Ni) {
      const L N(Ni);
      const bool ia = holds(BoundKind::Ia, Ni, {gi, 0});
      const bool ib = holds(BoundKind::Ib, Ni, {gi, 0});
      for (long long pi = 2; pi <= G.p_max; ++pi) {
        const L p(pi);
        for (long long qi = pi + 1; qi <= pi + G.q_span; ++qi) {
          const L q(qi);
          // m_1 = p + 2g - N + 1 - s at the multiplicity bound.
          L prev = chain::t1_E1(g, p, q, N - 1, L(0));
          for (long long s = 0; s + 1 <= Ni - 1 && pi + 2 * gi - Ni + 1 - (s + 1) >= 2; ++s) {
            const L next = chain::t1_E1(g, p, q, N - 2 - s, L(s + 1));
            e1s.record(next < prev, false, "g=", gi, " N=", Ni, " p=", pi, " q=", qi, " s=", s);
            prev = next;
          }
          if (ia) {
            const L a = chain::t1_D3(g, N, p, q), b = chain::t1_D3(g, N, p, q + 1);
            d3q.record(b >= a, b == a, "g=", gi, " N=", Ni, " p=", pi, " q=", qi);
          }
        }
        if (ib && pi >= Ni + 1 - 2 * gi) {
          const L a = chain::t1_D4(g, N, p), b = chain::t1_D4(g, N, p + 1);
          d4p.record(b >= a, b == a, "g=", gi, " N=", Ni, " p=", pi);
        }
        if (pi >= 6) {
          for (long long pp = 4; 2 * (pp + 1) <= pi; ++pp) {
            const L lo = chain::t1i_D7(g, N, p, L(pp - 1)), mid = chain::t1i_D7(g, N, p, L(pp)),
                    hi = chain::t1i_D7(g, N, p, L(pp + 1));
            d7c.record(lo + hi <= 2 * mid, lo + hi == 2 * mid, "g=", gi, " N=", Ni, " p=", pi, " p'=", pp);
          }
        }
      }
    }
  }

  for (long long gi = 0; gi <= G.g_max; ++gi) {
    const L g(gi);
    for (long long Ri = 1; Ri <= G.R_max; ++Ri) {
      const L R(Ri);
      for (long long Ni = 1; Ni <= G.N_max; ++Ni) {
        const L N(Ni);
        for (long long pi = 2; pi <= G.p_max; ++pi) {
          const L p(pi);
          for (long long qi = pi + 1; qi <= pi + G.q_span; ++qi) {
            const L q(qi);
            for (long long A = 2; A <= std::min<long long>(G.A_max, Ri + 1); ++A) {
              const L LA(A);
              for (const Split& sp : splits(Ri, A)) {
                // B = A, so T1 = R + T0 - A + 1; r + s = N - 1 - T0 stays fixed.
                const L T0(sp.T0), T1(Ri + sp.T0 - A + 1), T21(sp.T21);
                auto E = [&](long long rr, long long ss) {
                  const L ext = chain::t2_ext_nu1(g, R, p, q, L(rr), L(ss), T0, T1);
                  const L m1 = chain::t2_m1_max(g, p, L(rr), L(ss), LA);
                  return chain::t2_E(ext, L(rr), L(ss), T21, m1, LA);
                };
                const long long total = Ni - 1 - sp.T0;
                if (total < 1) continue;
                L prev = E(total, 0);
                // s + 1 must keep m_1 >= max(A, 3) under the multiplicity bound.
                for (long long s = 0; s + 1 <= total; ++s) {
                  const long long r1 = total - s - 1;
                  if (pi + 2 * gi - 1 + A - r1 - 2 * (s + 1) < std::max<long long>(A, 3)) break;
                  const L next = E(r1, s + 1);
                  e4s.record(next < prev, false, "g=", gi, " R=", Ri, " N=", Ni, " p=", pi, " q=", qi, " A=", A,
                             " T0=", sp.T0, " s=", s);
                  prev = next;
                }
              }
              L prev = chain::t2_E2(g, R, N, p, q, L(0), LA);
              for (long long r = 0; r + 1 <= pi + 2 * gi - 1 && Ni >= r + 2; ++r) {
                const L next = chain::t2_E2(g, R, N, p, q, L(r + 1), LA);
                e2r.record(next < prev, false, "g=", gi, " R=", Ri, " N=", Ni, " p=", pi, " q=", qi, " A=", A,
                           " r=", r);
                prev = next;
              }
            }
            if (pi + 2 * gi + 1 + Ri - Ni >= 1) {
              L prev = chain::t2_E3(g, R, N, p, q, L(2));
              for (long long A = 2; A < G.A_max; ++A) {
                const L next = chain::t2_E3(g, R, N, p, q, L(A + 1));
                e3a.record(next < prev, false, "g=", gi, " R=", Ri, " N=", Ni, " p=", pi, " q=", qi, " A=", A);
                prev = next;
              }
            }
          }
          if (pi >= 6) {
            for (long long pp = 4; 2 * (pp + 1) <= pi; ++pp) {
              const L lo = chain::t2i_D10(g, R, N, p, L(pp - 1)), mid = chain::t2i_D10(g, R, N, p, L(pp)),
                      hi = chain::t2i_D10(g, R, N, p, L(pp + 1));
              d10c.record(lo + hi <= 2 * mid, lo + hi == 2 * mid, "g=", gi, " R=", Ri, " N=", Ni, " p=", pi,
                          " p'=", pp);
            }
            const long long p0 = Ni - Ri - 2 * gi + 1;
            if (pi >= p0 && holds(BoundKind::Je, Ni, {gi, Ri})) {
              const L d12 = chain::t2i_D12(g, R, N, p), d13 = chain::t2i_D13(g, R, N);
              ++rep.delta12_points;
              if (d12 >= d13) ++rep.delta12_ge_delta13;
              if (d12 <= d13) ++rep.delta12_le_delta13;
            }
          }
        }
      }
    }
  }

  for (Recorder* r : {&e1s, &d3q, &d4p, &d7c, &e4s, &e2r, &e3a, &d10c}) rep.lemmas.push_back(r->take());
  return rep;
}

}  // namespace zl

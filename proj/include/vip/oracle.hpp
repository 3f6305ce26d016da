#pragma once

// Slow, literal reference computations for cross-checking the fast paths.
// They read generators out of MonomialIdeal/Filtration but do their own
// algebra on raw exponent lists: no memoization, no LP.

#include <cstdint>
#include <random>
#include <vector>

#include "vip/error.hpp"
#include "vip/filtration.hpp"
#include "vip/rational.hpp"
#include "vip/thresholds.hpp"

namespace vip::oracle {

using GenList = std::vector<Exponent>;

namespace detail {

inline bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline GenList prune(const GenList& gens) {
  GenList out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(gens[j], gens[i]) && (gens[j] != gens[i] || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

inline GenList multiply(const GenList& a, const GenList& b) {
  GenList out;
  for (const auto& g : a)
    for (const auto& h : b) {
      Exponent s(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) s[i] = g[i] + h[i];
      out.push_back(s);
    }
  return prune(out);
}

inline GenList raise(const GenList& a, long e, std::size_t n) {
  GenList out{Exponent(n)};
  for (long i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

// b ⊆ a
inline bool includes(const GenList& a, const GenList& b) {
  for (const auto& g : b) {
    bool ok = false;
    for (const auto& h : a)
      if (divides(h, g)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

inline long ceil_div(long m, const Rational& b) {
  // smallest e with e·b ≥ m
  long e = 0;
  while (Rational(e) * b < Rational(m)) ++e;
  return e;
}

inline void compositions(long m, std::size_t parts, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (parts == 1) {
    cur.push_back(m);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (long i = 0; i <= m; ++i) {
    cur.push_back(i);
    compositions(m - i, parts - 1, cur, out);
    cur.pop_back();
  }
}

// Literal m-th term.
inline GenList literal_term(const Filtration& f, long m) {
  const std::size_t n = f.dim();
  if (m == 0) return GenList{Exponent(n)};
  if (f.is_special_sum()) {
    const auto& pairs = f.special().pairs;
    std::vector<std::vector<long>> comps;
    std::vector<long> cur;
    compositions(m, pairs.size(), cur, comps);
    GenList all;
    for (const auto& c : comps) {
      GenList t{Exponent(n)};
      for (std::size_t j = 0; j < pairs.size(); ++j)
        t = multiply(t, raise(pairs[j].ideal.generators(), ceil_div(c[j], pairs[j].target), n));
      all.insert(all.end(), t.begin(), t.end());
    }
    return prune(all);
  }
  const auto& pp = f.parametric_data();
  GenList t{Exponent(n)};
  for (const auto& fac : pp.factors) t = multiply(t, raise(fac.base.generators(), fac.exponent.at(m), n));
  if (!pp.generators.empty()) {
    GenList g;
    for (const auto& ag : pp.generators) g.push_back(ag.at(m));
    t = multiply(t, prune(g));
  }
  return t;
}

inline Rational eval_min(const RationalVector& w, const GenList& gens) {
  Rational best;
  bool have = false;
  for (const auto& g : gens) {
    Rational s(0);
    for (std::size_t i = 0; i < g.size(); ++i) s += w[i] * Rational(g[i]);
    if (!have || s < best) best = s;
    have = true;
  }
  return best;
}

}  // namespace detail

struct OracleOrder {
  long value = 0;
  bool capped = false;  // a ⊆ F_{m_cap}: the true order may be larger
};

/// Largest m ≤ m_cap with a ⊆ F_m, by expanding every term literally.
inline OracleOrder order_bruteforce(const Filtration& f, const MonomialIdeal& a, long m_cap) {
  if (m_cap < 1) throw Error(ErrorKind::Domain, "m_cap must be at least 1");
  OracleOrder out;
  for (long m = 0; m <= m_cap; ++m)
    if (detail::includes(detail::literal_term(f, m), a.generators())) out.value = m;
  out.capped = out.value == m_cap;
  return out;
}

struct SweepResult {
  Rational value;
  bool heuristic = false;
};

/// Smallest grid point i/D with q ⊄ 𝒥((i/D)·F).
inline SweepResult lct_sweep_oracle(const MonomialIdeal& q, const Filtration& f, long denominator, long p_max,
                                    long max_numerator = -1) {
  if (denominator < 1) throw Error(ErrorKind::Domain, "denominator cap must be at least 1");
  if (max_numerator < 0) max_numerator = 64 * denominator;
  SweepResult out;
  for (long i = 0; i <= max_numerator; ++i) {
    Rational lambda(i, denominator);
    MultiplierIdeal mi = asymptotic_multiplier_ideal(f, lambda, p_max);
    if (!mi.stabilized) out.heuristic = true;
    if (!contains(mi.ideal, q)) {
      out.value = lambda;
      return out;
    }
  }
  throw Error(ErrorKind::Degenerate, "lct sweep exhausted its grid");
}

/// Minimum of v(a)/v(F•) over `trials` random strictly positive integer
/// weights; an upper bound for ρ(a; F).
inline Rational ratio_sampling_oracle(const Filtration& f, const MonomialIdeal& a, long trials, std::uint64_t seed,
                                      long max_weight = 64) {
  if (trials < 1) throw Error(ErrorKind::Domain, "trials must be at least 1");
  if (a.is_zero()) throw Error(ErrorKind::Domain, "ideal must be nonzero");
  const std::size_t n = f.dim();
  std::mt19937_64 rng(seed);
  Rational best;
  bool have = false;
  for (long t = 0; t < trials; ++t) {
    RationalVector w(n);
    for (auto& x : w) x = Rational(static_cast<long>(rng() % static_cast<std::uint64_t>(max_weight)) + 1);
    Rational num = detail::eval_min(w, a.generators());
    Rational den;
    if (f.is_special_sum()) {
      bool first = true;
      for (const auto& p : f.special().pairs) {
        Rational q = detail::eval_min(w, p.ideal.generators()) / p.target;
        if (first || q < den) den = q;
        first = false;
      }
    } else {
      // Slope of v(F_k) read off two far-apart literal terms.
      const long k1 = 1L << 20, k2 = 1L << 21;
      const auto& pp = f.parametric_data();
      Rational d(0);
      for (const auto& fac : pp.factors)
        d += Rational(fac.exponent.slope) * detail::eval_min(w, fac.base.generators());
      if (!pp.generators.empty()) {
        GenList g1, g2;
        for (const auto& ag : pp.generators) {
          g1.push_back(ag.at(k1));
          g2.push_back(ag.at(k2));
        }
        // The minimum of affine forms is eventually one form; compare
        // finite differences at k1 and k2 (exact once both lie on it).
        Rational slope2 = (detail::eval_min(w, g2) - detail::eval_min(w, g1)) / Rational(k2 - k1);
        d += slope2;
      }
      den = d;
    }
    if (den.sign() <= 0) continue;
    Rational ratio = num / den;
    if (!have || ratio < best) best = ratio;
    have = true;
  }
  if (!have) throw Error(ErrorKind::Degenerate, "no sampled weight had positive filtration support");
  return best;
}

}  // namespace vip::oracle

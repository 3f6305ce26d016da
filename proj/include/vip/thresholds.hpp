#pragma once

// Jumping numbers lct^q(F), asymptotic multiplier ideals, the defect
// sequence k ↦ lct(q^k; F) − kρ(q; F), and the Skoda containment check.

#include <string>
#include <vector>

#include "vip/asymptotics.hpp"
#include "vip/error.hpp"
#include "vip/filtration.hpp"
#include "vip/monomial.hpp"
#include "vip/parallel.hpp"

namespace vip {

struct JumpingNumber {
  Rational value;
  WeightValuation argmin;
  Exponent winner;
};

/// lct^q(F) = inf (A(α) + α(q)) / α(F•), solved as one LP per generator
/// of q. With q the unit ideal this is lct(F).
inline JumpingNumber lct_filtration(const MonomialIdeal& q, const Filtration& f, unsigned threads = 1) {
  RhoResult r = detail::minimize_over_support(f, q, true, threads);
  return JumpingNumber{r.value, r.argmin, r.winner};
}

struct MultiplierIdeal {
  MonomialIdeal ideal;
  bool stabilized = false;
  long attained_at = 1;  // smallest p whose candidate equals the maximum
};

/// Maximal element of {𝒥((λ/p)·F_p) : 1 ≤ p ≤ p_max}.
inline MultiplierIdeal asymptotic_multiplier_ideal(const Filtration& f, const Rational& lambda, long p_max,
                                                   unsigned threads = 1) {
  if (lambda.sign() < 0) throw Error(ErrorKind::Domain, "lambda must be nonnegative");
  if (p_max < 1) throw Error(ErrorKind::Domain, "p_max must be at least 1");
  const std::size_t n = f.dim();
  if (lambda.is_zero()) return MultiplierIdeal{MonomialIdeal::unit(n), true, 1};

  std::vector<MonomialIdeal> terms;
  for (long p = 1; p <= p_max; ++p) terms.push_back(f.term(p));
  auto candidates = parallel_map(static_cast<std::size_t>(p_max), threads, [&](std::size_t i) {
    return howald_multiplier(terms[i], lambda / Rational(static_cast<long>(i) + 1));
  });

  const long window = (p_max + 3) / 4;
  MonomialIdeal join = MonomialIdeal::zero(n);
  MonomialIdeal before_window = MonomialIdeal::zero(n);
  for (long p = 1; p <= p_max; ++p) {
    join = sum(join, candidates[static_cast<std::size_t>(p - 1)]);
    if (p == p_max - window) before_window = join;
  }
  MultiplierIdeal out;
  out.ideal = join;
  bool found = false;
  for (long p = 1; p <= p_max && !found; ++p)
    if (candidates[static_cast<std::size_t>(p - 1)] == join) {
      out.attained_at = p;
      found = true;
    }
  if (!found)
    throw Error(ErrorKind::Consistency, "multiplier-ideal candidates have no maximal element up to p_max");
  out.stabilized = p_max - window >= 1 ? before_window == join : false;
  return out;
}

struct LctInterval {
  Rational lower;  // q ⊆ 𝒥(lower·F)
  Rational upper;  // q ⊄ 𝒥(upper·F)
  bool heuristic = false;  // some multiplier ideal used was not stabilized
};

/// Brackets lct^q(F) by bisection on q ⊆ 𝒥(λ·F) until the interval is no
/// wider than `width`.
inline LctInterval lct_via_multiplier(const MonomialIdeal& q, const Filtration& f, long p_max,
                                      const Rational& width = Rational(1, 64), unsigned threads = 1) {
  if (q.is_zero()) throw Error(ErrorKind::Domain, "q must be nonzero");
  LctInterval out;
  auto inside = [&](const Rational& lambda) {
    MultiplierIdeal mi = asymptotic_multiplier_ideal(f, lambda, p_max, threads);
    if (!mi.stabilized) out.heuristic = true;
    return contains(mi.ideal, q);
  };
  out.lower = Rational(0);
  out.upper = Rational(1);
  for (int doubling = 0; inside(out.upper); ++doubling) {
    if (doubling > 40) throw Error(ErrorKind::Degenerate, "multiplier bisection found no upper bound");
    out.lower = out.upper;
    out.upper *= Rational(2);
  }
  while (width < out.upper - out.lower) {
    Rational mid = (out.lower + out.upper) / Rational(2);
    if (inside(mid))
      out.lower = mid;
    else
      out.upper = mid;
  }
  return out;
}

enum class DefectVerdict { BoundedCertified, BoundedEvidence, Growing };

inline const char* to_string(DefectVerdict v) {
  switch (v) {
    case DefectVerdict::BoundedCertified: return "BOUNDED-CERTIFIED";
    case DefectVerdict::BoundedEvidence: return "BOUNDED-EVIDENCE";
    case DefectVerdict::Growing: return "GROWING";
  }
  return "?";
}

struct DefectRow {
  long k = 0;
  Rational lct;
  Rational defect;
};

struct DefectReport {
  std::vector<DefectRow> rows;
  Rational rho;
  WeightValuation witness = WeightValuation::ones(1);
  Rational witness_bound;  // A(α)/α(F•) at the ρ argmin
  Rational max_defect;
  bool monotone = true;
  DefectVerdict verdict = DefectVerdict::BoundedEvidence;
};

/// lct(q^k; F) − k·ρ(q; F) for k = 1..k_max, with the log-discrepancy bound
/// of the ρ-minimizing weight as an upper bound on every defect.
inline DefectReport defect_sequence(const MonomialIdeal& q, const Filtration& f, long k_max, unsigned threads = 1) {
  if (q.is_zero()) throw Error(ErrorKind::Domain, "q must be nonzero");
  if (k_max < 1) throw Error(ErrorKind::Domain, "k_max must be at least 1");
  RhoResult rho = rho_exact(f, q, threads);
  DefectReport rep;
  rep.rho = rho.value;
  rep.witness = rho.argmin;
  rep.witness_bound = rho.argmin.log_discrepancy() / asymptotic_support(f, rho.argmin);

  std::vector<MonomialIdeal> powers;
  MonomialIdeal qk = MonomialIdeal::unit(f.dim());
  for (long k = 1; k <= k_max; ++k) {
    qk = product(qk, q);
    powers.push_back(qk);
  }
  auto lcts = parallel_map(powers.size(), threads,
                           [&](std::size_t i) { return lct_filtration(powers[i], f).value; });
  for (long k = 1; k <= k_max; ++k) {
    const Rational& l = lcts[static_cast<std::size_t>(k - 1)];
    rep.rows.push_back(DefectRow{k, l, l - Rational(k) * rho.value});
  }
  rep.max_defect = rep.rows[0].defect;
  for (std::size_t i = 1; i < rep.rows.size(); ++i) {
    if (rep.rows[i].defect < rep.rows[i - 1].defect) rep.monotone = false;
    rep.max_defect = max(rep.max_defect, rep.rows[i].defect);
  }
  if (rep.witness_bound < rep.max_defect)
    throw Error(ErrorKind::Consistency, "defect exceeds the log-discrepancy bound of the rho witness");
  if (rep.max_defect == rep.witness_bound)
    rep.verdict = DefectVerdict::BoundedCertified;
  else if (rep.rows.size() >= 2 && rep.rows[rep.rows.size() - 1].defect == rep.rows[rep.rows.size() - 2].defect)
    rep.verdict = DefectVerdict::BoundedEvidence;
  else if (rep.rows.size() >= 2)
    rep.verdict = DefectVerdict::Growing;
  return rep;
}

/// 𝒥(a^m) ⊆ a^(m−n+1) for m ≥ n.
inline bool skoda_check(const MonomialIdeal& a, long m) {
  if (!a.is_proper()) throw Error(ErrorKind::Domain, "Skoda check needs a nonzero proper ideal");
  const long n = static_cast<long>(a.dim());
  if (m < n) throw Error(ErrorKind::Domain, "Skoda check needs m >= n (m = " + std::to_string(m) + ", n = " +
                                                std::to_string(n) + ")");
  return contains(power(a, m - n + 1), howald_multiplier(a, Rational(m)));
}

}  // namespace vip

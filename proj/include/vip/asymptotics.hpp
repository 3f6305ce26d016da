#pragma once

// Asymptotic Samuel function: Fekete lower bounds from the order
// function, the exact invariant ρ as an LP over weight valuations, and
// saturation membership.

#include <optional>
#include <string>

#include "vip/error.hpp"
#include "vip/filtration.hpp"
#include "vip/lp.hpp"
#include "vip/monomial.hpp"

namespace vip {

struct SamuelBound {
  Rational lower;                // best quotient ν(a^k)/k found
  long at_k = 1;                 // first k achieving it
  std::optional<Rational> exact;  // present for interpolation filtrations
  std::string method;
  bool infinite = false;  // some order hit its cutoff
  long cutoff = 0;
};

/// Optimal weight valuation for an infimum of linear ratios.
struct RhoResult {
  Rational value;
  WeightValuation argmin;
  Exponent winner;          // generator attaining the minimum at argmin
  RationalVector aux;       // auxiliary LP coordinates at the optimum
};

/// max_{1≤k≤K} ν_F(a^k)/k.
inline SamuelBound samuel_lower_bound(const Filtration& f, const MonomialIdeal& a, long max_k,
                                      long cutoff = kDefaultOrderCutoff);

namespace detail {

inline WeightValuation weights_from_point(const RationalVector& point, std::size_t n) {
  return WeightValuation(RationalVector(point.begin(), point.begin() + static_cast<std::ptrdiff_t>(n)));
}

// inf over α ∈ support_constraints(F) of min_γ ⟨α, shift + γ⟩.
inline RhoResult minimize_over_support(const Filtration& f, const MonomialIdeal& a, bool add_log_discrepancy,
                                       unsigned threads) {
  if (a.is_zero()) throw Error(ErrorKind::Domain, "ideal must be nonzero");
  if (a.dim() != f.dim()) throw Error(ErrorKind::Dimension, "ideal and filtration dimensions differ");
  const std::size_t n = f.dim();
  ConstraintSet cs = support_constraints(f);
  std::vector<RationalVector> objectives;
  for (const auto& g : a.generators()) {
    RationalVector obj = to_rational(g);
    if (add_log_discrepancy)
      for (auto& c : obj) c += Rational(1);
    objectives.push_back(std::move(obj));
  }
  MinOfLinearResult r = minimize_min_of_linear(objectives, cs, threads);
  if (r.status == LpStatus::Infeasible) throw Error(ErrorKind::Degenerate, "filtration support degenerate");
  if (r.status == LpStatus::Unbounded)
    throw Error(ErrorKind::Consistency, "weight infimum unbounded below over nonnegative weights");
  RhoResult out{r.value, weights_from_point(r.point, n), a.generators()[r.winner],
                RationalVector(r.point.begin() + static_cast<std::ptrdiff_t>(n), r.point.end())};
  return out;
}

}  // namespace detail

/// ρ(a; F) = inf v(a)/v(F•) over weight valuations, normalized to
/// v(F•) ≥ 1.
inline RhoResult rho_exact(const Filtration& f, const MonomialIdeal& a, unsigned threads = 1) {
  return detail::minimize_over_support(f, a, false, threads);
}

/// Exact ν̄(a; F) for interpolation filtrations, where it coincides with ρ.
inline Rational samuel_exact(const Filtration& f, const MonomialIdeal& a, unsigned threads = 1) {
  if (!f.is_special_sum())
    throw Error(ErrorKind::Domain, "equality nu-bar = rho not guaranteed for parametric filtrations");
  return rho_exact(f, a, threads).value;
}

inline SamuelBound samuel_lower_bound(const Filtration& f, const MonomialIdeal& a, long max_k, long cutoff) {
  if (a.is_zero()) throw Error(ErrorKind::Domain, "ideal must be nonzero");
  if (max_k < 1) throw Error(ErrorKind::Domain, "estimate depth K must be at least 1");
  SamuelBound out;
  out.method = "fekete-truncation";
  out.lower = Rational(0);
  out.at_k = 1;
  bool have = false;
  MonomialIdeal ak = MonomialIdeal::unit(a.dim());
  for (long k = 1; k <= max_k; ++k) {
    ak = product(ak, a);
    OrderValue o = order(f, ak, cutoff);
    if (o.infinite) {
      out.infinite = true;
      out.cutoff = o.cutoff;
      out.at_k = k;
      out.lower = Rational(o.value, k);
      return out;
    }
    Rational q(o.value, k);
    if (!have || out.lower < q) {
      out.lower = q;
      out.at_k = k;
      have = true;
    }
  }
  if (f.is_special_sum()) {
    out.exact = samuel_exact(f, a);
    if (*out.exact < out.lower)
      throw Error(ErrorKind::Consistency, "Fekete lower bound exceeds the exact asymptotic Samuel value");
  }
  return out;
}

/// Whether x^u lies in the saturation at level t, i.e. ρ(⟨x^u⟩; F) ≥ t.
inline bool saturation_member(const Filtration& f, const Exponent& u, const Rational& t) {
  if (t.sign() < 0) throw Error(ErrorKind::Domain, "saturation level must be nonnegative");
  if (t.is_zero()) return true;
  auto mono = MonomialIdeal::generated_by(f.dim(), {u});
  return !(rho_exact(f, mono).value < t);
}

}  // namespace vip

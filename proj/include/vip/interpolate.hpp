#pragma once

// Decision procedures for valuative interpolation of monomial ideals:
// does a valuation with v(a_j) = b_j exist (finite case), and does one with
// finite log discrepancy exist for an infinite sequence of conditions
// (checked on prefixes).

#include <optional>
#include <string>
#include <vector>

#include "vip/asymptotics.hpp"
#include "vip/error.hpp"
#include "vip/filtration.hpp"
#include "vip/monomial.hpp"
#include "vip/thresholds.hpp"

namespace vip {

struct InterpolationProblem {
  std::size_t dim = 0;
  std::vector<TargetPair> pairs;
  /// Infinite mode only: the declared pairs repeat cyclically beyond the
  /// list. Without it the prefix is limited to the declared pairs.
  bool cyclic_continuation = false;

  void validate() const {
    if (pairs.empty()) throw Error(ErrorKind::Domain, "interpolation problem without target pairs");
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (pairs[j].ideal.dim() != dim) throw Error(ErrorKind::Dimension, "target ideal of wrong dimension");
      if (!pairs[j].ideal.is_proper())
        throw Error(ErrorKind::Domain, "target ideal " + std::to_string(j + 1) + " must be nonzero and proper");
      if (pairs[j].target.sign() <= 0)
        throw Error(ErrorKind::Domain, "target value " + std::to_string(j + 1) + " must be positive");
    }
  }

  std::vector<TargetPair> prefix(std::size_t r) const {
    if (!cyclic_continuation && r > pairs.size())
      throw Error(ErrorKind::Domain, "prefix length " + std::to_string(r) + " exceeds the " +
                                         std::to_string(pairs.size()) + " declared pairs");
    std::vector<TargetPair> out;
    for (std::size_t j = 0; j < r; ++j) out.push_back(pairs[j % pairs.size()]);
    return out;
  }
};

enum class Verdict { Exists, NotExists };

inline const char* to_string(Verdict v) { return v == Verdict::Exists ? "EXISTS" : "NOT_EXISTS"; }

/// Tight support constraint ⟨α, δ⟩ = b_j at the optimal weight.
struct ActiveConstraint {
  std::size_t pair = 0;  // 0-based index of the pair
  Exponent generator;
};

struct Certificate {
  Verdict verdict = Verdict::NotExists;
  Rational samuel_value;
  Rational target_sum;
  std::optional<WeightValuation> witness;
  std::vector<Rational> witness_values;  // v_witness(a_j), equal to b_j
  std::optional<Rational> log_discrepancy;
  // Diagnostics, present for both verdicts.
  WeightValuation optimal_weights = WeightValuation::ones(1);
  Exponent winning_generator;
  std::vector<ActiveConstraint> active;
};

namespace detail {

inline MonomialIdeal product_of(const std::vector<TargetPair>& pairs) {
  MonomialIdeal a = MonomialIdeal::unit(pairs.at(0).ideal.dim());
  for (const auto& p : pairs) a = product(a, p.ideal);
  return a;
}

inline Certificate certify(const std::vector<TargetPair>& pairs, const MonomialIdeal& prod, unsigned threads) {
  Filtration f = Filtration::special_sum(pairs);
  RhoResult rho = rho_exact(f, prod, threads);
  Certificate c;
  c.samuel_value = rho.value;
  c.target_sum = Rational(0);
  for (const auto& p : pairs) c.target_sum += p.target;
  c.optimal_weights = rho.argmin;
  c.winning_generator = rho.winner;
  for (std::size_t j = 0; j < pairs.size(); ++j)
    for (const auto& g : pairs[j].ideal.generators())
      if (rho.argmin.on_monomial(g) == pairs[j].target) c.active.push_back(ActiveConstraint{j, g});

  if (c.samuel_value < c.target_sum)
    throw Error(ErrorKind::Consistency, "asymptotic Samuel value " + c.samuel_value.str() +
                                            " below the target sum " + c.target_sum.str());
  if (c.target_sum < c.samuel_value) {
    c.verdict = Verdict::NotExists;
    return c;
  }
  c.verdict = Verdict::Exists;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    Rational v = weight_value(rho.argmin, pairs[j].ideal).value();
    if (!(v == pairs[j].target))
      throw Error(ErrorKind::Consistency, "witness value " + v.str() + " on pair " + std::to_string(j + 1) +
                                              " differs from target " + pairs[j].target.str());
    c.witness_values.push_back(v);
  }
  c.witness = rho.argmin;
  c.log_discrepancy = rho.argmin.log_discrepancy();
  return c;
}

}  // namespace detail

/// EXISTS iff ν̄_{I•}(a_1⋯a_r) = Σ b_j, with the LP's optimal weight as a
/// witness; otherwise NOT_EXISTS with ν̄ > Σ b_j.
inline Certificate decide_finite(const InterpolationProblem& p, unsigned threads = 1) {
  p.validate();
  return detail::certify(p.pairs, detail::product_of(p.pairs), threads);
}

enum class PrefixVerdict { Fails, BoundedCertified, BoundedEvidence };

inline const char* to_string(PrefixVerdict v) {
  switch (v) {
    case PrefixVerdict::Fails: return "FAILS";
    case PrefixVerdict::BoundedCertified: return "BOUNDED-CERTIFIED";
    case PrefixVerdict::BoundedEvidence: return "BOUNDED-EVIDENCE";
  }
  return "?";
}

struct PrefixRow {
  long r = 0;
  Certificate certificate;
  std::optional<DefectReport> defects;  // computed only when the prefix passes
  bool witness_positive = false;
};

struct PrefixReport {
  std::vector<PrefixRow> rows;
  PrefixVerdict verdict = PrefixVerdict::BoundedEvidence;
  std::optional<long> failed_at;
  Rational sup_defect;     // max over computed (r, k)
  Rational uniform_bound;  // max_r A(α_r)
  bool witness_bound_nonincreasing_tail = false;
  std::string note;
};

/// Whether every variable has a pure power among the generators of the
/// declared pairs (monomial form of √(Σ a_j) = m).
inline bool radical_condition(const InterpolationProblem& p) {
  for (std::size_t i = 0; i < p.dim; ++i) {
    bool found = false;
    for (const auto& pr : p.pairs)
      for (const auto& g : pr.ideal.generators())
        if (g[i] > 0 && g.degree() == g[i]) found = true;
    if (!found) return false;
  }
  return true;
}

inline PrefixReport decide_infinite_prefix(const InterpolationProblem& p, long r_max, long k_max,
                                           unsigned threads = 1) {
  p.validate();
  if (r_max < 1 || k_max < 1) throw Error(ErrorKind::Domain, "r_max and k_max must be at least 1");
  if (!radical_condition(p))
    throw Error(ErrorKind::Domain,
                "radical condition fails: the sum of the declared ideals must have radical equal to the maximal "
                "ideal (a pure power of every variable)");
  auto pairs = p.prefix(static_cast<std::size_t>(r_max));

  PrefixReport rep;
  rep.sup_defect = Rational(0);
  rep.uniform_bound = Rational(0);
  MonomialIdeal prod = MonomialIdeal::unit(p.dim);
  for (long r = 1; r <= r_max; ++r) {
    std::vector<TargetPair> pre(pairs.begin(), pairs.begin() + r);
    prod = product(prod, pre.back().ideal);
    PrefixRow row;
    row.r = r;
    row.certificate = detail::certify(pre, prod, threads);
    if (row.certificate.verdict == Verdict::NotExists) {
      rep.rows.push_back(std::move(row));
      rep.verdict = PrefixVerdict::Fails;
      rep.failed_at = r;
      rep.note = "finite interpolation fails at prefix " + std::to_string(r) +
                 "; every longer prefix fails too, so no valuation with finite log discrepancy exists";
      return rep;
    }
    row.witness_positive = true;
    for (const auto& w : row.certificate.witness->weights())
      if (w.sign() <= 0) row.witness_positive = false;
    row.defects = defect_sequence(prod, Filtration::special_sum(pre), k_max, threads);
    rep.sup_defect = max(rep.sup_defect, row.defects->max_defect);
    rep.uniform_bound = max(rep.uniform_bound, *row.certificate.log_discrepancy);
    rep.rows.push_back(std::move(row));
  }

  const std::size_t tail = (rep.rows.size() + 1) / 2;
  rep.witness_bound_nonincreasing_tail = true;
  for (std::size_t i = rep.rows.size() - tail + 1; i < rep.rows.size(); ++i)
    if (*rep.rows[i - 1].certificate.log_discrepancy < *rep.rows[i].certificate.log_discrepancy)
      rep.witness_bound_nonincreasing_tail = false;

  if (rep.sup_defect == rep.uniform_bound && rep.witness_bound_nonincreasing_tail) {
    rep.verdict = PrefixVerdict::BoundedCertified;
    rep.note = "every prefix interpolates and the computed defect reaches the uniform witness bound";
  } else {
    rep.verdict = PrefixVerdict::BoundedEvidence;
    rep.note = "every prefix interpolates; the defect supremum is only sampled up to the requested depth";
  }
  return rep;
}

}  // namespace vip

#pragma once

// Filtrations of monomial ideals: the interpolation filtration
// Σ (1/b_j · a_j)• built from target pairs, and parametric products
// Π B_i^(p_i k + q_i) · G(k) whose last factor has affine generators.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vip/error.hpp"
#include "vip/lp.hpp"
#include "vip/monomial.hpp"
#include "vip/rational.hpp"

namespace vip {

/// One interpolation condition v(a) = b.
struct TargetPair {
  MonomialIdeal ideal;
  Rational target;
};

struct AffineExponent {
  long slope = 0;
  long offset = 0;
  long at(long k) const { return slope * k + offset; }
  bool is_constant() const { return slope == 0; }
  friend bool operator==(const AffineExponent&, const AffineExponent&) = default;
};

struct PowerFactor {
  MonomialIdeal base;
  AffineExponent exponent;
};

/// Generator x^(slope·k + offset) of the affine-generator ideal G(k).
struct AffineGenerator {
  Exponent slope;
  Exponent offset;
  Exponent at(long k) const {
    Exponent e(slope.size());
    for (std::size_t i = 0; i < slope.size(); ++i) e[i] = slope[i] * k + offset[i];
    return e;
  }
};

struct SpecialSum {
  std::vector<TargetPair> pairs;
};

struct ParametricProduct {
  std::vector<PowerFactor> factors;
  std::vector<AffineGenerator> generators;  // empty: no G(k) factor
};

/// Finite check of the filtration axioms, recorded for reports.
struct AxiomCheck {
  long bound = 0;
  bool graded = true;
  bool decreasing = true;
};

/// Value of the order function; `infinite` marks a scan that hit `cutoff`
/// without finding the end.
struct OrderValue {
  long value = 0;
  bool infinite = false;
  long cutoff = 0;
  friend bool operator==(const OrderValue&, const OrderValue&) = default;
};

inline constexpr long kDefaultAxiomBound = 12;
inline constexpr long kDefaultOrderCutoff = 256;

namespace detail {

struct TermCache {
  std::mutex mu;
  // Interpolation filtrations: partial[j][m] is the m-th term of the sum of
  // the first j+1 atoms; powers[j][e] = a_j^e.
  std::vector<std::vector<MonomialIdeal>> partial;
  std::vector<std::vector<MonomialIdeal>> powers;
  std::map<long, MonomialIdeal> parametric;
};

}  // namespace detail

class Filtration {
 public:
  static Filtration special_sum(std::vector<TargetPair> pairs) {
    if (pairs.empty()) throw Error(ErrorKind::Domain, "interpolation filtration needs at least one pair");
    const std::size_t n = pairs[0].ideal.dim();
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const auto& p = pairs[j];
      if (p.ideal.dim() != n) throw Error(ErrorKind::Dimension, "target ideals of different dimensions");
      if (!p.ideal.is_proper())
        throw Error(ErrorKind::Domain, "target ideal " + std::to_string(j + 1) + " must be nonzero and proper");
      if (p.target.sign() <= 0)
        throw Error(ErrorKind::Domain, "target value " + std::to_string(j + 1) + " must be positive");
    }
    Filtration f(n);
    f.data_ = SpecialSum{std::move(pairs)};
    return f;
  }

  static Filtration parametric(std::size_t n, std::vector<PowerFactor> factors,
                               std::vector<AffineGenerator> generators, long check_bound = kDefaultAxiomBound) {
    for (const auto& fac : factors) {
      if (fac.base.dim() != n) throw Error(ErrorKind::Dimension, "filtration factor of wrong dimension");
      if (fac.base.is_zero()) throw Error(ErrorKind::Domain, "filtration factor is the zero ideal");
      if (fac.exponent.slope < 0 || fac.exponent.offset < 0)
        throw Error(ErrorKind::Domain, "filtration exponents must be natural numbers");
    }
    for (const auto& g : generators)
      if (g.slope.size() != n || g.offset.size() != n)
        throw Error(ErrorKind::Dimension, "affine generator of wrong dimension");
    Filtration f(n);
    f.data_ = ParametricProduct{std::move(factors), std::move(generators)};
    f.check_ = f.validate_axioms(check_bound);
    if (!f.check_->graded || !f.check_->decreasing)
      throw Error(ErrorKind::Domain, std::string("parametric family is not a filtration: ") +
                                         (!f.check_->graded ? "J_p*J_q not contained in J_(p+q)"
                                                            : "J_(m+1) not contained in J_m") +
                                         " within check bound " + std::to_string(check_bound));
    return f;
  }

  std::size_t dim() const { return dim_; }
  bool is_special_sum() const { return std::holds_alternative<SpecialSum>(data_); }
  const SpecialSum& special() const { return std::get<SpecialSum>(data_); }
  const ParametricProduct& parametric_data() const { return std::get<ParametricProduct>(data_); }
  const std::optional<AxiomCheck>& axiom_check() const { return check_; }

  /// m-th term; the 0-th term is the unit ideal.
  MonomialIdeal term(long m) const {
    if (m < 0) throw Error(ErrorKind::Domain, "negative filtration index");
    if (m == 0) return MonomialIdeal::unit(dim_);
    if (is_special_sum()) return special_term(m);
    std::lock_guard lock(cache_->mu);
    auto it = cache_->parametric.find(m);
    if (it != cache_->parametric.end()) return it->second;
    MonomialIdeal t = parametric_term_uncached(m);
    cache_->parametric.emplace(m, t);
    return t;
  }

  /// Direct evaluation of a parametric term, bypassing the cache.
  MonomialIdeal parametric_term_uncached(long m) const {
    const auto& pp = parametric_data();
    MonomialIdeal t = MonomialIdeal::unit(dim_);
    for (const auto& fac : pp.factors) t = product(t, power(fac.base, fac.exponent.at(m)));
    if (!pp.generators.empty()) {
      std::vector<Exponent> g;
      for (const auto& ag : pp.generators) g.push_back(ag.at(m));
      t = product(t, MonomialIdeal::generated_by(dim_, std::move(g)));
    }
    return t;
  }

 private:
  explicit Filtration(std::size_t n) : dim_(n), cache_(std::make_shared<detail::TermCache>()) {}

  AxiomCheck validate_axioms(long bound) const {
    AxiomCheck c;
    c.bound = bound;
    for (long m = 0; m < bound && c.decreasing; ++m)
      if (!contains(term(m), term(m + 1))) c.decreasing = false;
    for (long p = 1; p <= bound && c.graded; ++p)
      for (long q = p; q <= bound && c.graded; ++q)
        if (!contains(term(p + q), product(term(p), term(q)))) c.graded = false;
    return c;
  }

  MonomialIdeal special_term(long m) const {
    const auto& pairs = special().pairs;
    const std::size_t r = pairs.size();
    std::lock_guard lock(cache_->mu);
    auto& partial = cache_->partial;
    auto& powers = cache_->powers;
    if (partial.empty()) {
      partial.resize(r);
      powers.resize(r);
    }
    auto power_of = [&](std::size_t j, long e) -> const MonomialIdeal& {
      auto& pw = powers[j];
      if (pw.empty()) pw.push_back(MonomialIdeal::unit(dim_));
      while (static_cast<long>(pw.size()) <= e) pw.push_back(product(pw.back(), pairs[j].ideal));
      return pw[static_cast<std::size_t>(e)];
    };
    auto atom_exponent = [&](std::size_t j, long i) { return to_long((Rational(i) / pairs[j].target).ceil()); };

    for (std::size_t j = 0; j < r; ++j) {
      auto& level = partial[j];
      for (long mm = static_cast<long>(level.size()); mm <= m; ++mm) {
        if (j == 0) {
          level.push_back(power_of(0, atom_exponent(0, mm)));
          continue;
        }
        // Σ_i partial[j-1][mm-i] · a_j^⌈i/b_j⌉. Within a run of equal
        // exponents the largest i gives the largest summand.
        const auto& prev = partial[j - 1];
        MonomialIdeal acc = MonomialIdeal::zero(dim_);
        long i = 0;
        while (i <= mm) {
          long e = atom_exponent(j, i);
          long last = i;
          while (last + 1 <= mm && atom_exponent(j, last + 1) == e) ++last;
          acc = sum(acc, product(prev[static_cast<std::size_t>(mm - last)], power_of(j, e)));
          i = last + 1;
        }
        level.push_back(std::move(acc));
      }
    }
    return partial[r - 1][static_cast<std::size_t>(m)];
  }

  std::size_t dim_ = 0;
  std::variant<SpecialSum, ParametricProduct> data_;
  std::optional<AxiomCheck> check_;
  std::shared_ptr<detail::TermCache> cache_;
};

inline MonomialIdeal term(const Filtration& f, long m) { return f.term(m); }

/// v(F•) = lim v(F_m)/m, exact.
inline Rational asymptotic_support(const Filtration& f, const WeightValuation& v) {
  if (v.dim() != f.dim()) throw Error(ErrorKind::Dimension, "valuation and filtration dimensions differ");
  if (f.is_special_sum()) {
    const auto& pairs = f.special().pairs;
    Rational best = weight_value(v, pairs[0].ideal).value() / pairs[0].target;
    for (std::size_t j = 1; j < pairs.size(); ++j)
      best = min(best, weight_value(v, pairs[j].ideal).value() / pairs[j].target);
    return best;
  }
  const auto& pp = f.parametric_data();
  Rational total(0);
  for (const auto& fac : pp.factors)
    if (fac.exponent.slope != 0) total += Rational(fac.exponent.slope) * weight_value(v, fac.base).value();
  if (!pp.generators.empty()) {
    Rational best = v.on_monomial(pp.generators[0].slope);
    for (const auto& g : pp.generators) best = min(best, v.on_monomial(g.slope));
    total += best;
  }
  return total;
}

/// Polyhedral encoding of v(F•) ≥ 1 over (α, aux). Primary variables are
/// nonnegative weights, auxiliary ones are free.
inline ConstraintSet support_constraints(const Filtration& f) {
  const std::size_t n = f.dim();
  if (f.is_special_sum()) {
    ConstraintSet cs(n, 0);
    for (const auto& p : f.special().pairs)
      for (const auto& g : p.ideal.generators()) cs.add_ge(to_rational(g), p.target);
    return cs;
  }
  const auto& pp = f.parametric_data();
  std::size_t aux = 0;
  for (const auto& fac : pp.factors)
    if (fac.exponent.slope != 0) ++aux;
  const bool has_g = !pp.generators.empty();
  if (has_g) ++aux;
  ConstraintSet cs(n, aux);
  const std::size_t nv = n + aux;
  RationalVector total(nv, Rational(0));
  std::size_t slot = n;
  for (const auto& fac : pp.factors) {
    if (fac.exponent.slope == 0) continue;
    for (const auto& g : fac.base.generators()) {
      RationalVector row = to_rational(g);  // ⟨α,γ⟩ - t_i ≥ 0
      row.resize(nv, Rational(0));
      row[slot] = Rational(-1);
      cs.add_ge(std::move(row), Rational(0));
    }
    total[slot] = Rational(fac.exponent.slope);
    ++slot;
  }
  if (has_g) {
    for (const auto& g : pp.generators) {
      RationalVector row = to_rational(g.slope);  // ⟨α,A^g⟩ - u ≥ 0
      row.resize(nv, Rational(0));
      row[slot] = Rational(-1);
      cs.add_ge(std::move(row), Rational(0));
    }
    total[slot] = Rational(1);
  }
  cs.add_ge(std::move(total), Rational(1));
  return cs;
}

/// ν_F(a) = max{m : a ⊆ F_m}. Exact when v(F•) > 0 at the all-ones
/// weight, which bounds m by v(a)/v(F•); otherwise scans to `cutoff`.
inline OrderValue order(const Filtration& f, const MonomialIdeal& a, long cutoff = kDefaultOrderCutoff) {
  if (a.is_zero()) throw Error(ErrorKind::Domain, "order of the zero ideal");
  if (a.dim() != f.dim()) throw Error(ErrorKind::Dimension, "ideal and filtration dimensions differ");
  auto ones = WeightValuation::ones(f.dim());
  Rational support = asymptotic_support(f, ones);
  OrderValue out;
  if (support.sign() > 0) {
    long bound = to_long((weight_value(ones, a).value() / support).floor());
    for (long m = 1; m <= bound; ++m)
      if (!contains(f.term(m), a)) {
        out.value = m - 1;
        return out;
      }
    out.value = bound;
    return out;
  }
  for (long m = 1; m <= cutoff; ++m)
    if (!contains(f.term(m), a)) {
      out.value = m - 1;
      return out;
    }
  out.value = cutoff;
  out.infinite = true;
  out.cutoff = cutoff;
  return out;
}

}  // namespace vip

#pragma once

// Monomial ideals in n variables over a polynomial ring localized at the
// origin: exact algebra, weight valuations, Newton polyhedron membership,
// integral closure, and the monomial multiplier-ideal formula.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "vip/error.hpp"
#include "vip/lp.hpp"
#include "vip/rational.hpp"

namespace vip {

/// Exponent vector of a monomial.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t n) : e_(n, 0) {}
  Exponent(std::initializer_list<long> list) : e_(list) { check(); }
  explicit Exponent(std::vector<long> v) : e_(std::move(v)) { check(); }

  std::size_t size() const { return e_.size(); }
  long operator[](std::size_t i) const { return e_[i]; }
  long& operator[](std::size_t i) { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  const std::vector<long>& values() const { return e_; }

  long degree() const {
    long d = 0;
    for (long v : e_) d += v;
    return d;
  }

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const Exponent& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  friend Exponent operator+(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent& a, const Exponent& b) { return a.e_ <=> b.e_; }

 private:
  void check() const {
    for (long v : e_)
      if (v < 0) throw Error(ErrorKind::Domain, "negative exponent");
  }
  std::vector<long> e_;
};

inline RationalVector to_rational(const Exponent& e) {
  RationalVector r;
  r.reserve(e.size());
  for (long v : e) r.emplace_back(v);
  return r;
}

/// Ideal generated by monomials, stored as its minimal generators in
/// descending lexicographic order. No generators is the zero ideal; the
/// single generator 0 is the unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Exponent(n)}); }

  /// Ideal generated by an arbitrary list; keeps only minimal elements.
  static MonomialIdeal generated_by(std::size_t n, std::vector<Exponent> gens);

  std::size_t dim() const { return dim_; }
  const std::vector<Exponent>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].degree() == 0; }
  bool is_proper() const { return !is_zero() && !is_unit(); }

  /// Whether x^u lies in the ideal.
  bool contains_monomial(const Exponent& u) const {
    for (const auto& g : gens_)
      if (g.divides(u)) return true;
    return false;
  }

  /// Componentwise maximum over generators.
  Exponent max_degrees() const {
    Exponent m(dim_);
    for (const auto& g : gens_)
      for (std::size_t i = 0; i < dim_; ++i) m[i] = std::max(m[i], g[i]);
    return m;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(std::size_t n, std::vector<Exponent> minimal_sorted) : dim_(n), gens_(std::move(minimal_sorted)) {}

  std::size_t dim_ = 0;
  std::vector<Exponent> gens_;
};

namespace detail {

inline void require_same_dim(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::Dimension, "ideals live in different ambient dimensions (" + std::to_string(a.dim()) +
                                          " vs " + std::to_string(b.dim()) + ")");
}

// Antichain of minimal elements, sorted descending lexicographically.
inline std::vector<Exponent> minimal_elements(std::vector<Exponent> gens) {
  if (gens.empty()) return gens;
  const std::size_t n = gens[0].size();
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> kept;
  if (n == 2) {
    // Ascending in the first coordinate: keep strictly decreasing second coordinate.
    long best = 0;
    bool have = false;
    for (auto& g : gens) {
      if (!have || g[1] < best) {
        best = g[1];
        have = true;
        kept.push_back(std::move(g));
      }
    }
  } else {
    // A divisor of g precedes g in ascending order by degree.
    std::stable_sort(gens.begin(), gens.end(),
                     [](const Exponent& a, const Exponent& b) { return a.degree() < b.degree(); });
    for (auto& g : gens) {
      bool dominated = false;
      for (const auto& k : kept)
        if (k.divides(g)) {
          dominated = true;
          break;
        }
      if (!dominated) kept.push_back(std::move(g));
    }
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return kept;
}

}  // namespace detail

inline MonomialIdeal MonomialIdeal::generated_by(std::size_t n, std::vector<Exponent> gens) {
  if (n == 0) throw Error(ErrorKind::Dimension, "ambient dimension must be at least 1");
  for (const auto& g : gens)
    if (g.size() != n)
      throw Error(ErrorKind::Dimension, "exponent of length " + std::to_string(g.size()) + " in dimension " +
                                            std::to_string(n));
  return MonomialIdeal(n, detail::minimal_elements(std::move(gens)));
}

/// minimalize from a generator list whose dimension is taken from its
/// first element and must be shared by all; {} is the zero ideal of
/// dimension `n_if_empty`.
inline MonomialIdeal minimalize(const std::vector<Exponent>& gens, std::size_t n_if_empty = 1) {
  std::size_t n = gens.empty() ? n_if_empty : gens[0].size();
  return MonomialIdeal::generated_by(n, gens);
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_dim(a, b);
  std::vector<Exponent> all = a.generators();
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::generated_by(a.dim(), std::move(all));
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_dim(a, b);
  std::vector<Exponent> all;
  all.reserve(a.size() * b.size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) all.push_back(g + h);
  return MonomialIdeal::generated_by(a.dim(), std::move(all));
}

inline MonomialIdeal power(const MonomialIdeal& a, long k) {
  if (k < 0) throw Error(ErrorKind::Domain, "negative ideal power");
  MonomialIdeal result = MonomialIdeal::unit(a.dim());
  MonomialIdeal base = a;
  while (k > 0) {
    if (k & 1) result = product(result, base);
    k >>= 1;
    if (k > 0) base = product(base, base);
  }
  return result;
}

/// a ⊇ b.
inline bool contains(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_dim(a, b);
  for (const auto& g : b.generators())
    if (!a.contains_monomial(g)) return false;
  return true;
}

/// Monomial valuation with nonnegative rational weights, not all zero.
class WeightValuation {
 public:
  explicit WeightValuation(RationalVector weights) : w_(std::move(weights)) {
    if (w_.empty()) throw Error(ErrorKind::Dimension, "weight vector must be nonempty");
    bool nonzero = false;
    for (const auto& x : w_) {
      if (x.sign() < 0) throw Error(ErrorKind::Domain, "weights must be nonnegative");
      if (!x.is_zero()) nonzero = true;
    }
    if (!nonzero) throw Error(ErrorKind::Domain, "weight valuation must be nontrivial");
  }
  static WeightValuation ones(std::size_t n) { return WeightValuation(RationalVector(n, Rational(1))); }

  std::size_t dim() const { return w_.size(); }
  const RationalVector& weights() const { return w_; }

  Rational on_monomial(const Exponent& e) const {
    if (e.size() != w_.size()) throw Error(ErrorKind::Dimension, "weight/exponent length mismatch");
    mpq_class acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (e[i] != 0) acc += w_[i].raw() * e[i];
    return Rational(std::move(acc));
  }

  /// Log discrepancy with respect to the coordinate hyperplanes.
  Rational log_discrepancy() const {
    Rational s(0);
    for (const auto& x : w_) s += x;
    return s;
  }

  WeightValuation scaled(const Rational& lambda) const {
    RationalVector w = w_;
    for (auto& x : w) x *= lambda;
    return WeightValuation(std::move(w));
  }

  friend bool operator==(const WeightValuation&, const WeightValuation&) = default;

 private:
  RationalVector w_;
};

/// Minimum of ⟨α, β⟩ over generators β; +∞ on the zero ideal.
inline ExtRational weight_value(const WeightValuation& v, const MonomialIdeal& a) {
  if (v.dim() != a.dim()) throw Error(ErrorKind::Dimension, "valuation and ideal dimensions differ");
  if (a.is_zero()) return ExtRational::infinity();
  Rational best = v.on_monomial(a.generators()[0]);
  for (std::size_t i = 1; i < a.size(); ++i) best = min(best, v.on_monomial(a.generators()[i]));
  return best;
}

/// Membership of a rational point in the Newton polyhedron
/// conv(generators) + ℝⁿ₊, or in its interior when `strict`.
inline bool newton_member(const RationalVector& u, const MonomialIdeal& a, bool strict) {
  if (a.is_zero()) throw Error(ErrorKind::Domain, "Newton polyhedron of the zero ideal");
  if (u.size() != a.dim()) throw Error(ErrorKind::Dimension, "point and ideal dimensions differ");
  const std::size_t n = a.dim();

  // Exact shortcuts: dominating a generator, or lying below the
  // all-ones support value.
  for (const auto& g : a.generators()) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      Rational gi(g[i]);
      ok = strict ? (gi < u[i]) : (gi <= u[i]);
    }
    if (ok) return true;
  }
  Rational usum(0);
  for (const auto& x : u) usum += x;
  long min_deg = a.generators()[0].degree();
  for (const auto& g : a.generators()) min_deg = std::min(min_deg, g.degree());
  if (strict ? !(Rational(min_deg) < usum) : usum < Rational(min_deg)) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (strict ? u[i].sign() <= 0 : u[i].sign() < 0) return false;

  // Variables: λ_g (one per generator), then ε when strict.
  const std::size_t gcount = a.size();
  const std::size_t nv = gcount + (strict ? 1 : 0);
  ConstraintSet dom(nv, 0, true);
  RationalVector convex(nv, Rational(0));
  for (std::size_t g = 0; g < gcount; ++g) convex[g] = Rational(1);
  dom.add_eq(convex, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    // u_i - ε - Σ λ_g g_i ≥ 0
    RationalVector row(nv, Rational(0));
    for (std::size_t g = 0; g < gcount; ++g) row[g] = Rational(-a.generators()[g][i]);
    if (strict) row[gcount] = Rational(-1);
    dom.add_ge(std::move(row), -u[i]);
  }
  RationalVector objective(nv, Rational(0));
  if (strict) objective[gcount] = Rational(-1);
  if (strict) {
    // Keep the LP bounded: ε ≤ 1 suffices for the sign test.
    RationalVector cap(nv, Rational(0));
    cap[gcount] = Rational(-1);
    dom.add_ge(std::move(cap), Rational(-1));
  }
  LpResult r = lp_minimize(LinearProgram{std::move(dom), std::move(objective)}, SolveOptions{.lexicographic = false});
  if (r.status == LpStatus::Infeasible) return false;
  if (r.status == LpStatus::Unbounded) throw Error(ErrorKind::Consistency, "Newton membership LP unbounded");
  return strict ? r.value.sign() < 0 : true;
}

namespace detail {

// Minimal generators of the up-closed lattice set {u ∈ box : member(u)},
// walking the staircase of the last coordinate: its least admissible value
// is nonincreasing in every other coordinate.
template <class Pred>
std::vector<Exponent> staircase_generators(const Exponent& box, Pred&& member) {
  const std::size_t n = box.size();
  std::vector<Exponent> found;
  Exponent u(n);

  if (n == 1) {
    for (long t = 0; t <= box[0]; ++t) {
      u[0] = t;
      if (member(u)) {
        found.push_back(u);
        break;
      }
    }
    return found;
  }

  // Iterate over coordinates 0..n-3 as an odometer; for each, walk
  // coordinate n-2 upward while coordinate n-1 walks downward.
  std::vector<long> outer(n - 2, 0);
  for (;;) {
    for (std::size_t i = 0; i + 2 < n; ++i) u[i] = outer[i];
    const long top = box[n - 1];
    long least = top + 1;  // "none yet" sentinel
    for (long s = 0; s <= box[n - 2]; ++s) {
      u[n - 2] = s;
      long start = least <= top ? least : top;
      u[n - 1] = start;
      if (least > top && !member(u)) continue;
      long v = start;
      while (v > 0) {
        u[n - 1] = v - 1;
        if (!member(u)) break;
        --v;
      }
      least = v;
      u[n - 1] = v;
      found.push_back(u);
      if (v == 0) break;  // larger s are then dominated
    }
    std::size_t i = 0;
    for (; i + 2 < n; ++i) {
      if (++outer[i] <= box[i]) break;
      outer[i] = 0;
    }
    if (i + 2 >= n) break;
  }
  return found;
}

}  // namespace detail

/// Monomials whose exponents lie in the Newton polyhedron.
inline MonomialIdeal integral_closure(const MonomialIdeal& a) {
  if (a.is_zero()) throw Error(ErrorKind::Domain, "integral closure of the zero ideal");
  if (a.is_unit()) return a;
  Exponent box = a.max_degrees();
  auto gens = detail::staircase_generators(box, [&](const Exponent& u) {
    return a.contains_monomial(u) || newton_member(to_rational(u), a, false);
  });
  return MonomialIdeal::generated_by(a.dim(), std::move(gens));
}

/// Multiplier ideal 𝒥(c·a): monomials x^u with u + 1 in the interior of
/// c·Newt(a).
inline MonomialIdeal howald_multiplier(const MonomialIdeal& a, const Rational& c) {
  if (a.is_zero()) throw Error(ErrorKind::Domain, "multiplier ideal of the zero ideal");
  if (c.sign() < 0) throw Error(ErrorKind::Domain, "multiplier ideal coefficient must be nonnegative");
  const std::size_t n = a.dim();
  if (c.is_zero() || a.is_unit()) return MonomialIdeal::unit(n);
  Exponent maxdeg = a.max_degrees();
  Exponent box(n);
  for (std::size_t i = 0; i < n; ++i) box[i] = to_long((c * Rational(maxdeg[i])).ceil());
  const Rational inv = Rational(1) / c;
  auto gens = detail::staircase_generators(box, [&](const Exponent& u) {
    RationalVector p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = Rational(u[i] + 1) * inv;
    return newton_member(p, a, true);
  });
  return MonomialIdeal::generated_by(n, std::move(gens));
}

// ---------------------------------------------------------------------------
// Text rendering and parsing: "x^4, x*y, y^4".

inline std::string render_monomial(const Exponent& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.at(i);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

/// Canonical rendering; the zero ideal renders as "0".
inline std::string render(const MonomialIdeal& a, const std::vector<std::string>& vars) {
  if (vars.size() != a.dim()) throw Error(ErrorKind::Dimension, "variable names do not match dimension");
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& g : a.generators()) {
    if (!out.empty()) out += ", ";
    out += render_monomial(g, vars);
  }
  return out;
}

/// Default variable names: x, y, z for n ≤ 3, else x1..xn.
inline std::vector<std::string> default_variables(std::size_t n) {
  if (n <= 3) {
    std::vector<std::string> v{"x", "y", "z"};
    v.resize(n);
    return v;
  }
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

/// Parses the canonical rendering back (optionally wrapped in parentheses).
inline MonomialIdeal parse_ideal_text(const std::string& text, const std::vector<std::string>& vars) {
  const std::size_t n = vars.size();
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s == "0") return MonomialIdeal::zero(n);
  std::vector<Exponent> gens;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string mono = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (mono.empty()) throw Error(ErrorKind::Parse, "empty monomial in '" + text + "'");
    Exponent e(n);
    if (mono != "1") {
      std::size_t p = 0;
      while (p <= mono.size()) {
        std::size_t star = mono.find('*', p);
        std::string atom = mono.substr(p, star == std::string::npos ? std::string::npos : star - p);
        std::size_t caret = atom.find('^');
        std::string name = atom.substr(0, caret);
        long ex = 1;
        if (caret != std::string::npos) {
          std::string digits = atom.substr(caret + 1);
          if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorKind::Parse, "bad exponent in '" + atom + "'");
          ex = std::stol(digits);
        }
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw Error(ErrorKind::Parse, "unknown variable '" + name + "'");
        e[static_cast<std::size_t>(it - vars.begin())] += ex;
        if (star == std::string::npos) break;
        p = star + 1;
      }
    }
    gens.push_back(e);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return MonomialIdeal::generated_by(n, std::move(gens));
}

}  // namespace vip

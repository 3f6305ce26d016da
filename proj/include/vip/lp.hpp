#pragma once

// Exact rational linear programming: a dense two-phase simplex with
// Bland's pivoting rule. Every quantity is a GMP rational; there is no
// floating point anywhere in this file.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vip/error.hpp"
#include "vip/parallel.hpp"
#include "vip/rational.hpp"

namespace vip {

enum class Relation { GreaterEqual, Equal };

struct Constraint {
  RationalVector coeffs;
  Relation relation = Relation::GreaterEqual;
  Rational bound;
};

/// Variables are laid out as the `dimension` primary coordinates followed
/// by `aux` auxiliary coordinates.
struct ConstraintSet {
  std::size_t dimension = 0;
  std::size_t aux = 0;
  std::vector<Constraint> rows;
  std::vector<bool> nonnegative;

  ConstraintSet() = default;
  ConstraintSet(std::size_t dim, std::size_t aux_count, bool primary_nonneg = true, bool aux_nonneg = false)
      : dimension(dim), aux(aux_count) {
    nonnegative.assign(dim, primary_nonneg);
    nonnegative.resize(dim + aux_count, aux_nonneg);
  }

  std::size_t num_vars() const { return dimension + aux; }

  void add(RationalVector coeffs, Relation rel, Rational bound) {
    rows.push_back(Constraint{std::move(coeffs), rel, std::move(bound)});
  }
  void add_ge(RationalVector coeffs, Rational bound) { add(std::move(coeffs), Relation::GreaterEqual, std::move(bound)); }
  void add_eq(RationalVector coeffs, Rational bound) { add(std::move(coeffs), Relation::Equal, std::move(bound)); }

  void validate() const {
    if (num_vars() == 0) throw Error(ErrorKind::Dimension, "linear program without variables");
    if (nonnegative.size() != num_vars())
      throw Error(ErrorKind::Dimension, "nonnegativity flags do not match variable count");
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].coeffs.size() != num_vars())
        throw Error(ErrorKind::Dimension, "constraint " + std::to_string(i) + " has length " +
                                              std::to_string(rows[i].coeffs.size()) + ", expected " +
                                              std::to_string(num_vars()));
  }

  /// Exact check of every row and sign condition.
  bool satisfied_by(const RationalVector& x) const {
    if (x.size() != num_vars()) return false;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (nonnegative[j] && x[j].sign() < 0) return false;
    for (const auto& row : rows) {
      Rational lhs = dot(row.coeffs, x);
      if (row.relation == Relation::Equal ? !(lhs == row.bound) : lhs < row.bound) return false;
    }
    return true;
  }
};

struct LinearProgram {
  ConstraintSet domain;
  RationalVector objective;

  void validate() const {
    domain.validate();
    if (objective.size() != domain.num_vars())
      throw Error(ErrorKind::Dimension, "objective has length " + std::to_string(objective.size()) +
                                            ", expected " + std::to_string(domain.num_vars()));
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector point;
};

struct SolveOptions {
  /// Return the lexicographically smallest optimal point instead of the
  /// first optimal vertex the pivoting reaches. Costs one extra solve per
  /// variable.
  bool lexicographic = true;
};

namespace detail {

// min c.x  s.t.  A x = b, x >= 0, with b >= 0.
class StandardSimplex {
 public:
  StandardSimplex(std::vector<RationalVector> a, RationalVector b, RationalVector c)
      : m_(a.size()), n_(c.size()), cost_(std::move(c)) {
    cols_ = n_ + m_;
    tab_.assign(m_ * cols_, mpq_class(0));
    rhs_.resize(m_);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = a[i][j].raw();
      at(i, n_ + i) = 1;
      rhs_[i] = b[i].raw();
      basis_[i] = n_ + i;
    }
  }

  LpStatus solve() {
    // Phase 1: minimize the sum of artificials.
    reduced_.assign(cols_, mpq_class(0));
    neg_obj_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) reduced_[j] -= at(i, j);
      neg_obj_ -= rhs_[i];
    }
    if (!iterate(cols_)) throw Error(ErrorKind::Consistency, "phase-one simplex reported unbounded");
    if (sgn(neg_obj_) != 0) return LpStatus::Infeasible;

    // Move degenerate artificials out of the basis where possible.
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(at(i, j)) != 0) {
          pivot(i, j);
          break;
        }
      }
    }

    // Phase 2 on the real columns only.
    reduced_.assign(cols_, mpq_class(0));
    neg_obj_ = 0;
    for (std::size_t j = 0; j < n_; ++j) reduced_[j] = cost_[j].raw();
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) continue;
      const mpq_class& cb = cost_[basis_[i]].raw();
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) reduced_[j] -= cb * at(i, j);
      neg_obj_ -= cb * rhs_[i];
    }
    if (!iterate(n_)) return LpStatus::Unbounded;
    return LpStatus::Optimal;
  }

  Rational value() const { return Rational(mpq_class(-neg_obj_)); }

  RationalVector point() const {
    RationalVector x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = Rational(rhs_[i]);
    return x;
  }

 private:
  mpq_class& at(std::size_t i, std::size_t j) { return tab_[i * cols_ + j]; }
  const mpq_class& at(std::size_t i, std::size_t j) const { return tab_[i * cols_ + j]; }

  // Bland's rule: lowest-index improving column, lowest-index basic
  // variable among ratio-test ties. Returns false when unbounded.
  bool iterate(std::size_t allowed_cols) {
    for (;;) {
      std::size_t enter = allowed_cols;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        if (sgn(reduced_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed_cols) return true;

      std::size_t leave = m_;
      mpq_class best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(at(i, enter)) <= 0) continue;
        mpq_class ratio = rhs_[i] / at(i, enter);
        if (leave == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    mpq_class inv = 1 / at(r, c);
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(at(r, j)) != 0) at(r, j) *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      mpq_class f = at(i, c);
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(at(r, j)) != 0) at(i, j) -= f * at(r, j);
      rhs_[i] -= f * rhs_[r];
    }
    mpq_class f = reduced_[c];
    if (sgn(f) != 0) {
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(at(r, j)) != 0) reduced_[j] -= f * at(r, j);
      neg_obj_ -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  std::size_t m_, n_, cols_;
  RationalVector cost_;
  std::vector<mpq_class> tab_;
  std::vector<mpq_class> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<mpq_class> reduced_;
  mpq_class neg_obj_;
};

// Single solve without tie-breaking: free variables split, inequality rows
// given surplus columns, rows with negative bounds negated.
inline LpResult solve_once(const ConstraintSet& dom, const RationalVector& objective) {
  const std::size_t nv = dom.num_vars();
  std::vector<std::size_t> plus_col(nv), minus_col(nv, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    plus_col[v] = cols++;
    if (!dom.nonnegative[v]) minus_col[v] = cols++;
  }
  std::size_t structural = cols;
  for (const auto& row : dom.rows)
    if (row.relation == Relation::GreaterEqual) ++cols;

  std::vector<RationalVector> a;
  RationalVector b;
  a.reserve(dom.rows.size());
  std::size_t surplus = structural;
  for (const auto& row : dom.rows) {
    RationalVector r(cols, Rational(0));
    for (std::size_t v = 0; v < nv; ++v) {
      if (row.coeffs[v].is_zero()) continue;
      r[plus_col[v]] = row.coeffs[v];
      if (minus_col[v] != SIZE_MAX) r[minus_col[v]] = -row.coeffs[v];
    }
    if (row.relation == Relation::GreaterEqual) r[surplus++] = Rational(-1);
    Rational rhs = row.bound;
    if (rhs.sign() < 0) {
      for (auto& e : r) e = -e;
      rhs = -rhs;
    }
    a.push_back(std::move(r));
    b.push_back(std::move(rhs));
  }
  RationalVector c(cols, Rational(0));
  for (std::size_t v = 0; v < nv; ++v) {
    c[plus_col[v]] = objective[v];
    if (minus_col[v] != SIZE_MAX) c[minus_col[v]] = -objective[v];
  }

  LpResult out;
  if (a.empty()) {
    // No rows: optimal at 0 unless some objective direction is improving.
    for (std::size_t j = 0; j < cols; ++j)
      if (c[j].sign() < 0) {
        out.status = LpStatus::Unbounded;
        return out;
      }
    out.status = LpStatus::Optimal;
    out.value = Rational(0);
    out.point.assign(nv, Rational(0));
    return out;
  }

  StandardSimplex simplex(std::move(a), std::move(b), std::move(c));
  out.status = simplex.solve();
  if (out.status != LpStatus::Optimal) return out;
  out.value = simplex.value();
  RationalVector y = simplex.point();
  out.point.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    out.point[v] = y[plus_col[v]];
    if (minus_col[v] != SIZE_MAX) out.point[v] -= y[minus_col[v]];
  }
  return out;
}

}  // namespace detail

/// Exact minimum of lp.objective over lp.domain. With lexicographic
/// tie-breaking (the default) the returned point is the lexicographically
/// smallest optimal point under variable order, so the answer does not
/// depend on row order. A variable that is unbounded below on the optimal
/// face is left unfixed.
inline LpResult lp_minimize(const LinearProgram& lp, SolveOptions opts = {}) {
  lp.validate();
  LpResult first = detail::solve_once(lp.domain, lp.objective);
  if (first.status != LpStatus::Optimal || !opts.lexicographic) return first;

  ConstraintSet face = lp.domain;
  face.add_eq(lp.objective, first.value);
  const std::size_t nv = face.num_vars();
  RationalVector best_point = first.point;
  for (std::size_t v = 0; v < nv; ++v) {
    RationalVector unit(nv, Rational(0));
    unit[v] = Rational(1);
    LpResult step = detail::solve_once(face, unit);
    if (step.status == LpStatus::Infeasible)
      throw Error(ErrorKind::Consistency, "optimal face became infeasible during tie-breaking");
    if (step.status == LpStatus::Unbounded) continue;
    face.add_eq(unit, step.value);
    best_point = std::move(step.point);
  }
  first.point = std::move(best_point);
  if (!lp.domain.satisfied_by(first.point) || !(dot(lp.objective, first.point) == first.value))
    throw Error(ErrorKind::Consistency, "simplex returned a point that fails exact verification");
  return first;
}

struct MinOfLinearResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector point;
  std::size_t winner = 0;  // objective index achieving the minimum, or the unbounded one
};

/// Minimizes the pointwise minimum of several linear objectives over one
/// shared domain by solving one LP per objective. Objectives may have the
/// primary length (auxiliary coefficients are then zero) or the full one.
inline MinOfLinearResult minimize_min_of_linear(const std::vector<RationalVector>& objectives,
                                                const ConstraintSet& domain, unsigned threads = 1) {
  if (objectives.empty()) throw Error(ErrorKind::Domain, "minimize_min_of_linear needs at least one objective");
  domain.validate();
  std::vector<LinearProgram> programs;
  programs.reserve(objectives.size());
  for (const auto& obj : objectives) {
    RationalVector full = obj;
    if (full.size() == domain.dimension) full.resize(domain.num_vars(), Rational(0));
    programs.push_back(LinearProgram{domain, std::move(full)});
    programs.back().validate();
  }
  auto results = parallel_map(programs.size(), threads, [&](std::size_t i) { return lp_minimize(programs[i]); });

  MinOfLinearResult out;
  bool any_optimal = false;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& r = results[i];
    if (r.status == LpStatus::Unbounded) {
      out.status = LpStatus::Unbounded;
      out.winner = i;
      out.point.clear();
      return out;
    }
    if (r.status != LpStatus::Optimal) continue;
    if (!any_optimal || r.value < out.value) {
      any_optimal = true;
      out.status = LpStatus::Optimal;
      out.value = r.value;
      out.point = r.point;
      out.winner = i;
    }
  }
  return out;
}

}  // namespace vip

#include <gtest/gtest.h>

#include <atomic>

#include "vip/lp.hpp"
#include "vip/parallel.hpp"
#include "vip/rational.hpp"

using namespace vip;

TEST(Rational, ParseAndRender) {
  EXPECT_EQ(Rational::parse("6").str(), "6/1");
  EXPECT_EQ(Rational::parse("-3/9").str(), "-1/3");
  EXPECT_EQ(Rational::parse("10/4").short_str(), "5/2");
  EXPECT_EQ(Rational(4, 2).short_str(), "2");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
  EXPECT_THROW(Rational::parse(""), Error);
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(3).ceil(), 3);
}

TEST(Rational, OrderingAndArithmetic) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(max(Rational(1), Rational(5, 4)), Rational(5, 4));
  EXPECT_TRUE(ExtRational::infinity().is_infinite());
  EXPECT_EQ(ExtRational::infinity().str(), "inf");
}

TEST(Parallel, IndexOrderAndExceptions) {
  auto r = parallel_map(50, 4, [](std::size_t i) { return static_cast<long>(i * i); });
  for (std::size_t i = 0; i < r.size(); ++i) EXPECT_EQ(r[i], static_cast<long>(i * i));
  EXPECT_THROW(parallel_map(10, 3,
                            [](std::size_t i) -> int {
                              if (i == 7) throw Error(ErrorKind::Domain, "seven");
                              return 0;
                            }),
               Error);
}

static RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

TEST(Lp, SimpleMinimum) {
  // min x + y  s.t. x + 2y >= 2, 3x + y >= 3
  ConstraintSet d(2, 0);
  d.add_ge(rv({1, 2}), Rational(2));
  d.add_ge(rv({3, 1}), Rational(3));
  LpResult r = lp_minimize(LinearProgram{d, rv({1, 1})});
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Rational(7, 5));
  EXPECT_EQ(r.point[0], Rational(4, 5));
  EXPECT_EQ(r.point[1], Rational(3, 5));
}

TEST(Lp, InfeasibleAndUnbounded) {
  ConstraintSet d(1, 0);
  d.add_ge(rv({-1}), Rational(1));  // -x >= 1 with x >= 0
  EXPECT_EQ(lp_minimize(LinearProgram{d, rv({1})}).status, LpStatus::Infeasible);
  ConstraintSet u(1, 0);
  u.add_ge(rv({1}), Rational(1));
  EXPECT_EQ(lp_minimize(LinearProgram{u, rv({-1})}).status, LpStatus::Unbounded);
}

TEST(Lp, FreeAuxiliaryVariable) {
  // min t  s.t. t >= 2 - x, t >= x, x >= 0, t free
  ConstraintSet d(1, 1);
  d.add_ge(rv({1, 1}), Rational(2));
  d.add_ge(rv({-1, 1}), Rational(0));
  LpResult r = lp_minimize(LinearProgram{d, rv({0, 1})});
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Rational(1));
  EXPECT_EQ(r.point[0], Rational(1));
}

TEST(Lp, EqualityAndNegativeBound) {
  ConstraintSet d(2, 0);
  d.add_eq(rv({1, 1}), Rational(3));
  d.add_ge(rv({-1, 0}), Rational(-1));  // x <= 1
  LpResult r = lp_minimize(LinearProgram{d, rv({0, 1})});
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Rational(2));
  EXPECT_EQ(r.point[0], Rational(1));
}

TEST(Lp, LexicographicTieBreak) {
  // every point of the segment x + y = 1 is optimal; lex-min takes x = 0
  ConstraintSet d(2, 0);
  d.add_ge(rv({1, 1}), Rational(1));
  LpResult r = lp_minimize(LinearProgram{d, rv({1, 1})});
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.point[0], Rational(0));
  EXPECT_EQ(r.point[1], Rational(1));
}

TEST(Lp, DimensionMismatchRejected) {
  ConstraintSet d(2, 0);
  d.add_ge(rv({1}), Rational(1));
  EXPECT_THROW(lp_minimize(LinearProgram{d, rv({1, 1})}), Error);
}

TEST(Lp, MinOfLinearPicksSmallestIndexOnTies) {
  ConstraintSet d(2, 0);
  d.add_ge(rv({1, 1}), Rational(1));
  auto r = minimize_min_of_linear({rv({1, 1}), rv({1, 1}), rv({2, 2})}, d, 2);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Rational(1));
  EXPECT_EQ(r.winner, 0u);
}

TEST(Lp, DegenerateCyclingProneInstance) {
  // A classic degenerate instance; Bland's rule must terminate.
  ConstraintSet d(4, 0);
  d.add_ge({Rational(-1, 4), Rational(8), Rational(1), Rational(-9)}, Rational(0));
  d.add_ge({Rational(-1, 2), Rational(12), Rational(1, 2), Rational(-3)}, Rational(0));
  d.add_ge(rv({0, 0, -1, 0}), Rational(-1));
  LpResult r = lp_minimize(LinearProgram{d, {Rational(-3, 4), Rational(20), Rational(-1, 2), Rational(6)}});
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Rational(-5, 4));
}

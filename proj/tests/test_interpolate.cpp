#include <gtest/gtest.h>

#include "vip/interpolate.hpp"

using namespace vip;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};
MonomialIdeal I(const std::string& s, const std::vector<std::string>& v = XY) { return parse_ideal_text(s, v); }

InterpolationProblem three_conditions() {
  return {2, {{I("x, y^6"), Rational(1)}, {I("y, x^6"), Rational(1)}, {I("x^4, x*y, y^4"), Rational(3)}}, false};
}
InterpolationProblem constant(bool cyclic = true) { return {2, {{I("x, y"), Rational(1)}}, cyclic}; }
}  // namespace

TEST(Interpolate, ThreeConditionsHaveNoSolution) {
  Certificate c = decide_finite(three_conditions());
  EXPECT_EQ(c.verdict, Verdict::NotExists);
  EXPECT_EQ(c.samuel_value, Rational(6));
  EXPECT_EQ(c.target_sum, Rational(5));
  EXPECT_FALSE(c.witness.has_value());
  EXPECT_FALSE(c.active.empty());
}

TEST(Interpolate, WitnessSatisfiesTargets) {
  InterpolationProblem p{3,
                         {{I("x, y", XYZ), Rational(1)}, {I("y, z^3", XYZ), Rational(2)},
                          {I("x^2, y*z", XYZ), Rational(2)}},
                         false};
  Certificate c = decide_finite(p);
  ASSERT_EQ(c.verdict, Verdict::Exists);
  EXPECT_EQ(c.samuel_value, Rational(5));
  ASSERT_TRUE(c.witness.has_value());
  for (std::size_t j = 0; j < p.pairs.size(); ++j)
    EXPECT_EQ(weight_value(*c.witness, p.pairs[j].ideal).value(), p.pairs[j].target);
  // lex-min optimal weight, cross-checked by tests/oracles/derive.py (lct = A)
  EXPECT_EQ(c.witness->weights(), (RationalVector{Rational(1), Rational(2), Rational(2, 3)}));
  EXPECT_EQ(*c.log_discrepancy, Rational(11, 3));
}

TEST(Interpolate, SingleConditionAlwaysInterpolates) {
  for (const char* g : {"x, y", "x^2, y^3", "x^4, x*y, y^4", "x*y"}) {
    InterpolationProblem p{2, {{I(g), Rational(7, 3)}}, false};
    EXPECT_EQ(decide_finite(p).verdict, Verdict::Exists) << g;
  }
}

TEST(Interpolate, InvalidProblems) {
  EXPECT_THROW(decide_finite(InterpolationProblem{2, {}, false}), Error);
  EXPECT_THROW(decide_finite(InterpolationProblem{2, {{MonomialIdeal::unit(2), Rational(1)}}, false}), Error);
  EXPECT_THROW(decide_finite(InterpolationProblem{2, {{I("x"), Rational(0)}}, false}), Error);
  EXPECT_THROW(decide_finite(InterpolationProblem{3, {{I("x"), Rational(1)}}, false}), Error);
}

TEST(Interpolate, ConstantSequenceIsBounded) {
  PrefixReport r = decide_infinite_prefix(constant(), 6, 8);
  EXPECT_EQ(r.verdict, PrefixVerdict::BoundedCertified);
  EXPECT_EQ(r.sup_defect, Rational(2));
  EXPECT_EQ(r.uniform_bound, Rational(2));
  ASSERT_EQ(r.rows.size(), 6u);
  for (const auto& row : r.rows) {
    ASSERT_TRUE(row.defects.has_value());
    for (const auto& d : row.defects->rows) EXPECT_EQ(d.defect, Rational(2));
    EXPECT_TRUE(row.witness_positive);
  }
}

TEST(Interpolate, CorruptedSequenceFails) {
  InterpolationProblem p{2, {{I("x, y"), Rational(2)}, {I("x, y"), Rational(1)}}, true};
  PrefixReport r = decide_infinite_prefix(p, 6, 8);
  EXPECT_EQ(r.verdict, PrefixVerdict::Fails);
  ASSERT_TRUE(r.failed_at.has_value());
  EXPECT_EQ(*r.failed_at, 2);
  EXPECT_EQ(r.rows.back().certificate.samuel_value, Rational(4));
  EXPECT_EQ(r.rows.back().certificate.target_sum, Rational(3));
}

TEST(Interpolate, PrefixNeedsContinuationOrEnoughPairs) {
  EXPECT_THROW(decide_infinite_prefix(constant(false), 3, 2), Error);
  EXPECT_NO_THROW(decide_infinite_prefix(constant(false), 1, 2));
}

TEST(Interpolate, RadicalConditionEnforced) {
  InterpolationProblem p{2, {{I("x"), Rational(1)}, {I("x*y"), Rational(2)}}, true};
  EXPECT_FALSE(radical_condition(p));
  EXPECT_THROW(decide_infinite_prefix(p, 2, 2), Error);
  EXPECT_TRUE(radical_condition(three_conditions()));
}

#include <gtest/gtest.h>

#include "vip/monomial.hpp"

using namespace vip;

namespace {
const std::vector<std::string> XY{"x", "y"};
MonomialIdeal I(const std::string& s, const std::vector<std::string>& v = XY) { return parse_ideal_text(s, v); }
}  // namespace

TEST(Monomial, MinimalGeneratorsAndOrder) {
  MonomialIdeal a = MonomialIdeal::generated_by(2, {{1, 1}, {4, 0}, {2, 2}, {0, 4}, {4, 1}});
  EXPECT_EQ(render(a, XY), "x^4, x*y, y^4");
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(render(MonomialIdeal::zero(2), XY) == "0");
  EXPECT_TRUE(MonomialIdeal::unit(2).is_unit());
}

TEST(Monomial, SumProductPower) {
  MonomialIdeal m = I("x, y");
  EXPECT_EQ(render(power(m, 3), XY), "x^3, x^2*y, x*y^2, y^3");
  EXPECT_EQ(product(I("x, y^6"), I("y, x^6")), I("x*y, x^7, y^7"));
  EXPECT_EQ(sum(I("x^2"), I("x*y, y^3")), I("x^2, x*y, y^3"));
  EXPECT_EQ(power(m, 0), MonomialIdeal::unit(2));
  EXPECT_TRUE(product(m, MonomialIdeal::zero(2)).is_zero());
}

TEST(Monomial, Containment) {
  EXPECT_TRUE(contains(I("x, y"), I("x^2, y")));
  EXPECT_FALSE(contains(I("x^2, y"), I("x, y")));
  EXPECT_TRUE(contains(MonomialIdeal::unit(2), I("x")));
  EXPECT_THROW(contains(I("x"), MonomialIdeal::unit(3)), Error);
}

TEST(Monomial, WeightValues) {
  WeightValuation v(RationalVector{Rational(1), Rational(2)});
  EXPECT_EQ(weight_value(v, I("x^4, x*y, y^4")).value(), Rational(3));
  EXPECT_TRUE(weight_value(v, MonomialIdeal::zero(2)).is_infinite());
  EXPECT_EQ(v.log_discrepancy(), Rational(3));
  EXPECT_THROW(WeightValuation(RationalVector{Rational(0), Rational(0)}), Error);
  EXPECT_THROW(WeightValuation(RationalVector{Rational(-1), Rational(2)}), Error);
}

TEST(Monomial, NewtonMembership) {
  MonomialIdeal a = I("x^2, y^2");
  EXPECT_TRUE(newton_member(to_rational(Exponent{1, 1}), a, false));
  EXPECT_FALSE(newton_member(to_rational(Exponent{1, 1}), a, true));
  EXPECT_TRUE(newton_member({Rational(3, 2), Rational(3, 4)}, a, true));
  EXPECT_FALSE(newton_member({Rational(1, 2), Rational(1, 2)}, a, false));
}

TEST(Monomial, IntegralClosure) {
  EXPECT_EQ(integral_closure(I("x^2, y^2")), I("x^2, x*y, y^2"));
  EXPECT_EQ(integral_closure(I("x^3, y^3")), I("x^3, x^2*y, x*y^2, y^3"));
  EXPECT_EQ(integral_closure(I("x^2, y^3")), I("x^2, x*y^2, y^3"));
  MonomialIdeal b = I("x^4, x*y, y^4");
  EXPECT_EQ(integral_closure(b), b);
}

TEST(Monomial, HowaldMultiplier) {
  MonomialIdeal m = I("x, y");
  // 𝒥(c·m) = m^(⌊c⌋−1) in the plane
  EXPECT_EQ(howald_multiplier(m, Rational(7, 2)), power(m, 2));
  EXPECT_EQ(howald_multiplier(m, Rational(2)), m);
  EXPECT_TRUE(howald_multiplier(m, Rational(3, 2)).is_unit());
  // lct(x^2, y^3) = 5/6
  EXPECT_TRUE(howald_multiplier(I("x^2, y^3"), Rational(4, 5)).is_unit());
  EXPECT_EQ(howald_multiplier(I("x^2, y^3"), Rational(5, 6)), m);
  EXPECT_EQ(howald_multiplier(I("x^2, y^3"), Rational(1)), m);
  EXPECT_EQ(howald_multiplier(m, Rational(0)), MonomialIdeal::unit(2));
}

TEST(Monomial, ThreeVariables) {
  std::vector<std::string> v{"x", "y", "z"};
  MonomialIdeal m3 = parse_ideal_text("x, y, z", v);
  EXPECT_EQ(power(m3, 2).size(), 6u);
  EXPECT_TRUE(howald_multiplier(m3, Rational(5, 2)).is_unit());
  EXPECT_EQ(howald_multiplier(m3, Rational(3)), m3);
}

TEST(Monomial, TextRoundTrip) {
  MonomialIdeal a = I("x^4, x*y, y^4");
  EXPECT_EQ(parse_ideal_text(render(a, XY), XY), a);
  EXPECT_EQ(default_variables(3), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_THROW(parse_ideal_text("x, w", XY), Error);
}

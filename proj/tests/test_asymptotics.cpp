#include <gtest/gtest.h>

#include "vip/asymptotics.hpp"
#include "vip/dsl.hpp"

using namespace vip;

namespace {
const std::vector<std::string> XY{"x", "y"};
MonomialIdeal I(const std::string& s) { return parse_ideal_text(s, XY); }

Filtration three_pair_I() {
  return Filtration::special_sum(
      {{I("x, y^6"), Rational(1)}, {I("y, x^6"), Rational(1)}, {I("x^4, x*y, y^4"), Rational(3)}});
}
Filtration kw() {
  return dsl::load_model("vars x y\nideal m = (x, y)\nfiltration J(k) = m^k * (x^k, y)\n").filtration("J");
}
}  // namespace

TEST(Asymptotics, SamuelExactOnThreeConditions) {
  Filtration f = three_pair_I();
  EXPECT_EQ(samuel_exact(f, I("x, y^6")), Rational(1));
  EXPECT_EQ(samuel_exact(f, I("y, x^6")), Rational(1));
  EXPECT_EQ(samuel_exact(f, I("x^4, x*y, y^4")), Rational(3));
}

// Values cross-checked by tests/oracles/derive.py
TEST(Asymptotics, SamuelExactCrossChecked) {
  Filtration f = three_pair_I();
  EXPECT_EQ(samuel_exact(f, product(I("x, y^6"), I("y, x^6"))), Rational(3));
  EXPECT_EQ(samuel_exact(f, power(I("x^4, x*y, y^4"), 2)), Rational(6));
  EXPECT_EQ(samuel_exact(f, I("x, y")), Rational(1));
  EXPECT_EQ(samuel_exact(f, I("x^2, y^3")), Rational(2));
}

TEST(Asymptotics, RhoArgminIsFeasibleAndAttains) {
  Filtration f = three_pair_I();
  MonomialIdeal a = I("x^2, y^3");
  RhoResult r = rho_exact(f, a);
  EXPECT_EQ(asymptotic_support(f, r.argmin), Rational(1));
  EXPECT_EQ(weight_value(r.argmin, a).value(), r.value);
  EXPECT_TRUE(a.contains_monomial(r.winner));
}

TEST(Asymptotics, SamuelExactRejectsParametric) {
  EXPECT_THROW(samuel_exact(kw(), I("x, y")), Error);
}

TEST(Asymptotics, FeketeBoundBelowExact) {
  Filtration f = three_pair_I();
  SamuelBound b = samuel_lower_bound(f, I("x^4, x*y, y^4"), 6);
  ASSERT_TRUE(b.exact.has_value());
  EXPECT_EQ(*b.exact, Rational(3));
  EXPECT_LE(b.lower, *b.exact);
  EXPECT_EQ(b.lower, Rational(3));
}

TEST(Asymptotics, StrictGapForParametricFamily) {
  Filtration f = kw();
  MonomialIdeal m = I("x, y");
  SamuelBound b = samuel_lower_bound(f, m, 40);
  EXPECT_EQ(b.lower, Rational(1, 2));
  EXPECT_EQ(b.at_k, 2);
  EXPECT_FALSE(b.exact.has_value());
  EXPECT_EQ(rho_exact(f, m).value, Rational(1));
}

TEST(Asymptotics, Homogeneity) {
  Filtration f = three_pair_I();
  MonomialIdeal a = I("x^2, x*y^2, y^5");
  Rational base = samuel_exact(f, a);
  for (long k = 2; k <= 4; ++k) EXPECT_EQ(samuel_exact(f, power(a, k)), Rational(k) * base);
}

TEST(Asymptotics, Saturation) {
  Filtration f = three_pair_I();
  EXPECT_TRUE(saturation_member(f, Exponent{1, 1}, Rational(2)));
  EXPECT_FALSE(saturation_member(f, Exponent{1, 0}, Rational(2)));
  EXPECT_TRUE(saturation_member(f, Exponent{0, 0}, Rational(0)));
}

TEST(Asymptotics, ThreadCountInvariance) {
  Filtration f = three_pair_I();
  MonomialIdeal a = power(I("x^3, x*y, y^2"), 3);
  RhoResult r1 = rho_exact(f, a, 1);
  RhoResult r4 = rho_exact(f, a, 4);
  EXPECT_EQ(r1.value, r4.value);
  EXPECT_EQ(r1.argmin.weights(), r4.argmin.weights());
  EXPECT_EQ(r1.winner, r4.winner);
}

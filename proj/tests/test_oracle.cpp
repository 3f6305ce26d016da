#include <gtest/gtest.h>

#include <random>

#include "vip/dsl.hpp"
#include "vip/oracle.hpp"

using namespace vip;

namespace {
const std::vector<std::string> XY{"x", "y"};
MonomialIdeal I(const std::string& s) { return parse_ideal_text(s, XY); }

Filtration kw() {
  return dsl::load_model("vars x y\nideal m = (x, y)\nfiltration J(k) = m^k * (x^k, y)\n").filtration("J");
}
Filtration three_pair_I() {
  return Filtration::special_sum(
      {{I("x, y^6"), Rational(1)}, {I("y, x^6"), Rational(1)}, {I("x^4, x*y, y^4"), Rational(3)}});
}

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, int max_gens, int max_exp) {
  std::vector<Exponent> gens;
  int count = 1 + static_cast<int>(rng() % max_gens);
  for (int i = 0; i < count; ++i) {
    Exponent e(n);
    for (std::size_t j = 0; j < n; ++j) e[j] = static_cast<long>(rng() % (max_exp + 1));
    if (e.degree() == 0) e[rng() % n] = 1;
    gens.push_back(e);
  }
  return MonomialIdeal::generated_by(n, gens);
}
}  // namespace

TEST(Oracle, LiteralTermsMatchFastTerms) {
  for (const Filtration& f : {three_pair_I(), kw()})
    for (long m = 0; m <= 6; ++m)
      EXPECT_EQ(MonomialIdeal::generated_by(2, oracle::detail::literal_term(f, m)), f.term(m)) << m;
}

TEST(Oracle, BruteforceOrderMatchesFastOrder) {
  std::mt19937_64 rng(11);
  Filtration f = three_pair_I();
  for (int t = 0; t < 40; ++t) {
    MonomialIdeal a = random_ideal(rng, 2, 3, 6);
    auto slow = oracle::order_bruteforce(f, a, 14);
    if (slow.capped) continue;
    EXPECT_EQ(order(f, a).value, slow.value) << render(a, XY);
  }
}

TEST(Oracle, SamplingUpperBoundsRho) {
  std::mt19937_64 rng(5);
  Filtration f = three_pair_I();
  for (int t = 0; t < 20; ++t) {
    MonomialIdeal a = random_ideal(rng, 2, 3, 6);
    Rational rho = rho_exact(f, a).value;
    EXPECT_LE(rho, oracle::ratio_sampling_oracle(f, a, 300, 1000 + t)) << render(a, XY);
  }
  EXPECT_EQ(oracle::ratio_sampling_oracle(kw(), I("x, y"), 200, 1), Rational(1));
}

TEST(Oracle, SamplingIsSeedDeterministic) {
  MonomialIdeal a = I("x^3, x*y^2, y^5");
  EXPECT_EQ(oracle::ratio_sampling_oracle(three_pair_I(), a, 50, 9), oracle::ratio_sampling_oracle(three_pair_I(), a, 50, 9));
}

TEST(Oracle, SweepAgreesWithLp) {
  Filtration c = dsl::load_model("vars x y\nideal c = (x^2, y^3)\nfiltration C(k) = c^k\n").filtration("C");
  auto s = oracle::lct_sweep_oracle(MonomialIdeal::unit(2), c, 60, 4);
  EXPECT_EQ(s.value, Rational(5, 6));
  EXPECT_EQ(s.value, lct_filtration(MonomialIdeal::unit(2), c).value);
}

#include <gtest/gtest.h>

#include <random>

#include "coopx/examples.hpp"
#include "coopx/tu.hpp"

using namespace coopx;

namespace {

TUGame random_game(std::mt19937& rng, int n) {
  TUGame g(n);
  for (Mask s : canonical_subsets(n)) g.value(s) = static_cast<long>(rng() % 41) - 20;
  return g;
}

Rational coalition_sum(const Vector& x, Mask s) {
  Rational t = 0;
  for (int i : members(s)) t += x[i];
  return t;
}

}  // namespace

TEST(TuCore, ExampleOne) {
  const TUGame g = example1();
  const auto x = core_nonempty(g);
  ASSERT_TRUE(x);
  EXPECT_TRUE(check_core_point(g, *x).accepted);
  const CoreCheck c = check_core_point(g, {Rational(-8), Rational(-12), Rational(-15)});
  EXPECT_TRUE(c.accepted);
  EXPECT_TRUE(c.efficient);
  EXPECT_TRUE(is_balanced_tu(g).balanced);
}

TEST(TuCore, ModifiedExampleIsViolatedByPairs) {
  const TUGame g = example1_modified();
  EXPECT_FALSE(core_nonempty(g));
  for (auto method : {TuBalanceMethod::Auto, TuBalanceMethod::Enumerate, TuBalanceMethod::DualProgram}) {
    const TuBalance b = is_balanced_tu(g, method);
    EXPECT_FALSE(b.balanced);
    EXPECT_EQ(b.family.coalitions, (std::vector<Mask>{0b011, 0b101, 0b110}));
    EXPECT_EQ(b.family.weights, (Vector(3, make_rational(1, 2))));
    EXPECT_EQ(b.value, -41);
  }
}

TEST(TuCore, CheckReportsLargestExcess) {
  const TUGame g = example1();
  // Efficient but coalition {2,3} gets -35 < -32, {1,3} gets -30 < -28.
  const CoreCheck c = check_core_point(g, {Rational(0), Rational(-15), Rational(-20)});
  EXPECT_FALSE(c.accepted);
  EXPECT_TRUE(c.efficient);
  ASSERT_TRUE(c.blocking);
  EXPECT_EQ(*c.blocking, Mask{0b110});
  EXPECT_FALSE(check_core_point(g, {Rational(0), Rational(0), Rational(0)}).efficient);
}

TEST(TuCore, BondarevaShapleyOnRandomGames) {
  std::mt19937 rng(4242);
  int nonempty = 0;
  for (int it = 0; it < 400; ++it) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const TUGame g = random_game(rng, n);
    const auto x = core_nonempty(g);
    const TuBalance e = is_balanced_tu(g, TuBalanceMethod::Enumerate);
    const TuBalance d = is_balanced_tu(g, TuBalanceMethod::DualProgram);
    SCOPED_TRACE("instance " + std::to_string(it));
    EXPECT_EQ(x.has_value(), e.balanced);
    EXPECT_EQ(e.balanced, d.balanced);
    EXPECT_EQ(e.value, d.value);
    EXPECT_TRUE(verify_family(e.family, n));
    EXPECT_TRUE(verify_family(d.family, n));
    if (x) {
      ++nonempty;
      EXPECT_EQ(coalition_sum(*x, full_mask(n)), g.grand());
      for (Mask s : canonical_subsets(n)) EXPECT_GE(coalition_sum(*x, s), g.value(s));
      EXPECT_TRUE(check_core_point(g, *x).accepted);
    } else {
      EXPECT_GT(e.value, g.grand());
    }
  }
  EXPECT_GT(nonempty, 20);
  EXPECT_LT(nonempty, 380);
}

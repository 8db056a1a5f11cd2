#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "coopx/balance.hpp"
#include "coopx/error.hpp"
#include "coopx/linear.hpp"

using namespace coopx;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

FirmSystem units(int d, Vector r) {
  FirmSystem fs;
  for (int i = 0; i < d; ++i) fs.firms.push_back(unit_vector(d, i));
  fs.resource = std::move(r);
  return fs;
}

FirmSystem coalition_system(int n) {
  FirmSystem fs;
  for (Mask s : canonical_subsets(n)) {
    Vector v(n);
    for (int i : members(s)) v[i] = make_rational(1, popcount(s));
    fs.firms.push_back(v);
  }
  fs.resource = Vector(n, make_rational(1, n));
  return fs;
}

FirmSystem random_system(std::mt19937& rng, std::size_t m, std::size_t d) {
  FirmSystem fs;
  for (std::size_t i = 0; i < m; ++i) {
    Vector v(d);
    for (auto& x : v) x = static_cast<long>(rng() % 5) - 1;
    fs.firms.push_back(v);
  }
  fs.resource = Vector(d);
  for (auto& x : fs.resource) x = static_cast<long>(rng() % 3);
  if (is_zero(fs.resource)) fs.resource[0] = 1;
  return fs;
}

// Direct LP: lambda >= 0 with sum lambda_i v_i = r (and sum lambda = 1 when convex).
bool oracle_balanced(Mask s, const FirmSystem& fs, BalanceMode mode) {
  const auto idx = members(s);
  LinearSystem sys(idx.size(), true);
  for (std::size_t k = 0; k < fs.dimension(); ++k) {
    Vector row;
    for (int i : idx) row.push_back(fs.firms[i][k]);
    sys.add_eq(row, fs.resource[k]);
  }
  if (mode == BalanceMode::Convex) sys.add_eq(ones(idx.size()), 1);
  return solve_feasibility(sys).has_value();
}

bool covers_exactly(const std::vector<Mask>& family, int n) {
  LinearSystem sys(family.size(), true);
  for (int p = 0; p < n; ++p) {
    Vector row;
    for (Mask s : family) row.emplace_back(has(s, p) ? 1 : 0);
    sys.add_eq(row, 1);
  }
  return solve_feasibility(sys).has_value();
}

// Every minimal balanced family of n players by scanning all subfamilies of
// the 2^n - 1 coalitions; feasible for n <= 3 only.
std::set<std::vector<Mask>> brute_force_families(int n) {
  const auto coalitions = canonical_subsets(n);
  const std::size_t c = coalitions.size();
  std::vector<std::vector<Mask>> balanced;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << c); ++pick) {
    std::vector<Mask> fam;
    for (std::size_t k = 0; k < c; ++k) {
      if ((pick >> k) & 1U) fam.push_back(coalitions[k]);
    }
    if (covers_exactly(fam, n)) balanced.push_back(fam);
  }
  std::set<std::vector<Mask>> minimal;
  for (const auto& f : balanced) {
    const bool has_proper_sub = std::any_of(balanced.begin(), balanced.end(), [&](const auto& g) {
      return g.size() < f.size() && std::includes(f.begin(), f.end(), g.begin(), g.end(), canonical_less);
    });
    if (!has_proper_sub) minimal.insert(f);
  }
  return minimal;
}

}  // namespace

TEST(RBalanced, UnitBasis) {
  const FirmSystem fs = units(4, vec({1, 1, 1, 1}));
  const auto w = is_r_balanced(0b1111, fs);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, vec({1, 1, 1, 1}));
  EXPECT_FALSE(is_r_balanced(0b0111, fs));
  for (Mask s = 1; s < 16; ++s) EXPECT_FALSE(is_conv_r_balanced(s, fs));
  EXPECT_THROW(is_r_balanced(0b10000, fs), Error);
}

TEST(RBalanced, PairCoalitionsOfThree) {
  const FirmSystem fs = coalition_system(3);
  // Firms 3, 4, 5 are {1,2}, {1,3}, {2,3}, each 1_S / 2.
  const auto w = is_r_balanced(0b111000, fs);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (Vector(3, make_rational(1, 3))));
  Vector total(3);
  const auto idx = members(0b111000);
  for (std::size_t k = 0; k < idx.size(); ++k) total = add(total, scale(fs.firms[idx[k]], (*w)[k]));
  EXPECT_EQ(total, fs.resource);
}

TEST(RBalanced, TriangleBarycenter) {
  FirmSystem fs;
  fs.firms = {vec({3, 0}), vec({0, 3}), vec({0, 0})};
  fs.resource = vec({1, 1});
  const auto w = is_conv_r_balanced(0b111, fs);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (Vector(3, make_rational(1, 3))));
  EXPECT_FALSE(is_conv_r_balanced(0b011, fs));
  EXPECT_FALSE(is_conv_r_balanced(0b101, fs));
  EXPECT_FALSE(is_conv_r_balanced(0b110, fs));
}

TEST(EnumerateBs, Examples) {
  EXPECT_EQ(enumerate_bs(units(4, vec({1, 1, 1, 1})), BalanceMode::Cone), std::vector<Mask>{0b1111});

  FirmSystem single;
  single.firms = {vec({2, 5})};
  single.resource = vec({2, 5});
  EXPECT_EQ(enumerate_bs(single, BalanceMode::Cone), std::vector<Mask>{1});

  const auto bs = enumerate_bs(coalition_system(3), BalanceMode::Convex);
  const std::set<Mask> got(bs.begin(), bs.end());
  for (Mask s : {Mask{0b0000111}, Mask{0b0100001}, Mask{0b0111000}, Mask{0b1000000}}) {
    EXPECT_TRUE(got.count(s)) << s;
    for (Mask t = 1; t < 128; ++t) {
      if ((t & s) == s) EXPECT_TRUE(got.count(t)) << t;
    }
  }
}

TEST(EnumerateBs, MatchesOracleAndIsUpSetOfMinimal) {
  std::mt19937 rng(21);
  for (int it = 0; it < 60; ++it) {
    const std::size_t m = 2 + rng() % 5;
    const std::size_t d = 2 + rng() % 2;
    const FirmSystem fs = random_system(rng, m, d);
    for (BalanceMode mode : {BalanceMode::Cone, BalanceMode::Convex}) {
      std::vector<Mask> expected;
      for (Mask s = 1; s < (Mask{1} << m); ++s) {
        if (oracle_balanced(s, fs, mode)) expected.push_back(s);
      }
      std::sort(expected.begin(), expected.end(), canonical_less);
      const auto bs = enumerate_bs(fs, mode);
      EXPECT_EQ(bs, expected);

      const auto minimal = minimal_balanced_sets(fs, mode);
      for (Mask s : expected) {
        const bool is_minimal = std::none_of(expected.begin(), expected.end(),
                                             [&](Mask t) { return t != s && (t & s) == t; });
        EXPECT_EQ(is_minimal, std::count(minimal.begin(), minimal.end(), s) == 1) << s;
        if (mode == BalanceMode::Cone) {
          // Monotone in cone mode.
          for (Mask t = 1; t < (Mask{1} << m); ++t) {
            if ((t & s) == s) EXPECT_TRUE(std::count(expected.begin(), expected.end(), t)) << t;
          }
        }
      }
      for (Mask s : bs) {
        const auto w = balanced_weights(s, fs, mode);
        ASSERT_TRUE(w);
        Vector total(d);
        const auto idx = members(s);
        for (std::size_t k = 0; k < idx.size(); ++k) {
          EXPECT_GE((*w)[k], 0);
          total = add(total, scale(fs.firms[idx[k]], (*w)[k]));
        }
        EXPECT_EQ(total, fs.resource);
        if (mode == BalanceMode::Convex) EXPECT_EQ(sum(*w), 1);
      }
    }
  }
}

TEST(EnumerateBs, CapExceeded) {
  EXPECT_THROW(enumerate_bs(units(4, vec({1, 1, 1, 1})), BalanceMode::Cone, 3), Error);
}

TEST(MinimalFamilies, SmallCounts) {
  ASSERT_EQ(minimal_balanced_families(1).size(), 1U);
  EXPECT_EQ(minimal_balanced_families(1)[0].weights, vec({1}));
  EXPECT_EQ(minimal_balanced_families(2).size(), 2U);
  EXPECT_EQ(minimal_balanced_families(3).size(), 6U);
  EXPECT_EQ(minimal_balanced_families(4).size(), 42U);
  EXPECT_THROW(minimal_balanced_families(6), Error);
}

TEST(MinimalFamilies, FivePlayers) {
  // 31 coalitions as firms, one below the mask width.
  const auto& fams = minimal_balanced_families(5);
  EXPECT_EQ(fams.size(), 1292U);
  for (const auto& f : fams) EXPECT_TRUE(verify_family(f, 5));
}

TEST(MinimalFamilies, ThreePlayersMatchBruteForce) {
  std::set<std::vector<Mask>> got;
  for (const auto& f : minimal_balanced_families(3)) {
    auto c = f.coalitions;
    std::sort(c.begin(), c.end(), canonical_less);
    got.insert(c);
  }
  EXPECT_EQ(got, brute_force_families(3));
  for (const auto& f : minimal_balanced_families(3)) {
    if (f.coalitions.size() == 3 && popcount(f.coalitions[0]) == 2) {
      EXPECT_EQ(f.weights, (Vector(3, make_rational(1, 2))));
    }
  }
}

TEST(MinimalFamilies, WeightsAreUniqueAndPositive) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& f : minimal_balanced_families(n)) {
      EXPECT_TRUE(verify_family(f, n));
      Matrix m;
      for (Mask s : f.coalitions) {
        Vector col(n);
        for (int p : members(s)) col[p] = 1;
        m.push_back(col);
      }
      EXPECT_EQ(rank(m), f.coalitions.size());
      for (const auto& w : f.weights) EXPECT_GT(w, 0);
    }
  }
}

TEST(MinimalFamilies, FourPlayerMinimalityByOracle) {
  for (const auto& f : minimal_balanced_families(4)) {
    ASSERT_TRUE(covers_exactly(f.coalitions, 4));
    const std::size_t k = f.coalitions.size();
    for (std::uint32_t pick = 1; pick + 1 < (std::uint32_t{1} << k); ++pick) {
      std::vector<Mask> sub;
      for (std::size_t j = 0; j < k; ++j) {
        if ((pick >> j) & 1U) sub.push_back(f.coalitions[j]);
      }
      EXPECT_FALSE(covers_exactly(sub, 4));
    }
  }
}

TEST(Equivalence, ScalingAndWitness) {
  std::mt19937 rng(31);
  for (int it = 0; it < 30; ++it) {
    const FirmSystem fs = random_system(rng, 2 + rng() % 4, 3);
    EXPECT_TRUE(bs_equivalent(fs, fs, BalanceMode::Cone).equivalent);
    FirmSystem scaled = fs;
    for (auto& v : scaled.firms) v = scale(v, make_rational(1 + static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 5)));
    EXPECT_TRUE(bs_equivalent(fs, scaled, BalanceMode::Cone).equivalent);
  }
  const auto diff = bs_equivalent(units(2, vec({1, 0})), units(2, vec({0, 1})), BalanceMode::Cone);
  EXPECT_FALSE(diff.equivalent);
  ASSERT_TRUE(diff.witness);
  EXPECT_EQ(*diff.witness, Mask{1});
  EXPECT_THROW(bs_equivalent(units(2, vec({1, 0})), units(3, vec({1, 0, 0})), BalanceMode::Cone), Error);
}

TEST(Convexify, UnitBasis) {
  const auto c = convexify(units(4, vec({1, 1, 1, 1})));
  ASSERT_TRUE(c.system);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(c.system->firms[i], scale(unit_vector(4, i), 4));
  EXPECT_EQ(is_conv_r_balanced(0b1111, *c.system), (Vector(4, make_rational(1, 4))));
}

TEST(Convexify, IdentityOnHyperplaneAndOffending) {
  FirmSystem on;
  on.firms = {vec({2, 0}), vec({0, 2}), vec({1, 1})};
  on.resource = vec({1, 1});
  const auto c = convexify(on);
  ASSERT_TRUE(c.system);
  EXPECT_EQ(*c.system, on);

  FirmSystem bad;
  bad.firms = {vec({2, -1})};
  bad.resource = vec({0, 1});
  const auto b = convexify(bad);
  EXPECT_FALSE(b.system);
  EXPECT_EQ(b.offending_firm, std::optional<std::size_t>(0));
}

TEST(Convexify, PreservesBalancedSetsAndMakesThemConvex) {
  std::mt19937 rng(41);
  int checked = 0;
  for (int it = 0; it < 80; ++it) {
    const FirmSystem fs = random_system(rng, 2 + rng() % 4, 3);
    const auto c = convexify(fs);
    if (!c.system) {
      ASSERT_TRUE(c.offending_firm);
      EXPECT_LE(dot(fs.firms[*c.offending_firm], fs.resource), 0);
      continue;
    }
    ++checked;
    EXPECT_TRUE(bs_equivalent(fs, *c.system, BalanceMode::Cone).equivalent);
    EXPECT_EQ(enumerate_bs(*c.system, BalanceMode::Cone), enumerate_bs(*c.system, BalanceMode::Convex));
  }
  EXPECT_GT(checked, 10);
}

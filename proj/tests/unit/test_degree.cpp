#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "coopx/degree.hpp"
#include "coopx/error.hpp"
#include "coopx/examples.hpp"
#include "coopx/linear.hpp"

using namespace coopx;

namespace {

FirmSystem unit_firms(int n) {
  FirmSystem fs;
  for (int i = 0; i < n; ++i) fs.firms.push_back(unit_vector(n, i));
  fs.resource = Vector(n, make_rational(1, n));
  return fs;
}

Triangulation subdivided_simplex_boundary(int corners, int depth) {
  std::vector<Vector> pts;
  for (int i = 0; i < corners; ++i) pts.push_back(unit_vector(corners, i));
  return barycentric_subdivision(simplex_boundary(pts), depth);
}

// Each vertex gets one firm from its carrier, i.e. a Sperner labeling.
Labeling sperner(const Triangulation& t, std::mt19937& rng) {
  Labeling l;
  for (const auto& c : t.carriers) l.push_back(Mask{1} << c[rng() % c.size()]);
  return l;
}

Labeling random_labels(const Triangulation& t, int firms, std::mt19937& rng) {
  Labeling l(t.complex.complex.vertices);
  for (auto& m : l) m = Mask{1} << (rng() % firms);
  return l;
}

FirmSystem affine_image(const FirmSystem& fs, std::mt19937& rng) {
  const std::size_t d = fs.dimension();
  Matrix a(d, Vector(d));
  do {
    for (auto& row : a) {
      for (auto& x : row) x = static_cast<long>(rng() % 5) - 2;
    }
  } while (determinant(a) == 0);
  Vector b(d);
  for (auto& x : b) x = static_cast<long>(rng() % 5) - 2;
  auto map = [&](const Vector& v) {
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i) out[i] = dot(a[i], v) + b[i];
    return out;
  };
  FirmSystem out;
  for (const auto& v : fs.firms) out.firms.push_back(map(v));
  out.resource = map(fs.resource);
  return out;
}

}  // namespace

TEST(Degree, SpernerLabelingsHaveDegreeOne) {
  std::mt19937 rng(8);
  for (int corners = 3; corners <= 4; ++corners) {
    for (int depth = 0; depth <= (corners == 3 ? 3 : 2); ++depth) {
      const Triangulation t = subdivided_simplex_boundary(corners, depth);
      for (int it = 0; it < 5; ++it) {
        const DegreeResult r = pl_degree(t.complex, sperner(t, rng), unit_firms(corners));
        ASSERT_FALSE(r.balanced());
        EXPECT_EQ(r.degree, 1);
      }
    }
  }
}

TEST(Degree, ReversedOrientationNegates) {
  std::mt19937 rng(9);
  const Triangulation t = subdivided_simplex_boundary(4, 1);
  const Labeling l = sperner(t, rng);
  EXPECT_EQ(pl_degree(t.complex.reversed(), l, unit_firms(4)).degree, -1);
}

TEST(Degree, ConstantLabelingIsZero) {
  const Triangulation t = subdivided_simplex_boundary(3, 2);
  const Labeling l(t.complex.complex.vertices, Mask{1});
  const DegreeResult r = pl_degree(t.complex, l, unit_firms(3));
  ASSERT_FALSE(r.balanced());
  EXPECT_EQ(r.degree, 0);
}

TEST(Degree, FirmPermutationMultipliesBySign) {
  std::mt19937 rng(10);
  const Triangulation t = subdivided_simplex_boundary(4, 1);
  const Labeling base = sperner(t, rng);
  std::vector<int> perm = {0, 1, 2, 3};
  do {
    Labeling l;
    for (Mask m : base) l.push_back(Mask{1} << perm[members(m).front()]);
    const DegreeResult r = pl_degree(t.complex, l, unit_firms(4));
    ASSERT_FALSE(r.balanced());
    EXPECT_EQ(r.degree, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Degree, ChoiceRuleOnMultiLabels) {
  // Labels holding several firms of the carrier still give degree one.
  const Triangulation t = subdivided_simplex_boundary(3, 2);
  Labeling l;
  for (const auto& c : t.carriers) l.push_back(mask_of(c));
  for (ChoiceRule rule : {ChoiceRule::Lowest, ChoiceRule::Highest}) {
    const DegreeResult r = pl_degree(t.complex, l, unit_firms(3), rule);
    ASSERT_FALSE(r.balanced());
    EXPECT_EQ(r.degree, 1);
  }
}

TEST(Degree, BalancedFacetIsReported) {
  const Triangulation t = subdivided_simplex_boundary(3, 1);
  Labeling l(t.complex.complex.vertices, Mask{1});
  l[t.complex.facets().front()[0]] = 0b111;
  const DegreeResult r = pl_degree(t.complex, l, unit_firms(3));
  ASSERT_TRUE(r.balanced());
  EXPECT_EQ(*r.balanced_facet, t.complex.facets().front());
  const auto rainbow = rainbow_simplices(t.complex.complex, l, unit_firms(3), BalanceMode::Convex);
  EXPECT_FALSE(rainbow.empty());
  std::mt19937 rng(11);
  EXPECT_TRUE(rainbow_simplices(t.complex.complex, sperner(t, rng), unit_firms(3), BalanceMode::Convex).empty());
}

TEST(Degree, InvariantUnderConvBsEquivalence) {
  std::mt19937 rng(12);
  int nonzero = 0;
  for (int it = 0; it < 40; ++it) {
    FirmSystem fs;
    fs.resource = Vector(3);
    for (int i = 0; i < 4; ++i) {
      Vector v(3);
      for (auto& x : v) x = static_cast<long>(rng() % 7) - 3;
      fs.firms.push_back(v);
    }
    Matrix edges;
    for (int i = 1; i < 4; ++i) edges.push_back(sub(fs.firms[i], fs.firms[0]));
    if (rank(edges) < 3) continue;
    // r at the centroid lies inside conv(V) whenever V is affinely independent.
    for (const auto& v : fs.firms) fs.resource = add(fs.resource, scale(v, make_rational(1, 4)));
    const Triangulation t = subdivided_simplex_boundary(4, 1);
    const Labeling l = it % 2 ? sperner(t, rng) : random_labels(t, 4, rng);
    const FirmSystem image = affine_image(fs, rng);
    ASSERT_EQ(enumerate_bs(fs, BalanceMode::Convex), enumerate_bs(image, BalanceMode::Convex));
    const DegreeResult a = pl_degree(t.complex, l, fs);
    const DegreeResult b = pl_degree(t.complex, l, image);
    ASSERT_EQ(a.balanced(), b.balanced());
    if (a.balanced()) continue;
    EXPECT_EQ(std::abs(a.degree), std::abs(b.degree));
    nonzero += a.degree != 0;
  }
  EXPECT_GT(nonzero, 10);
}

TEST(IndexSum, BubblePairs) {
  const std::pair<int, int> configs[] = {{1, 1}, {1, -1}, {-1, -1}};
  for (auto [first, second] : configs) {
    const BubbleFixture f = bubble_pair(first, second);
    const IndexSum s = index_sum_check(f.region.complex, f.labels, f.firms);
    SCOPED_TRACE(std::to_string(first) + "," + std::to_string(second));
    ASSERT_FALSE(s.boundary_degree.balanced());
    EXPECT_EQ(s.boundary_degree.degree, first + second);
    ASSERT_EQ(s.components.size(), 2U);
    EXPECT_EQ(s.components[0].index + s.components[1].index, first + second);
    std::vector<long> indices = {s.components[0].index, s.components[1].index};
    std::sort(indices.begin(), indices.end());
    std::vector<long> expected = {first, second};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(indices, expected);
    EXPECT_TRUE(s.sum_matches);
  }
}

TEST(IndexSum, ComponentIndexMatchesBoundaryOfItsStar) {
  const BubbleFixture f = bubble_pair(1, 1);
  const auto comps = balanced_components(f.region.complex, f.labels, f.firms);
  ASSERT_EQ(comps.size(), 2U);
  for (const auto& c : comps) EXPECT_EQ(component_index(f.region.complex, f.labels, f.firms, c), 1);
  EXPECT_EQ(pl_degree(boundary(f.region.complex), f.labels, f.firms).degree, 2);
}

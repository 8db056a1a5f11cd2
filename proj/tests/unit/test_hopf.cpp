#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <set>

#include "coopx/degree.hpp"
#include "coopx/error.hpp"
#include "coopx/hopf.hpp"
#include "coopx/induce.hpp"

using namespace coopx;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::MalformedInput;
}

OrientedComplex simplex4_boundary() {
  std::vector<std::vector<int>> facets;
  std::vector<int> signs;
  for (int skip = 0; skip < 5; ++skip) {
    std::vector<int> f;
    for (int v = 0; v < 5; ++v) {
      if (v != skip) f.push_back(v);
    }
    facets.push_back(f);
    signs.push_back(skip % 2 ? -1 : 1);
  }
  return make_oriented(5, facets, signs);
}

using P3 = std::array<double, 3>;

// The fibre over color c, the cycle of color-c vertices, as a fine polygon
// on the unit 3-sphere mapped to R^3 by stereographic projection.
std::vector<P3> fibre(const HopfAsset& a, int c) {
  std::vector<int> cycle;
  for (int v = 0; v < 12; ++v) {
    if (a.colors[v] == c) cycle.push_back(v);
  }
  std::vector<P3> out;
  const int steps = 200;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const Vector& p = a.positions[cycle[k]];
    const Vector& q = a.positions[cycle[(k + 1) % cycle.size()]];
    for (int s = 0; s < steps; ++s) {
      const double t = static_cast<double>(s) / steps;
      std::array<double, 4> y;
      double norm = 0;
      for (int i = 0; i < 4; ++i) {
        y[i] = (1 - t) * p[i].get_d() + t * q[i].get_d();
        norm += y[i] * y[i];
      }
      norm = std::sqrt(norm);
      for (auto& x : y) x /= norm;
      // Pole at (0, 0, 0, 1) after a fixed generic rotation in the last plane.
      const double w = 0.8 * y[3] + 0.6 * y[2];
      const double z = -0.6 * y[3] + 0.8 * y[2];
      out.push_back({y[0] / (1 - w), y[1] / (1 - w), z / (1 - w)});
    }
  }
  return out;
}

// Half the signed crossing count of a generic projection to the xy-plane.
long linking_number(const std::vector<P3>& a, const std::vector<P3>& b) {
  double total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const P3& p0 = a[i];
    const P3& p1 = a[(i + 1) % a.size()];
    for (std::size_t j = 0; j < b.size(); ++j) {
      const P3& q0 = b[j];
      const P3& q1 = b[(j + 1) % b.size()];
      const double dx = p1[0] - p0[0], dy = p1[1] - p0[1];
      const double ex = q1[0] - q0[0], ey = q1[1] - q0[1];
      const double den = dx * ey - dy * ex;
      if (den == 0) continue;
      const double s = ((q0[0] - p0[0]) * ey - (q0[1] - p0[1]) * ex) / den;
      const double t = ((q0[0] - p0[0]) * dy - (q0[1] - p0[1]) * dx) / den;
      if (s < 0 || s >= 1 || t < 0 || t >= 1) continue;
      const double za = p0[2] + s * (p1[2] - p0[2]);
      const double zb = q0[2] + t * (q1[2] - q0[2]);
      total += (za > zb ? 1 : -1) * (den > 0 ? 1 : -1);
    }
  }
  return std::lround(total / 2);
}

}  // namespace

TEST(HopfAsset, PassesManifoldChecks) {
  const HopfAsset& a = hopf_asset();
  EXPECT_EQ(a.complex.complex.vertices, 12);
  EXPECT_EQ(a.checksum, asset_checksum(a.complex.complex, a.colors));
  const ManifoldReport r = validate_closed_manifold(a.complex.complex);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.euler, 0);
  EXPECT_TRUE(is_coherent_cycle(a.complex));
  EXPECT_EQ(a.positions.size(), 12U);
  std::set<int> used(a.colors.begin(), a.colors.end());
  EXPECT_EQ(used, (std::set<int>{0, 1, 2, 3}));
  for (const auto& f : a.complex.facets()) {
    std::set<int> c;
    for (int v : f) c.insert(a.colors[v]);
    EXPECT_LE(c.size(), 3U);
  }
}

TEST(HopfInvariant, AbsoluteValueOne) {
  const HopfAsset& a = hopf_asset();
  EXPECT_EQ(std::abs(hopf_invariant(a.complex, a.colors)), 1);
}

TEST(HopfInvariant, FibresArePairwiseLinkedOnce) {
  const HopfAsset& a = hopf_asset();
  for (int c = 0; c < 4; ++c) {
    for (int d = c + 1; d < 4; ++d) EXPECT_EQ(std::abs(linking_number(fibre(a, c), fibre(a, d))), 1) << c << d;
  }
}

TEST(HopfInvariant, IndependentOfColorPermutation) {
  const HopfAsset& a = hopf_asset();
  const long h = hopf_invariant(a.complex, a.colors);
  std::vector<int> perm = {0, 1, 2, 3};
  do {
    std::vector<int> colors;
    for (int c : a.colors) colors.push_back(perm[c]);
    EXPECT_EQ(hopf_invariant(a.complex, colors), h);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(HopfInvariant, IndependentOfTargetTriangle) {
  const HopfAsset& a = hopf_asset();
  const long h = hopf_invariant(a.complex, a.colors);
  for (const auto& t : std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {2, 1, 0}, {3, 0, 2}}) {
    EXPECT_EQ(hopf_invariant(a.complex, a.colors, t), h);
  }
}

TEST(HopfInvariant, ReversedOrientationNegates) {
  const HopfAsset& a = hopf_asset();
  EXPECT_EQ(hopf_invariant(a.complex.reversed(), a.colors), -hopf_invariant(a.complex, a.colors));
}

TEST(HopfInvariant, TrivialMapsGiveZero) {
  const HopfAsset& a = hopf_asset();
  EXPECT_EQ(hopf_invariant(a.complex, std::vector<int>(12, 0)), 0);
  std::vector<int> two(12);
  for (int v = 0; v < 12; ++v) two[v] = v % 2;
  EXPECT_EQ(hopf_invariant(a.complex, two), 0);
  // The 5-vertex sphere colored with three colors misses a face of the target.
  EXPECT_EQ(hopf_invariant(simplex4_boundary(), {0, 0, 1, 1, 2}), 0);
}

TEST(HopfInvariant, Errors) {
  const HopfAsset& a = hopf_asset();
  std::vector<int> four = a.colors;
  const Simplex& f = a.complex.facets().front();
  for (int k = 0; k < 4; ++k) four[f[k]] = k;
  EXPECT_EQ(code_of([&] { hopf_invariant(a.complex, four); }), ErrorCode::NotSimplicial);
  EXPECT_EQ(code_of([&] { hopf_invariant(a.complex, std::vector<int>(12, 4)); }), ErrorCode::NotSimplicial);
  EXPECT_EQ(code_of([&] { hopf_invariant(a.complex, std::vector<int>(11, 0)); }), ErrorCode::CountMismatch);

  const OrientedComplex s2 = orient(SimplicialComplex{4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}});
  EXPECT_EQ(code_of([&] { hopf_invariant(s2, {0, 1, 2, 3}); }), ErrorCode::NotSphere);

  // Two disjoint 3-spheres: closed and orientable, but not connected.
  OrientedComplex two = simplex4_boundary();
  const OrientedComplex one = simplex4_boundary();
  two.complex.vertices = 10;
  for (std::size_t i = 0; i < one.facets().size(); ++i) {
    Simplex g = one.facets()[i];
    for (int& v : g) v += 5;
    two.complex.facets.push_back(g);
    two.orientation.push_back(one.orientation[i]);
  }
  EXPECT_EQ(code_of([&] { hopf_invariant(two, std::vector<int>(10, 0)); }), ErrorCode::NotSphere);
}

TEST(HopfGame, RegionCarriesRainbowCells) {
  const HopfAsset& a = hopf_asset();
  const GeneralizedGame g = hopf_game(a);
  EXPECT_EQ(g.firm_count(), 4U);
  EXPECT_EQ(g.dimension(), 5U);
  const auto pts = hopf_sphere_points(a);
  for (const auto& p : pts) EXPECT_EQ(sum(p), 0);

  const InducedCover cover = induce_labeling(g, hopf_region(a), 0);
  EXPECT_FALSE(rainbow_simplices(cover.triangulation.complex.complex, cover.labels, g.firm_system,
                                 BalanceMode::Cone)
                   .empty());
  EXPECT_FALSE(cover_probes(g, cover).empty());
}

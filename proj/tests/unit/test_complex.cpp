#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "coopx/complex.hpp"
#include "coopx/error.hpp"

using namespace coopx;

namespace {

SimplicialComplex simplex_boundary_complex(int k) {
  SimplicialComplex c;
  c.vertices = k + 2;
  for (int skip = 0; skip < k + 2; ++skip) {
    Simplex f;
    for (int v = 0; v < k + 2; ++v) {
      if (v != skip) f.push_back(v);
    }
    c.facets.push_back(f);
  }
  return c;
}

SimplicialComplex sorted_complex(int vertices, std::vector<Simplex> facets) {
  for (auto& f : facets) std::sort(f.begin(), f.end());
  return SimplicialComplex{vertices, std::move(facets)};
}

long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

}  // namespace

TEST(Permutation, Sign) {
  EXPECT_EQ(permutation_sign({0, 1, 2}), 1);
  EXPECT_EQ(permutation_sign({1, 0, 2}), -1);
  EXPECT_EQ(permutation_sign({2, 0, 1}), 1);
  EXPECT_EQ(permutation_sign({7, 3}), -1);
}

TEST(Manifold, SimplexBoundaries) {
  const auto s2 = simplex_boundary_complex(2);
  const ManifoldReport r2 = validate_closed_manifold(s2);
  EXPECT_TRUE(r2.ok());
  EXPECT_EQ(r2.euler, 2);
  const auto s3 = simplex_boundary_complex(3);
  const ManifoldReport r3 = validate_closed_manifold(s3);
  EXPECT_TRUE(r3.ok());
  EXPECT_EQ(r3.euler, 0);
  EXPECT_EQ(euler_characteristic(simplex_boundary_complex(1)), 0);
  EXPECT_TRUE(is_coherent_cycle(orient(s3)));
}

TEST(Manifold, ProjectivePlaneIsNotOrientable) {
  const auto rp2 = sorted_complex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                      {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
  const ManifoldReport r = validate_closed_manifold(rp2);
  EXPECT_TRUE(r.ridges_paired);
  EXPECT_FALSE(r.orientable);
  EXPECT_EQ(r.euler, 1);
  EXPECT_FALSE(coherent_orientation(rp2));
  EXPECT_THROW(orient(rp2), Error);
}

TEST(Manifold, PinchedSpheresFailTheLinkCheck) {
  // Two tetrahedron boundaries sharing vertex 0.
  const auto pinched = sorted_complex(7, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                          {0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}});
  const ManifoldReport r = validate_closed_manifold(pinched);
  EXPECT_TRUE(r.ridges_paired);
  EXPECT_FALSE(r.links_ok);
  EXPECT_FALSE(r.ok());
}

TEST(Manifold, OpenAndBranchedComplexes) {
  const auto disk = sorted_complex(4, {{0, 1, 2}, {0, 2, 3}});
  EXPECT_FALSE(validate_closed_manifold(disk).ridges_paired);
  const auto book = sorted_complex(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  EXPECT_FALSE(validate_closed_manifold(book).ok());
  SimplicialComplex ragged{4, {{0, 1, 2}, {2, 3}}};
  EXPECT_THROW(ragged.check(), Error);
  SimplicialComplex unsorted{3, {{1, 0, 2}}};
  EXPECT_THROW(unsorted.check(), Error);
}

TEST(Orientation, MakeOrientedFoldsParity) {
  const OrientedComplex k = make_oriented(3, {{1, 0, 2}});
  ASSERT_EQ(k.facets().size(), 1U);
  EXPECT_EQ(k.facets()[0], (Simplex{0, 1, 2}));
  EXPECT_EQ(k.orientation[0], -1);
  EXPECT_EQ(k.reversed().orientation[0], 1);
  EXPECT_EQ(k.reversed().reversed(), k);
}

TEST(Orientation, BoundaryOfBoundaryIsEmpty) {
  const OrientedComplex tri = make_oriented(3, {{0, 1, 2}});
  const OrientedComplex edges = boundary(tri);
  EXPECT_EQ(edges.facets().size(), 3U);
  EXPECT_TRUE(is_coherent_cycle(edges));
  EXPECT_TRUE(boundary(edges).facets().empty());
}

TEST(Subdivision, CountsEulerAndCoherence) {
  for (int k = 1; k <= 3; ++k) {
    const Triangulation base = as_triangulation(orient(simplex_boundary_complex(k)));
    const long chi = euler_characteristic(base.complex.complex);
    for (int depth = 1; depth <= (k == 3 ? 1 : 2); ++depth) {
      const Triangulation t = barycentric_subdivision(base, depth);
      long expected = static_cast<long>(base.complex.facets().size());
      for (int d = 0; d < depth; ++d) expected *= factorial(k + 1);
      EXPECT_EQ(static_cast<long>(t.complex.facets().size()), expected);
      EXPECT_EQ(euler_characteristic(t.complex.complex), chi);
      EXPECT_TRUE(is_coherent_cycle(t.complex));
      EXPECT_TRUE(validate_closed_manifold(t.complex.complex).ok());
      EXPECT_EQ(t.carriers.size(), static_cast<std::size_t>(t.complex.complex.vertices));
    }
  }
}

TEST(Subdivision, PositionsAreBarycentersOfCarriers) {
  const Triangulation s = simplex_boundary({{Rational(6), Rational(0), Rational(0)},
                                            {Rational(0), Rational(6), Rational(0)},
                                            {Rational(0), Rational(0), Rational(6)}});
  const Triangulation t = barycentric_subdivision(s, 2);
  for (std::size_t v = 0; v < t.positions.size(); ++v) {
    // Every new vertex lies on the carrying face of the original triangle.
    EXPECT_EQ(sum(t.positions[v]), 6);
    for (int c = 0; c < 3; ++c) {
      const bool in_carrier = std::count(t.carriers[v].begin(), t.carriers[v].end(), c) > 0;
      if (!in_carrier) EXPECT_EQ(t.positions[v][c], 0);
    }
  }
}

TEST(Subdivision, BoundaryCommutesWithSubdivision) {
  const Triangulation tri = as_triangulation(make_oriented(3, {{0, 1, 2}}));
  const Triangulation fine = barycentric_subdivision(tri, 1);
  const OrientedComplex b = boundary(fine.complex);
  EXPECT_EQ(b.facets().size(), 6U);
  EXPECT_TRUE(is_coherent_cycle(b));
}

TEST(Regions, CubeBoundary) {
  for (int n = 3; n <= 4; ++n) {
    const Triangulation c = cube_boundary(n, 2);
    const ManifoldReport r = validate_closed_manifold(c.complex.complex);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.euler, n == 3 ? 0 : 2);
    EXPECT_TRUE(is_coherent_cycle(c.complex));
    std::set<Vector> pts(c.positions.begin(), c.positions.end());
    for (const auto& p : c.positions) {
      EXPECT_EQ(sum(p), 0);
      EXPECT_TRUE(pts.count(scale(p, -1)));
    }
  }
}

TEST(Regions, ConeOverSphereIsDiskWithThatBoundary) {
  const Triangulation circle = simplex_boundary({{Rational(3), Rational(0), Rational(0)},
                                                 {Rational(0), Rational(3), Rational(0)},
                                                 {Rational(0), Rational(0), Rational(3)}});
  const Triangulation disk = cone(circle, {Rational(1), Rational(1), Rational(1)});
  EXPECT_EQ(disk.complex.complex.vertices, 4);
  EXPECT_EQ(disk.positions.back(), (Vector{Rational(1), Rational(1), Rational(1)}));
  const OrientedComplex b = boundary(disk.complex);
  std::set<Simplex> got(b.facets().begin(), b.facets().end());
  std::set<Simplex> want(circle.complex.facets().begin(), circle.complex.facets().end());
  EXPECT_EQ(got, want);
  EXPECT_TRUE(is_coherent_cycle(b));
}

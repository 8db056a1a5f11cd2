#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coopx/complex.hpp"
#include "coopx/game.hpp"

namespace coopx {

/// Hopf invariant of a simplicial map from a triangulated 3-sphere onto the
/// boundary of the tetrahedron on colors 0..3. Vertices are first ordered by
/// (color, index) so the map is monotone on every simplex; otherwise the
/// cochain cup product is not natural and the value depends on labels. With
/// u the pullback of the 2-cocycle dual to [0,1,2] and delta b = u solved
/// over Q, returns sum over facets of sign * b[v0,v1] * u[v1,v2,v3].
/// Throws NotSimplicial, NotSphere or CoboundaryUnsolvable.
long hopf_invariant(const OrientedComplex& k, const std::vector<int>& colors);

/// Same, pulling back the cocycle dual to the given ordered triangle of colors.
long hopf_invariant(const OrientedComplex& k, const std::vector<int>& colors, const std::vector<int>& target);

/// 12-vertex 3-sphere with a 4-coloring of Hopf invariant +-1, embedded in
/// R^4 star-shaped about the origin.
struct HopfAsset {
  std::string version;
  OrientedComplex complex;
  std::vector<int> colors;
  /// Vertex coordinates in R^4.
  std::vector<Vector> positions;
  std::uint64_t checksum = 0;
};

/// FNV-1a over the canonical text of facets and colors.
std::uint64_t asset_checksum(const SimplicialComplex& k, const std::vector<int>& colors);

/// Loaded once; the checksum and the manifold checks are verified on load.
const HopfAsset& hopf_asset();

/// y -> (y_1, ..., y_4, -sum y): the asset placed in the sum-zero hyperplane of R^5.
std::vector<Vector> hopf_sphere_points(const HopfAsset& asset);

/// Four firms e_1..e_4 in R^4 with r = (1,1,1,1). U_c is F_c - R^5_+, where
/// F_c is the closed-star cover of the color-c vertices in the barycentric
/// subdivision of the sphere; one primitive per (facet, vertex) pair.
GeneralizedGame hopf_game(const HopfAsset& asset);

/// Cone over the placed sphere with apex at the origin;
/// the induced cover of the Hopf game on it has rainbow facets near the
/// fractional core (the sphere itself has none: colorings are simplicial).
Triangulation hopf_region(const HopfAsset& asset);

/// Firm system of the Hopf game.
FirmSystem hopf_firms();

}  // namespace coopx

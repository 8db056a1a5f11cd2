#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coopx/coalition.hpp"
#include "coopx/rational.hpp"

namespace coopx {

/// Vertex indices of a simplex, kept sorted ascending.
using Simplex = std::vector<int>;

/// +1 or -1: parity of the permutation sorting `seq` (entries distinct).
int permutation_sign(const std::vector<int>& seq);

/// Pure complex given by its facets; lower faces are implicit.
struct SimplicialComplex {
  int vertices = 0;
  std::vector<Simplex> facets;

  int dimension() const { return facets.empty() ? -1 : static_cast<int>(facets.front().size()) - 1; }
  /// Throws Error(NotClosedManifold) for ragged, unsorted or out-of-range facets.
  void check() const;
  /// Every face of the given dimension, sorted and unique.
  std::vector<Simplex> faces(int dim) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

/// Facets with a sign each, relative to the ascending vertex order.
struct OrientedComplex {
  SimplicialComplex complex;
  std::vector<int> orientation;

  const std::vector<Simplex>& facets() const { return complex.facets; }
  int dimension() const { return complex.dimension(); }
  OrientedComplex reversed() const;

  friend bool operator==(const OrientedComplex&, const OrientedComplex&) = default;
};

/// Sorts every facet, folding the sorting parity into its sign.
OrientedComplex make_oriented(int vertices, const std::vector<std::vector<int>>& ordered_facets,
                              std::vector<int> signs = {});

long euler_characteristic(const SimplicialComplex& k);

/// Coherent signs with the first facet positive, or nullopt when some ridge
/// is not shared by exactly two facets or the complex is not orientable.
std::optional<std::vector<int>> coherent_orientation(const SimplicialComplex& k);

/// Throws Error(NotClosedManifold) when no coherent orientation exists.
OrientedComplex orient(const SimplicialComplex& k);

/// True iff every ridge lies in exactly two facets with opposite induced signs.
bool is_coherent_cycle(const OrientedComplex& k);

struct ManifoldReport {
  bool pure = false;
  bool ridges_paired = false;
  bool connected = false;
  bool orientable = false;
  bool links_ok = false;
  long euler = 0;
  std::vector<std::string> problems;

  bool ok() const { return pure && ridges_paired && connected && orientable && links_ok; }
};

/// Closed-manifold checks for dimension <= 3. In dimension 3 every vertex
/// link must be a connected closed surface with Euler characteristic 2; in
/// dimension 2 a single cycle.
ManifoldReport validate_closed_manifold(const SimplicialComplex& k);

/// Ridges lying in exactly one facet, with the induced orientation
/// (face without vertex j of [v0..vk] gets sign (-1)^j). Vertex indices
/// are kept.
OrientedComplex boundary(const OrientedComplex& region);

/// An oriented complex with optional vertex positions and, per vertex, the
/// face of the original complex carrying it.
struct Triangulation {
  OrientedComplex complex;
  std::vector<Vector> positions;
  std::vector<Simplex> carriers;
};

/// Wraps a complex; each vertex is its own carrier.
Triangulation as_triangulation(OrientedComplex k, std::vector<Vector> positions = {});

/// One barycentric subdivision per level. New vertices are the faces of the
/// previous level; sub-facet (b(F_0), ..., b(F_k)) with F_j = {v_pi(0..j)}
/// inherits sign(pi) times the parent sign.
Triangulation barycentric_subdivision(const Triangulation& t, int levels = 1);

/// Boundary of the simplex on the given corners, oriented as the boundary of
/// [c_0, ..., c_{k+1}].
Triangulation simplex_boundary(const std::vector<Vector>& corners);

/// Boundary of {sum c_j (e_j - e_n) : |c_j| <= half_width} inside the
/// sum-zero hyperplane of R^n, Kuhn-triangulated.
Triangulation cube_boundary(int n, const Rational& half_width);

/// Cone with the given apex over a triangulation; the apex is the last vertex.
Triangulation cone(const Triangulation& base, const Vector& apex);

/// Firm sets per vertex.
using Labeling = std::vector<Mask>;

}  // namespace coopx

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coopx/balance.hpp"
#include "coopx/complex.hpp"
#include "coopx/game.hpp"

namespace coopx {

/// Either an integer degree or a facet whose labels are conv-r-balanced.
struct DegreeResult {
  std::optional<Simplex> balanced_facet;
  long degree = 0;

  bool balanced() const { return balanced_facet.has_value(); }
};

enum class ChoiceRule { Lowest, Highest };

/// Degree of the PL map sending vertex u to v_label(u), read on the sphere
/// around r inside aff(V + r). The manifold dimension k must satisfy
/// dim aff(V + r) = k + 1. Crossings of the ray r + d(e), with
/// d(e) = d0 + e e_1 + e^2 e_2 + ..., are counted with sign
/// orientation * sign det(image frame), normalized so that the identity on
/// the boundary of the first affinely independent k + 2 firms has degree +1.
DegreeResult pl_degree(const OrientedComplex& k, const Labeling& labels, const FirmSystem& fs,
                       ChoiceRule rule = ChoiceRule::Lowest);

/// Facets whose union of vertex labels is balanced.
std::vector<Simplex> rainbow_simplices(const SimplicialComplex& k, const Labeling& labels, const FirmSystem& fs,
                                       BalanceMode mode);

/// Facet indices of `region` whose label union is conv-r-balanced, grouped
/// into vertex-connected components in order of their smallest facet.
std::vector<std::vector<std::size_t>> balanced_components(const OrientedComplex& region, const Labeling& labels,
                                                          const FirmSystem& fs);

/// Degree on the boundary of the closed star of `component` in `region`.
/// Throws NotIsolated when the star holds other balanced facets and
/// BoundaryTouchesBalanced when its boundary carries a balanced face.
long component_index(const OrientedComplex& region, const Labeling& labels, const FirmSystem& fs,
                     const std::vector<std::size_t>& component);

struct ComponentIndex {
  std::vector<std::size_t> facets;
  long index = 0;
};

struct IndexSum {
  DegreeResult boundary_degree;
  std::vector<ComponentIndex> components;
  bool sum_matches = false;
};

IndexSum index_sum_check(const OrientedComplex& region, const Labeling& labels, const FirmSystem& fs);

}  // namespace coopx

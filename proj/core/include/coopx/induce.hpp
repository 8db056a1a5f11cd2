#pragma once

#include "coopx/complex.hpp"
#include "coopx/frac_core.hpp"
#include "coopx/game.hpp"

namespace coopx {

inline constexpr int kMaxDepth = 6;

struct InducedCover {
  Triangulation triangulation;
  Labeling labels;
};

/// Subdivides `region` (positions in R^n) `depth` times barycentrically and
/// labels every vertex x with {i : U_i attains tau at x}.
/// Throws Error(CapExceeded) beyond kMaxDepth or 32 firms.
InducedCover induce_labeling(const GeneralizedGame& g, const Triangulation& region, int depth);

/// One probe per rainbow facet of the cover and minimal balanced subset of
/// its label union, placed at the facet barycenter.
std::vector<SearchProbe> cover_probes(const GeneralizedGame& g, const InducedCover& cover,
                                      BalanceMode mode = BalanceMode::Cone);

/// Per-vertex labels of a point set.
Labeling induced_labels(const GeneralizedGame& g, const std::vector<Vector>& points);

/// Boundary of the simplex in the sum-zero hyperplane with corners
/// scale * (1 - n e_k), k = 0..n-1; corner k is where player k is worst off.
Triangulation corner_simplex_boundary(int n, const Rational& scale);

}  // namespace coopx

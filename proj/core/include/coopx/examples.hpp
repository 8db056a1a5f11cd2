#pragma once

#include <vector>

#include "coopx/complex.hpp"
#include "coopx/game.hpp"

namespace coopx {

/// Three players with v({1}) = -10, v({2}) = -15, v({3}) = -20,
/// v({1,2}) = -22, v({1,3}) = -28, v({2,3}) = -32, v(N) = -35.
TUGame example1();

/// The same game with v(N) = -100: the core is empty, the fractional core is not.
TUGame example1_modified();

/// Players A, B, C; firms are the coalitions as 1_S with r = (1,1,1).
/// U_A = {x_B <= 10} (A can only pay B), U_B = {x_B <= 0}, U_C = {x_C <= 0},
/// U_AB = {x_A + x_B <= 0}, U_BC = {x_B + x_C <= 0}, U_AC = {x_A + x_C <= 1},
/// U_ABC = {x_A + x_B + x_C <= 0}. The fractional core is empty.
GeneralizedGame example2();

/// Point reflection through the all-ones axis: x -> (2 sum(x) / n) 1 - x.
Vector mirror(const Vector& x);

/// The halfspace {a'x <= b} with a' = (2 <a,1> / n) 1 - a, so that
/// x is in h iff mirror(x) is in mirror(h). Throws Error(InvalidGame) when a'
/// has a negative entry.
HalfSpace mirror(const HalfSpace& h);
ComprehensiveSet mirror(const ComprehensiveSet& u);

/// Firms v_1..v_m followed by 2r - v_1, ..., 2r - v_m, with utilities
/// U_1..U_m followed by their mirrors.
GeneralizedGame centrally_symmetric_game(const FirmSystem& half, const std::vector<ComprehensiveSet>& utilities);

/// n players, r = 1/n, firm pairs r +- (e_i - r)/2, and
/// U_i = {<1 + c e_i, x> <= offsets[i]} with mirrored partners.
/// Needs 0 <= c <= n / (n - 2).
GeneralizedGame axis_symmetric_game(int n, const Rational& c, const std::vector<Rational>& offsets);

/// A grid square in the plane carrying two labeled vortices, for the index sum.
struct BubbleFixture {
  Triangulation region;
  Labeling labels;
  /// e_1, e_2, e_3 with r = (1/3, 1/3, 1/3).
  FirmSystem firms;
};

/// Freudenthal triangulation of [0, grid]^2, labeled by the sector of f(z)
/// among three cones, where f = g_1 g_2 and g_k is z - c_k for sign +1 and
/// its conjugate for sign -1. The vortex at c_k then has index sign_k.
BubbleFixture bubble_pair(int first, int second, int grid = 16);

}  // namespace coopx

#include "coopx/induce.hpp"

#include <algorithm>

#include "coopx/degree.hpp"
#include "coopx/error.hpp"

namespace coopx {

Labeling induced_labels(const GeneralizedGame& g, const std::vector<Vector>& points) {
  g.check();
  if (g.firm_count() > 32) throw Error(ErrorCode::CapExceeded, "labels are limited to 32 firms");
  Labeling out;
  out.reserve(points.size());
  std::vector<Rational> levels(g.firm_count());
  for (const Vector& x : points) {
    for (std::size_t i = 0; i < g.firm_count(); ++i) levels[i] = g.utilities[i].level(x);
    const Rational& top = *std::max_element(levels.begin(), levels.end());
    Mask l = 0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (levels[i] == top) l |= Mask{1} << i;
    }
    out.push_back(l);
  }
  return out;
}

InducedCover induce_labeling(const GeneralizedGame& g, const Triangulation& region, int depth) {
  if (depth < 0 || depth > kMaxDepth) {
    throw Error(ErrorCode::CapExceeded, "subdivision depth " + std::to_string(depth) + " outside 0.." +
                                            std::to_string(kMaxDepth));
  }
  if (region.positions.size() != static_cast<std::size_t>(region.complex.complex.vertices)) {
    throw Error(ErrorCode::DimensionMismatch, "region needs one position per vertex");
  }
  InducedCover out;
  out.triangulation = barycentric_subdivision(region, depth);
  out.labels = induced_labels(g, out.triangulation.positions);
  return out;
}

std::vector<SearchProbe> cover_probes(const GeneralizedGame& g, const InducedCover& cover, BalanceMode mode) {
  const FirmSystem& fs = g.firm_system;
  const std::vector<Mask> minimal = minimal_balanced_sets(fs, mode, kDefaultFirmCap);
  std::vector<SearchProbe> out;
  for (const Simplex& s : rainbow_simplices(cover.triangulation.complex.complex, cover.labels, fs, mode)) {
    Mask label = 0;
    Vector center = zeros(g.dimension());
    for (int v : s) {
      label |= cover.labels[static_cast<std::size_t>(v)];
      center = add(center, cover.triangulation.positions[static_cast<std::size_t>(v)]);
    }
    center = scale(center, Rational(1, static_cast<long>(s.size())));
    for (Mask m : minimal) {
      if ((m & label) == m) out.push_back({center, m});
    }
  }
  return out;
}

Triangulation corner_simplex_boundary(int n, const Rational& scale) {
  std::vector<Vector> corners;
  for (int k = 0; k < n; ++k) {
    Vector c = ones(static_cast<std::size_t>(n));
    c[static_cast<std::size_t>(k)] -= n;
    corners.push_back(coopx::scale(c, scale));
  }
  return simplex_boundary(corners);
}

}  // namespace coopx

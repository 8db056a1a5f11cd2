#include "coopx/hopf.hpp"

#include <algorithm>
#include <map>

#include "coopx/error.hpp"
#include "coopx/linear.hpp"

namespace coopx {

namespace {

// Value of the cocycle dual to the ordered triangle `target` on the colors of an
// ordered triangle of the domain.
int pulled_back(const std::vector<int>& image, const std::vector<int>& target) {
  std::vector<int> a(image), b(target);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b || std::adjacent_find(a.begin(), a.end()) != a.end()) return 0;
  // Position of each image color inside target.
  std::vector<int> pos;
  for (int c : image) pos.push_back(static_cast<int>(std::find(target.begin(), target.end(), c) - target.begin()));
  return permutation_sign(pos);
}


// Renumbers vertices by (color, id). The coloring is then monotone on every
// simplex, which the cochain-level cup formula needs to be natural.
std::pair<OrientedComplex, std::vector<int>> monotone_relabel(const OrientedComplex& k, const std::vector<int>& colors) {
  const int n = k.complex.vertices;
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return colors[static_cast<std::size_t>(a)] < colors[static_cast<std::size_t>(b)];
  });
  std::vector<int> rank(static_cast<std::size_t>(n));
  std::vector<int> recolored(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    recolored[static_cast<std::size_t>(i)] = colors[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
  }
  std::vector<std::vector<int>> facets;
  for (const Simplex& f : k.facets()) {
    std::vector<int> g;
    for (int v : f) g.push_back(rank[static_cast<std::size_t>(v)]);
    facets.push_back(std::move(g));
  }
  return {make_oriented(n, facets, k.orientation), std::move(recolored)};
}

// sum over facets of sign * b[v0,v1] * u[v1,v2,v3] with delta b = u.
long cup_formula(const OrientedComplex& k, const std::vector<int>& colors, const std::vector<int>& target) {
  const std::vector<Simplex> edges = k.complex.faces(1);
  const std::vector<Simplex> triangles = k.complex.faces(2);
  std::map<Simplex, std::size_t> edge_id;
  for (std::size_t e = 0; e < edges.size(); ++e) edge_id.emplace(edges[e], e);

  Vector u(triangles.size());
  Matrix delta(triangles.size(), zeros(edges.size()));
  std::map<Simplex, std::size_t> tri_id;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const Simplex& tr = triangles[t];
    tri_id.emplace(tr, t);
    u[t] = pulled_back({colors[static_cast<std::size_t>(tr[0])], colors[static_cast<std::size_t>(tr[1])],
                        colors[static_cast<std::size_t>(tr[2])]},
                       target);
    delta[t][edge_id.at({tr[1], tr[2]})] += 1;
    delta[t][edge_id.at({tr[0], tr[2]})] -= 1;
    delta[t][edge_id.at({tr[0], tr[1]})] += 1;
  }
  const auto beta = solve_linear(delta, u);
  if (!beta) throw Error(ErrorCode::CoboundaryUnsolvable, "pulled-back cocycle is not a coboundary");

  Rational h = 0;
  for (std::size_t fi = 0; fi < k.complex.facets.size(); ++fi) {
    const Simplex& f = k.complex.facets[fi];
    h += k.orientation[fi] * (*beta)[edge_id.at({f[0], f[1]})] * u[tri_id.at({f[1], f[2], f[3]})];
  }
  if (h.get_den() != 1) throw Error(ErrorCode::CoboundaryUnsolvable, "non-integral Hopf invariant " + to_string(h));
  return h.get_num().get_si();
}

}  // namespace

long hopf_invariant(const OrientedComplex& k, const std::vector<int>& colors) {
  return hopf_invariant(k, colors, {0, 1, 2});
}

long hopf_invariant(const OrientedComplex& k, const std::vector<int>& colors, const std::vector<int>& target) {
  const SimplicialComplex& sc = k.complex;
  if (sc.dimension() != 3) throw Error(ErrorCode::NotSphere, "Hopf invariant needs a 3-dimensional complex");
  if (colors.size() != static_cast<std::size_t>(sc.vertices)) {
    throw Error(ErrorCode::CountMismatch, "one color per vertex required");
  }
  for (int c : colors) {
    if (c < 0 || c > 3) throw Error(ErrorCode::NotSimplicial, "colors must lie in 0..3");
  }
  if (target.size() != 3) throw Error(ErrorCode::NotSimplicial, "target must be a triangle");
  for (const Simplex& f : sc.facets) {
    Mask seen = 0;
    for (int v : f) seen |= Mask{1} << colors[static_cast<std::size_t>(v)];
    if (seen == 0xF) throw Error(ErrorCode::NotSimplicial, "a facet carries all four colors");
  }
  const ManifoldReport report = validate_closed_manifold(sc);
  if (!report.ok() || report.euler != 0) throw Error(ErrorCode::NotSphere, "complex is not a combinatorial 3-sphere");
  if (!is_coherent_cycle(k)) throw Error(ErrorCode::NotSphere, "orientation is not coherent");

  const auto [ordered, recolored] = monotone_relabel(k, colors);
  return cup_formula(ordered, recolored, target);
}

std::vector<Vector> hopf_sphere_points(const HopfAsset& asset) {
  std::vector<Vector> out;
  for (const Vector& y : asset.positions) {
    Vector p(y);
    p.push_back(-sum(y));
    out.push_back(std::move(p));
  }
  return out;
}

Triangulation hopf_region(const HopfAsset& asset) {
  return cone(as_triangulation(asset.complex, hopf_sphere_points(asset)), zeros(5));
}

FirmSystem hopf_firms() {
  FirmSystem fs;
  for (std::size_t i = 0; i < 4; ++i) fs.firms.push_back(unit_vector(4, i));
  fs.resource = ones(4);
  return fs;
}

GeneralizedGame hopf_game(const HopfAsset& asset) {
  const std::vector<Vector> pts = hopf_sphere_points(asset);
  std::vector<std::vector<Primitive>> pieces(4);
  for (const Simplex& f : asset.complex.facets()) {
    for (int u : f) {
      // Barycenters of the faces of f containing u.
      std::vector<Vector> corners;
      std::vector<int> others;
      for (int w : f) {
        if (w != u) others.push_back(w);
      }
      for (int sub = 0; sub < 8; ++sub) {
        Vector c = pts[static_cast<std::size_t>(u)];
        long count = 1;
        for (int j = 0; j < 3; ++j) {
          if (sub >> j & 1) {
            c = add(c, pts[static_cast<std::size_t>(others[static_cast<std::size_t>(j)])]);
            ++count;
          }
        }
        corners.push_back(scale(c, Rational(1, count)));
      }
      pieces[static_cast<std::size_t>(asset.colors[static_cast<std::size_t>(u)])].push_back(hull_primitive(corners));
    }
  }
  GeneralizedGame g;
  for (auto& p : pieces) g.utilities.emplace_back(std::move(p));
  g.firm_system = hopf_firms();
  return g;
}

}  // namespace coopx

#include "coopx/complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "coopx/error.hpp"

namespace coopx {

int permutation_sign(const std::vector<int>& seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) sign = -sign;
    }
  }
  return sign;
}

void SimplicialComplex::check() const {
  if (facets.empty()) throw Error(ErrorCode::NotClosedManifold, "complex without facets");
  const std::size_t size = facets.front().size();
  for (const Simplex& f : facets) {
    if (f.size() != size) throw Error(ErrorCode::NotClosedManifold, "complex is not pure");
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] < 0 || f[i] >= vertices) throw Error(ErrorCode::IndexOutOfRange, "facet vertex out of range");
      if (i > 0 && f[i - 1] >= f[i]) throw Error(ErrorCode::NotClosedManifold, "facet vertices not strictly sorted");
    }
  }
}

namespace {

Simplex without(const Simplex& f, std::size_t j) {
  Simplex r;
  r.reserve(f.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i != j) r.push_back(f[i]);
  }
  return r;
}

// ridge -> (facet index, induced sign (-1)^j relative to the ridge's order)
std::map<Simplex, std::vector<std::pair<std::size_t, int>>> ridge_incidence(const SimplicialComplex& k) {
  std::map<Simplex, std::vector<std::pair<std::size_t, int>>> out;
  for (std::size_t fi = 0; fi < k.facets.size(); ++fi) {
    const Simplex& f = k.facets[fi];
    for (std::size_t j = 0; j < f.size(); ++j) out[without(f, j)].emplace_back(fi, j % 2 ? -1 : 1);
  }
  return out;
}

void collect_subsets(const Simplex& f, std::size_t size, std::size_t start, Simplex& cur, std::set<Simplex>& out) {
  if (cur.size() == size) {
    out.insert(cur);
    return;
  }
  for (std::size_t i = start; i < f.size(); ++i) {
    cur.push_back(f[i]);
    collect_subsets(f, size, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Simplex> SimplicialComplex::faces(int dim) const {
  std::set<Simplex> out;
  if (dim < 0) return {};
  Simplex cur;
  for (const Simplex& f : facets) {
    if (static_cast<int>(f.size()) > dim) collect_subsets(f, static_cast<std::size_t>(dim) + 1, 0, cur, out);
  }
  return {out.begin(), out.end()};
}

OrientedComplex OrientedComplex::reversed() const {
  OrientedComplex r(*this);
  for (int& s : r.orientation) s = -s;
  return r;
}

OrientedComplex make_oriented(int vertices, const std::vector<std::vector<int>>& ordered_facets,
                              std::vector<int> signs) {
  if (signs.empty()) signs.assign(ordered_facets.size(), 1);
  if (signs.size() != ordered_facets.size()) throw Error(ErrorCode::CountMismatch, "one sign per facet required");
  OrientedComplex out;
  out.complex.vertices = vertices;
  for (std::size_t i = 0; i < ordered_facets.size(); ++i) {
    Simplex f = ordered_facets[i];
    const int s = permutation_sign(f) * (signs[i] < 0 ? -1 : 1);
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw Error(ErrorCode::NotClosedManifold, "facet with a repeated vertex");
    }
    out.complex.facets.push_back(std::move(f));
    out.orientation.push_back(s);
  }
  out.complex.check();
  return out;
}

long euler_characteristic(const SimplicialComplex& k) {
  long chi = 0;
  for (int d = 0; d <= k.dimension(); ++d) {
    const long count = static_cast<long>(k.faces(d).size());
    chi += d % 2 ? -count : count;
  }
  return chi;
}

std::optional<std::vector<int>> coherent_orientation(const SimplicialComplex& k) {
  const auto incidence = ridge_incidence(k);
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(k.facets.size());  // (neighbour, required relative sign)
  for (const auto& [ridge, inc] : incidence) {
    if (inc.size() != 2) return std::nullopt;
    // s_a * e_a = -s_b * e_b  =>  s_b = -s_a * e_a * e_b
    const int rel = -inc[0].second * inc[1].second;
    adj[inc[0].first].emplace_back(inc[1].first, rel);
    adj[inc[1].first].emplace_back(inc[0].first, rel);
  }
  std::vector<int> sign(k.facets.size(), 0);
  for (std::size_t start = 0; start < k.facets.size(); ++start) {
    if (sign[start]) continue;
    sign[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t f = queue.front();
      queue.pop_front();
      for (const auto& [g, rel] : adj[f]) {
        const int want = sign[f] * rel;
        if (!sign[g]) {
          sign[g] = want;
          queue.push_back(g);
        } else if (sign[g] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return sign;
}

OrientedComplex orient(const SimplicialComplex& k) {
  k.check();
  auto signs = coherent_orientation(k);
  if (!signs) throw Error(ErrorCode::NotClosedManifold, "complex admits no coherent orientation");
  return OrientedComplex{k, std::move(*signs)};
}

bool is_coherent_cycle(const OrientedComplex& k) {
  for (const auto& [ridge, inc] : ridge_incidence(k.complex)) {
    if (inc.size() != 2) return false;
    if (k.orientation[inc[0].first] * inc[0].second != -k.orientation[inc[1].first] * inc[1].second) return false;
  }
  return true;
}

namespace {

bool strongly_connected(const SimplicialComplex& k) {
  if (k.facets.empty()) return false;
  std::vector<std::size_t> parent(k.facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [ridge, inc] : ridge_incidence(k)) {
    for (std::size_t i = 1; i < inc.size(); ++i) parent[find(inc[i].first)] = find(inc[0].first);
  }
  const std::size_t root = find(0);
  for (std::size_t i = 0; i < k.facets.size(); ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

bool ridges_paired(const SimplicialComplex& k) {
  for (const auto& [ridge, inc] : ridge_incidence(k)) {
    if (inc.size() != 2) return false;
  }
  return true;
}

SimplicialComplex link(const SimplicialComplex& k, int v) {
  SimplicialComplex l;
  l.vertices = k.vertices;
  for (const Simplex& f : k.facets) {
    auto it = std::find(f.begin(), f.end(), v);
    if (it != f.end()) l.facets.push_back(without(f, static_cast<std::size_t>(it - f.begin())));
  }
  return l;
}

}  // namespace

ManifoldReport validate_closed_manifold(const SimplicialComplex& k) {
  ManifoldReport r;
  try {
    k.check();
    r.pure = true;
  } catch (const Error& e) {
    r.problems.emplace_back(e.what());
    return r;
  }
  const int dim = k.dimension();
  if (dim > 3) r.problems.emplace_back("manifold checks are limited to dimension 3");
  r.ridges_paired = ridges_paired(k);
  if (!r.ridges_paired) r.problems.emplace_back("some ridge is not shared by exactly two facets");
  r.connected = strongly_connected(k);
  if (!r.connected) r.problems.emplace_back("facets are not connected through ridges");
  r.orientable = r.ridges_paired && coherent_orientation(k).has_value();
  if (r.ridges_paired && !r.orientable) r.problems.emplace_back("not orientable");
  r.euler = euler_characteristic(k);

  r.links_ok = dim <= 3;
  if (dim >= 2 && dim <= 3) {
    std::set<int> used;
    for (const Simplex& f : k.facets) used.insert(f.begin(), f.end());
    for (int v : used) {
      const SimplicialComplex l = link(k, v);
      bool good = ridges_paired(l) && strongly_connected(l);
      if (good && dim == 3) good = euler_characteristic(l) == 2;
      if (!good) {
        r.links_ok = false;
        r.problems.push_back("link of vertex " + std::to_string(v) + " is not a " +
                             (dim == 3 ? "2-sphere" : "circle"));
      }
    }
  }
  return r;
}

OrientedComplex boundary(const OrientedComplex& region) {
  OrientedComplex out;
  out.complex.vertices = region.complex.vertices;
  for (const auto& [ridge, inc] : ridge_incidence(region.complex)) {
    if (inc.size() > 2) throw Error(ErrorCode::NotClosedManifold, "ridge in more than two facets");
    if (inc.size() == 1) {
      out.complex.facets.push_back(ridge);
      out.orientation.push_back(region.orientation[inc[0].first] * inc[0].second);
    }
  }
  return out;
}

Triangulation as_triangulation(OrientedComplex k, std::vector<Vector> positions) {
  Triangulation t;
  t.carriers.reserve(static_cast<std::size_t>(k.complex.vertices));
  for (int v = 0; v < k.complex.vertices; ++v) t.carriers.push_back({v});
  t.complex = std::move(k);
  t.positions = std::move(positions);
  return t;
}

namespace {

Triangulation subdivide_once(const Triangulation& t) {
  const SimplicialComplex& k = t.complex.complex;
  const int dim = k.dimension();
  std::map<Simplex, int> index;
  std::vector<Simplex> new_faces;
  for (int v = 0; v < k.vertices; ++v) {
    index[{v}] = v;
    new_faces.push_back({v});
  }
  for (int d = 1; d <= dim; ++d) {
    for (Simplex& f : k.faces(d)) {
      index.emplace(f, static_cast<int>(new_faces.size()));
      new_faces.push_back(std::move(f));
    }
  }

  Triangulation out;
  out.complex.complex.vertices = static_cast<int>(new_faces.size());
  for (const Simplex& f : new_faces) {
    std::set<int> carrier;
    for (int v : f) carrier.insert(t.carriers[static_cast<std::size_t>(v)].begin(), t.carriers[static_cast<std::size_t>(v)].end());
    out.carriers.emplace_back(carrier.begin(), carrier.end());
    if (!t.positions.empty()) {
      Vector p = zeros(t.positions.front().size());
      for (int v : f) p = add(p, t.positions[static_cast<std::size_t>(v)]);
      out.positions.push_back(scale(p, Rational(1, static_cast<long>(f.size()))));
    }
  }

  std::vector<int> perm(static_cast<std::size_t>(dim) + 1);
  for (std::size_t fi = 0; fi < k.facets.size(); ++fi) {
    const Simplex& f = k.facets[fi];
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> ordered;
      Simplex chain;
      for (int j : perm) {
        chain.insert(std::upper_bound(chain.begin(), chain.end(), f[static_cast<std::size_t>(j)]),
                     f[static_cast<std::size_t>(j)]);
        ordered.push_back(index.at(chain));
      }
      const int s = permutation_sign(perm) * t.complex.orientation[fi] * permutation_sign(ordered);
      std::sort(ordered.begin(), ordered.end());
      out.complex.complex.facets.push_back(std::move(ordered));
      out.complex.orientation.push_back(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace

Triangulation barycentric_subdivision(const Triangulation& t, int levels) {
  Triangulation cur = t;
  for (int i = 0; i < levels; ++i) cur = subdivide_once(cur);
  return cur;
}

Triangulation simplex_boundary(const std::vector<Vector>& corners) {
  if (corners.size() < 2) throw Error(ErrorCode::DimensionMismatch, "simplex boundary needs two or more corners");
  const int m = static_cast<int>(corners.size());
  std::vector<std::vector<int>> facets;
  std::vector<int> signs;
  for (int j = 0; j < m; ++j) {
    std::vector<int> f;
    for (int i = 0; i < m; ++i) {
      if (i != j) f.push_back(i);
    }
    facets.push_back(std::move(f));
    signs.push_back(j % 2 ? -1 : 1);
  }
  return as_triangulation(make_oriented(m, facets, signs), corners);
}

Triangulation cube_boundary(int n, const Rational& half_width) {
  if (n < 2 || n > 8) throw Error(ErrorCode::DimensionMismatch, "cube boundary supports 2 <= n <= 8");
  const int k = n - 1;
  const int corners = 1 << k;
  std::vector<Vector> positions;
  for (int c = 0; c < corners; ++c) {
    Vector p = zeros(static_cast<std::size_t>(n));
    for (int j = 0; j < k; ++j) {
      const Rational coord = (c >> j) & 1 ? half_width : Rational(-half_width);
      p[static_cast<std::size_t>(j)] += coord;
      p[static_cast<std::size_t>(k)] -= coord;
    }
    positions.push_back(std::move(p));
  }
  // Kuhn simplices of the solid cube, positively oriented in cube coordinates.
  std::vector<std::vector<int>> solids;
  std::vector<int> signs;
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> s{0};
    int cur = 0;
    for (int j : perm) s.push_back(cur |= 1 << j);
    solids.push_back(std::move(s));
    signs.push_back(permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  const OrientedComplex solid = make_oriented(corners, solids, signs);
  return as_triangulation(boundary(solid), std::move(positions));
}

Triangulation cone(const Triangulation& base, const Vector& apex) {
  Triangulation out;
  const int a = base.complex.complex.vertices;
  out.complex.complex.vertices = a + 1;
  for (std::size_t i = 0; i < base.complex.facets().size(); ++i) {
    Simplex f = base.complex.facets()[i];
    f.push_back(a);
    // (apex, f...) has sign s; moving the apex to the end costs (-1)^|f|.
    const int s = base.complex.orientation[i] * (base.complex.facets()[i].size() % 2 ? -1 : 1);
    out.complex.complex.facets.push_back(std::move(f));
    out.complex.orientation.push_back(s);
  }
  out.positions = base.positions;
  if (!out.positions.empty()) out.positions.push_back(apex);
  out.carriers = base.carriers;
  out.carriers.push_back({a});
  return out;
}

}  // namespace coopx

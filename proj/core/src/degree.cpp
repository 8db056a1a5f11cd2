#include "coopx/degree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "coopx/error.hpp"
#include "coopx/linear.hpp"

namespace coopx {

namespace {

// Firm coordinates in a basis of span{v_i - r}; r sits at the origin.
struct Frame {
  std::vector<Vector> coords;
  std::size_t dim = 0;
  int normalization = 1;
};

Frame make_frame(const FirmSystem& fs) {
  fs.check();
  Matrix basis;
  for (const Vector& v : fs.firms) {
    Matrix trial = basis;
    trial.push_back(sub(v, fs.resource));
    if (rank(trial) > basis.size()) basis = std::move(trial);
  }
  Frame fr;
  fr.dim = basis.size();
  Matrix cols(fs.dimension(), Vector(fr.dim));
  for (std::size_t j = 0; j < fr.dim; ++j) {
    for (std::size_t c = 0; c < fs.dimension(); ++c) cols[c][j] = basis[j][c];
  }
  for (const Vector& v : fs.firms) fr.coords.push_back(*solve_linear(cols, sub(v, fs.resource)));

  // Orientation of the first affinely independent dim + 1 firms.
  const std::size_t m = fs.size();
  const std::size_t need = fr.dim + 1;
  if (m < need) return fr;
  std::vector<std::size_t> pick(need);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    Matrix edges(fr.dim, Vector(fr.dim));
    for (std::size_t j = 1; j < need; ++j) {
      const Vector e = sub(fr.coords[pick[j]], fr.coords[pick[0]]);
      for (std::size_t c = 0; c < fr.dim; ++c) edges[c][j - 1] = e[c];
    }
    const int s = sign(determinant(edges));
    if (s != 0) {
      fr.normalization = s;
      return fr;
    }
    std::size_t i = need;
    while (i > 0 && pick[i - 1] == m - need + i - 1) --i;
    if (i == 0) return fr;
    ++pick[i - 1];
    for (std::size_t j = i; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
}

class BalanceCache {
 public:
  BalanceCache(const FirmSystem& fs, BalanceMode mode) : fs_(fs), mode_(mode) {}

  bool operator()(Mask s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    const bool b = balanced_weights(s, fs_, mode_).has_value();
    cache_.emplace(s, b);
    return b;
  }

 private:
  const FirmSystem& fs_;
  BalanceMode mode_;
  std::unordered_map<Mask, bool> cache_;
};

Mask label_union(const Simplex& f, const Labeling& labels) {
  Mask u = 0;
  for (int v : f) u |= labels[static_cast<std::size_t>(v)];
  return u;
}

void check_labels(const SimplicialComplex& k, const Labeling& labels, const FirmSystem& fs) {
  if (labels.size() != static_cast<std::size_t>(k.vertices)) {
    throw Error(ErrorCode::CountMismatch, std::to_string(labels.size()) + " labels for " +
                                              std::to_string(k.vertices) + " vertices");
  }
  const Mask allowed = full_mask(static_cast<int>(fs.size()));
  std::set<int> used;
  for (const Simplex& f : k.facets) used.insert(f.begin(), f.end());
  for (int v : used) {
    const Mask l = labels[static_cast<std::size_t>(v)];
    if (l == 0) throw Error(ErrorCode::InvalidGame, "vertex " + std::to_string(v) + " has no label");
    if (l & ~allowed) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " names a missing firm");
  }
}

// Sum of induced signs vanishes on every ridge.
bool is_cycle(const OrientedComplex& k) {
  std::map<Simplex, int> total;
  for (std::size_t fi = 0; fi < k.facets().size(); ++fi) {
    const Simplex& f = k.facets()[fi];
    for (std::size_t j = 0; j < f.size(); ++j) {
      Simplex r(f);
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
      total[r] += k.orientation[fi] * (j % 2 ? -1 : 1);
    }
  }
  return std::all_of(total.begin(), total.end(), [](const auto& e) { return e.second == 0; });
}

class RayCounter {
 public:
  explicit RayCounter(const Frame& fr) : fr_(fr) {
    direction_ = zeros(fr.dim);
    for (std::size_t c = 0; c < fr.dim; ++c) direction_[c] = static_cast<long>(c + 1);
  }

  // Signed crossing of the perturbed ray with cone(coords of firms), firms in the given order.
  int crossing(const std::vector<int>& firms) {
    std::vector<int> sorted(firms);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;
    auto it = cache_.find(sorted);
    if (it == cache_.end()) it = cache_.emplace(sorted, sorted_crossing(sorted)).first;
    return it->second * permutation_sign(firms);
  }

 private:
  int sorted_crossing(const std::vector<int>& firms) const {
    const std::size_t d = fr_.dim;
    Matrix w(d, Vector(d));
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t c = 0; c < d; ++c) w[c][j] = fr_.coords[static_cast<std::size_t>(firms[j])][c];
    }
    const int det_sign = sign(determinant(w));
    if (det_sign == 0) return 0;
    // mu(e) = W^-1 d(e); each coordinate must be lexicographically positive.
    std::vector<Vector> mu;
    mu.push_back(*solve_linear(w, direction_));
    for (std::size_t c = 0; c < d; ++c) mu.push_back(*solve_linear(w, unit_vector(d, c)));
    for (std::size_t i = 0; i < d; ++i) {
      int s = 0;
      for (const Vector& m : mu) {
        if ((s = sign(m[i])) != 0) break;
      }
      if (s <= 0) return 0;
    }
    return det_sign;
  }

  const Frame& fr_;
  Vector direction_;
  std::map<std::vector<int>, int> cache_;
};

int choose(Mask l, ChoiceRule rule) {
  const std::vector<int> m = members(l);
  return rule == ChoiceRule::Lowest ? m.front() : m.back();
}

}  // namespace

DegreeResult pl_degree(const OrientedComplex& k, const Labeling& labels, const FirmSystem& fs, ChoiceRule rule) {
  k.complex.check();
  check_labels(k.complex, labels, fs);
  if (k.orientation.size() != k.facets().size()) throw Error(ErrorCode::CountMismatch, "one sign per facet required");
  const Frame fr = make_frame(fs);
  const int dim = k.dimension();
  if (fr.dim != static_cast<std::size_t>(dim) + 1) {
    throw Error(ErrorCode::DimensionMismatch, "aff(V + r) has dimension " + std::to_string(fr.dim) +
                                                  ", manifold dimension " + std::to_string(dim));
  }
  if (!is_cycle(k)) throw Error(ErrorCode::NotClosedManifold, "oriented facets do not form a cycle");

  DegreeResult result;
  BalanceCache balanced(fs, BalanceMode::Convex);
  for (const Simplex& f : k.facets()) {
    if (balanced(label_union(f, labels))) {
      result.balanced_facet = f;
      return result;
    }
  }

  RayCounter rays(fr);
  long degree = 0;
  std::vector<int> firms;
  for (std::size_t fi = 0; fi < k.facets().size(); ++fi) {
    firms.clear();
    for (int v : k.facets()[fi]) firms.push_back(choose(labels[static_cast<std::size_t>(v)], rule));
    degree += k.orientation[fi] * rays.crossing(firms);
  }
  result.degree = degree * fr.normalization;
  return result;
}

std::vector<Simplex> rainbow_simplices(const SimplicialComplex& k, const Labeling& labels, const FirmSystem& fs,
                                       BalanceMode mode) {
  check_labels(k, labels, fs);
  BalanceCache balanced(fs, mode);
  std::vector<Simplex> out;
  for (const Simplex& f : k.facets) {
    if (balanced(label_union(f, labels))) out.push_back(f);
  }
  return out;
}

std::vector<std::vector<std::size_t>> balanced_components(const OrientedComplex& region, const Labeling& labels,
                                                          const FirmSystem& fs) {
  check_labels(region.complex, labels, fs);
  BalanceCache balanced(fs, BalanceMode::Convex);
  std::vector<std::size_t> hot;
  for (std::size_t fi = 0; fi < region.facets().size(); ++fi) {
    if (balanced(label_union(region.facets()[fi], labels))) hot.push_back(fi);
  }
  std::vector<std::size_t> parent(hot.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<int, std::size_t> owner;
  for (std::size_t h = 0; h < hot.size(); ++h) {
    for (int v : region.facets()[hot[h]]) {
      auto [it, fresh] = owner.emplace(v, h);
      if (!fresh) parent[find(h)] = find(it->second);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t h = 0; h < hot.size(); ++h) groups[find(h)].push_back(hot[h]);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, facets] : groups) out.push_back(std::move(facets));
  std::sort(out.begin(), out.end());
  return out;
}

long component_index(const OrientedComplex& region, const Labeling& labels, const FirmSystem& fs,
                     const std::vector<std::size_t>& component) {
  check_labels(region.complex, labels, fs);
  if (component.empty()) throw Error(ErrorCode::InvalidGame, "empty component");
  std::set<std::size_t> inside(component.begin(), component.end());
  std::set<int> core_vertices;
  for (std::size_t fi : component) {
    const Simplex& f = region.facets().at(fi);
    core_vertices.insert(f.begin(), f.end());
  }

  BalanceCache balanced(fs, BalanceMode::Convex);
  OrientedComplex star;
  star.complex.vertices = region.complex.vertices;
  for (std::size_t fi = 0; fi < region.facets().size(); ++fi) {
    const Simplex& f = region.facets()[fi];
    const bool touches = std::any_of(f.begin(), f.end(), [&](int v) { return core_vertices.count(v) > 0; });
    if (!touches) continue;
    if (!inside.count(fi) && balanced(label_union(f, labels))) {
      throw Error(ErrorCode::NotIsolated, "balanced facet " + std::to_string(fi) + " in the component's star");
    }
    star.complex.facets.push_back(f);
    star.orientation.push_back(region.orientation[fi]);
  }
  const OrientedComplex rim = boundary(star);
  for (const Simplex& f : rim.facets()) {
    if (balanced(label_union(f, labels))) {
      throw Error(ErrorCode::BoundaryTouchesBalanced, "balanced face on the neighborhood boundary");
    }
  }
  return pl_degree(rim, labels, fs).degree;
}

IndexSum index_sum_check(const OrientedComplex& region, const Labeling& labels, const FirmSystem& fs) {
  IndexSum out;
  out.boundary_degree = pl_degree(boundary(region), labels, fs);
  long total = 0;
  for (auto& comp : balanced_components(region, labels, fs)) {
    const long index = component_index(region, labels, fs, comp);
    total += index;
    out.components.push_back({std::move(comp), index});
  }
  out.sum_matches = !out.boundary_degree.balanced() && out.boundary_degree.degree == total;
  return out;
}

}  // namespace coopx

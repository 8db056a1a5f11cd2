#include "coopx/game.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "coopx/error.hpp"
#include "coopx/linear.hpp"

namespace coopx {

HalfSpace::HalfSpace(Vector normal, Rational offset) : normal_(std::move(normal)), offset_(std::move(offset)) {
  if (normal_.empty()) throw Error(ErrorCode::InvalidGame, "half-space of dimension 0");
  for (const auto& a : normal_) {
    if (a < 0) throw Error(ErrorCode::InvalidGame, "half-space normal " + to_string(normal_) + " has a negative entry");
    weight_ += a;
  }
  if (weight_ == 0) throw Error(ErrorCode::InvalidGame, "half-space normal is zero");
}

Primitive::Primitive(std::vector<HalfSpace> halfspaces) : halfspaces_(std::move(halfspaces)) {
  if (halfspaces_.empty()) throw Error(ErrorCode::InvalidGame, "primitive without half-spaces");
  for (const auto& h : halfspaces_) {
    if (h.dimension() != halfspaces_.front().dimension()) {
      throw Error(ErrorCode::DimensionMismatch, "half-spaces of one primitive differ in dimension");
    }
  }
}

Primitive Primitive::orthant(const Vector& apex) {
  std::vector<HalfSpace> hs;
  for (std::size_t i = 0; i < apex.size(); ++i) hs.emplace_back(unit_vector(apex.size(), i), apex[i]);
  return Primitive(std::move(hs));
}

bool Primitive::contains(const Vector& x) const {
  if (x.size() != dimension()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from set dimension");
  return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const HalfSpace& h) { return h.contains(x); });
}

Rational Primitive::level(const Vector& x) const {
  if (x.size() != dimension()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from set dimension");
  Rational best = halfspaces_.front().level(x);
  for (std::size_t k = 1; k < halfspaces_.size(); ++k) {
    Rational l = halfspaces_[k].level(x);
    if (l < best) best = std::move(l);
  }
  return best;
}

ComprehensiveSet::ComprehensiveSet(std::vector<Primitive> primitives) : primitives_(std::move(primitives)) {
  if (primitives_.empty()) throw Error(ErrorCode::InvalidGame, "comprehensive set without primitives");
  for (const auto& p : primitives_) {
    if (p.dimension() != primitives_.front().dimension()) {
      throw Error(ErrorCode::DimensionMismatch, "primitives of one set differ in dimension");
    }
  }
}

bool ComprehensiveSet::contains(const Vector& x) const {
  return std::any_of(primitives_.begin(), primitives_.end(), [&](const Primitive& p) { return p.contains(x); });
}

Rational ComprehensiveSet::level(const Vector& x) const {
  Rational best = primitives_.front().level(x);
  for (std::size_t k = 1; k < primitives_.size(); ++k) {
    Rational l = primitives_[k].level(x);
    if (l > best) best = std::move(l);
  }
  return best;
}

void FirmSystem::check() const {
  if (resource.empty()) throw Error(ErrorCode::DimensionMismatch, "resource vector is empty");
  for (std::size_t i = 0; i < firms.size(); ++i) {
    if (firms[i].size() != resource.size()) {
      throw Error(ErrorCode::DimensionMismatch, "firm " + std::to_string(i) + " has dimension " +
                                                    std::to_string(firms[i].size()) + ", resource has " +
                                                    std::to_string(resource.size()));
    }
  }
}

void GeneralizedGame::check() const {
  if (utilities.empty()) throw Error(ErrorCode::InvalidGame, "game without utilities");
  firm_system.check();
  if (utilities.size() != firm_system.size()) {
    throw Error(ErrorCode::CountMismatch, std::to_string(utilities.size()) + " utility sets for " +
                                              std::to_string(firm_system.size()) + " firms");
  }
  for (const auto& u : utilities) {
    if (u.dimension() != dimension()) throw Error(ErrorCode::DimensionMismatch, "utility sets differ in dimension");
  }
  if (distinguished && *distinguished >= utilities.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "distinguished firm " + std::to_string(*distinguished) + " out of range");
  }
}

TUGame::TUGame(int n) : players(n) {
  if (n < 0 || n > 20) throw Error(ErrorCode::CapExceeded, "TU games are limited to 20 players");
  values.assign(std::size_t{full_mask(n)} + 1, Rational(0));
}

bool contains(const ComprehensiveSet& set, const Vector& x) { return set.contains(x); }

Rational tau(const std::vector<ComprehensiveSet>& sets, const Vector& x) {
  if (sets.empty()) throw Error(ErrorCode::InvalidGame, "tau of an empty family");
  Rational best = sets.front().level(x);
  for (std::size_t i = 1; i < sets.size(); ++i) {
    Rational l = sets[i].level(x);
    if (l > best) best = std::move(l);
  }
  return best;
}

bool in_induced_cover(const std::vector<ComprehensiveSet>& sets, std::size_t i, const Vector& x) {
  if (i >= sets.size()) throw Error(ErrorCode::IndexOutOfRange, "firm " + std::to_string(i) + " out of range");
  return sets[i].level(x) == tau(sets, x);
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

void add(ValidationReport& report, std::string name, bool passed, std::string detail = {}) {
  report.checks.push_back({std::move(name), passed, std::move(detail)});
}

// Every primitive misses x = M*1 once M exceeds its level at 0.
Check properness(const ComprehensiveSet& u, std::size_t index) {
  const std::size_t n = u.dimension();
  const Rational m = u.level(zeros(n)) + 1;
  const Vector probe = scale(ones(n), m);
  Check c{"utility " + std::to_string(index) + " proper", !u.contains(probe), ""};
  c.detail = c.passed ? "excludes " + to_string(probe) : "contains " + to_string(probe);
  return c;
}

}  // namespace

ValidationReport validate_game(const GeneralizedGame& g) {
  ValidationReport report;
  try {
    g.check();
  } catch (const Error& e) {
    add(report, "structure", false, e.what());
    return report;
  }
  add(report, "structure", true);
  add(report, "normals nonnegative", true, "enforced at construction");
  for (std::size_t i = 0; i < g.utilities.size(); ++i) report.checks.push_back(properness(g.utilities[i], i));

  const FirmSystem& fs = g.firm_system;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const Rational s = sum(fs.firms[i]);
    add(report, "firm " + std::to_string(i) + " <v,1> > 0", s > 0, "<v,1> = " + to_string(s));
  }
  add(report, "resource nonzero", !is_zero(fs.resource));

  const std::size_t m = fs.size();
  LinearSystem sys(m);
  for (std::size_t k = 0; k < fs.dimension(); ++k) {
    Vector row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = fs.firms[i][k];
    sys.add_eq(std::move(row), fs.resource[k]);
  }
  for (std::size_t i = 0; i < m; ++i) sys.add_nonneg(i);
  const auto w = solve_feasibility(sys);
  add(report, "resource in cone(V)", w.has_value(), w ? "weights " + to_string(*w) : "infeasible");
  return report;
}

ValidationReport validate_ntu(const CoalitionalNTUGame& g) {
  ValidationReport report;
  const int n = g.players;
  bool all_present = true;
  for (Mask s = 1; s <= full_mask(n); ++s) {
    if (!g.sets.count(s)) all_present = false;
  }
  add(report, "all coalitions present", all_present);

  for (const auto& [s, set] : g.sets) {
    const std::string label = "V(" + coalition_label(s) + ")";
    const std::size_t k = static_cast<std::size_t>(popcount(s));
    if (set.dimension() != k) {
      add(report, label + " dimension", false, "expected " + std::to_string(k));
      continue;
    }
    report.checks.push_back(properness(set, 0));
    report.checks.back().name = label + " proper";

    bool bounded = true;
    std::string detail;
    for (const auto& p : set.primitives()) {
      LinearSystem sys(k);
      for (const auto& h : p.halfspaces()) sys.add_le(h.normal(), h.offset());
      for (std::size_t i = 0; i < k; ++i) sys.add_nonneg(i);
      for (std::size_t i = 0; i < k && bounded; ++i) {
        const LpResult r = maximize(unit_vector(k, i), sys);
        if (r.status == LpStatus::Unbounded) {
          bounded = false;
          detail = "coordinate " + std::to_string(i) + " unbounded on the nonnegative part";
        }
      }
    }
    add(report, label + " bounded above", bounded, detail);
  }
  return report;
}

namespace {

// Floating-point screen for one generator subset: false only when the
// candidate is clearly not a supporting hyperplane of the hull.
bool may_support(const std::vector<std::vector<double>>& rows, const std::vector<std::size_t>& pick,
                 std::size_t points) {
  const std::size_t n = pick.size();
  std::vector<std::vector<double>> m;
  for (auto i : pick) m.push_back(rows[i]);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c <= n && r < n; ++c) {
    std::size_t best = r;
    for (std::size_t i = r; i < n; ++i) {
      if (std::abs(m[i][c]) > std::abs(m[best][c])) best = i;
    }
    if (std::abs(m[best][c]) < 1e-9) continue;
    std::swap(m[r], m[best]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      const double f = m[i][c] / m[r][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  if (r < n) return true;  // near-degenerate: decide exactly
  std::size_t free_col = 0;
  while (free_col < pivots.size() && pivots[free_col] == free_col) ++free_col;
  std::vector<double> x(n + 1, 0.0);
  x[free_col] = 1.0;
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = -m[i][free_col] / m[i][pivots[i]];
  double scale = 0.0;
  for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(x[j]));
  if (scale < 1e-9) return true;
  bool pos = false, neg = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] / scale > 1e-7) pos = true;
    if (x[j] / scale < -1e-7) neg = true;
  }
  if (pos && neg) return false;
  // Tightness: the first chosen point must attain the maximum of <a, p>.
  auto value = [&](std::size_t p) {
    double v = 0.0;
    for (std::size_t j = 0; j < n; ++j) v += x[j] * rows[p][j];
    return v;
  };
  const double sgn = pos ? 1.0 : -1.0;
  const double at = sgn * value(pick[0]);
  for (std::size_t p = 0; p < points; ++p) {
    if (sgn * value(p) - at > 1e-7 * scale) return false;
  }
  return true;
}

}  // namespace

Primitive hull_primitive(const std::vector<Vector>& points) {
  if (points.empty()) throw Error(ErrorCode::InvalidGame, "hull of no points");
  const std::size_t n = points.front().size();
  // Rows (p, -1) and (e_k, 0); every n-subset with a point row and a
  // one-dimensional kernel yields a candidate (a, b) with <a,p> = b on its points.
  Matrix rows;
  for (const auto& p : points) {
    if (p.size() != n) throw Error(ErrorCode::DimensionMismatch, "hull points differ in dimension");
    Vector r(p);
    r.push_back(-1);
    rows.push_back(std::move(r));
  }
  for (std::size_t k = 0; k < n; ++k) rows.push_back(unit_vector(n + 1, k));
  std::vector<std::vector<double>> approx;
  for (const auto& r : rows) {
    std::vector<double> d;
    for (const auto& q : r) d.push_back(q.get_d());
    approx.push_back(std::move(d));
  }

  std::set<std::vector<Rational>> seen;
  std::vector<HalfSpace> facets;
  // Rows orthogonal to (a, -b) for each facet found; a subset inside one of
  // these can only reproduce that facet.
  std::vector<std::vector<bool>> tight;
  auto known = [&](const std::vector<std::size_t>& pick) {
    return std::any_of(tight.begin(), tight.end(), [&](const std::vector<bool>& t) {
      return std::all_of(pick.begin(), pick.end(), [&](std::size_t i) { return t[i]; });
    });
  };
  std::vector<std::size_t> pick(n);
  const std::size_t total = rows.size();
  if (total < n) throw Error(ErrorCode::InvalidGame, "too few hull generators");
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  for (;;) {
    if (pick[0] < points.size() && !known(pick) && may_support(approx, pick, points.size())) {
      Matrix sub;
      for (auto i : pick) sub.push_back(rows[i]);
      const Matrix ker = nullspace(sub, n + 1);
      if (ker.size() == 1) {
        Vector a(ker[0].begin(), ker[0].end() - 1);
        Rational s = sum(a);
        bool pos = true, neg = true;
        for (const auto& v : a) {
          if (v < 0) pos = false;
          if (v > 0) neg = false;
        }
        if (s != 0 && (pos || neg)) {
          a = scale(a, 1 / s);
          Rational b = dot(a, points.front());
          for (const auto& p : points) b = std::max(b, dot(a, p));
          if (dot(a, points[pick[0]]) == b) {
            Vector key(a);
            key.push_back(b);
            if (seen.insert(key).second) {
              std::vector<bool> t(total);
              for (std::size_t r = 0; r < total; ++r) {
                t[r] = r < points.size() ? dot(a, points[r]) == b : a[r - points.size()] == 0;
              }
              tight.push_back(std::move(t));
              facets.emplace_back(std::move(a), std::move(b));
            }
          }
        }
      }
    }
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == total - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(facets.begin(), facets.end(), [](const HalfSpace& x, const HalfSpace& y) {
    if (x.normal() != y.normal()) return x.normal() < y.normal();
    return x.offset() < y.offset();
  });
  return Primitive(std::move(facets));
}

}  // namespace coopx

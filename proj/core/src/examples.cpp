#include "coopx/examples.hpp"

#include "coopx/error.hpp"

namespace coopx {

namespace {

ComprehensiveSet halfspace_set(Vector a, Rational b) {
  return ComprehensiveSet({Primitive({HalfSpace(std::move(a), std::move(b))})});
}

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TUGame example1() {
  TUGame g(3);
  const long values[] = {0, -10, -15, -22, -20, -28, -32, -35};
  for (Mask s = 1; s < 8; ++s) g.value(s) = values[s];
  return g;
}

TUGame example1_modified() {
  TUGame g = example1();
  g.value(full_mask(3)) = -100;
  return g;
}

GeneralizedGame example2() {
  GeneralizedGame g;
  g.firm_system.resource = ones(3);
  // A, B, C, AB, BC, AC, ABC
  const Mask coalitions[] = {0b001, 0b010, 0b100, 0b011, 0b110, 0b101, 0b111};
  for (Mask s : coalitions) {
    Vector v = zeros(3);
    for (int i : members(s)) v[static_cast<std::size_t>(i)] = 1;
    g.firm_system.firms.push_back(std::move(v));
  }
  g.utilities = {
      halfspace_set(vec({0, 1, 0}), 10), halfspace_set(vec({0, 1, 0}), 0), halfspace_set(vec({0, 0, 1}), 0),
      halfspace_set(vec({1, 1, 0}), 0),  halfspace_set(vec({0, 1, 1}), 0), halfspace_set(vec({1, 0, 1}), 1),
      halfspace_set(vec({1, 1, 1}), 0),
  };
  g.distinguished = 6;
  return g;
}

Vector mirror(const Vector& x) {
  const Rational axis = 2 * sum(x) / static_cast<long>(x.size());
  Vector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = axis - x[k];
  return out;
}

HalfSpace mirror(const HalfSpace& h) {
  const Vector& a = h.normal();
  const Rational axis = 2 * sum(a) / static_cast<long>(a.size());
  Vector m(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    m[k] = axis - a[k];
    if (m[k] < 0) throw Error(ErrorCode::InvalidGame, "mirrored normal " + to_string(a) + " has a negative entry");
  }
  return HalfSpace(std::move(m), h.offset());
}

ComprehensiveSet mirror(const ComprehensiveSet& u) {
  std::vector<Primitive> prims;
  for (const auto& p : u.primitives()) {
    std::vector<HalfSpace> hs;
    for (const auto& h : p.halfspaces()) hs.push_back(mirror(h));
    prims.emplace_back(std::move(hs));
  }
  return ComprehensiveSet(std::move(prims));
}

GeneralizedGame centrally_symmetric_game(const FirmSystem& half, const std::vector<ComprehensiveSet>& utilities) {
  half.check();
  if (utilities.size() != half.size()) throw Error(ErrorCode::CountMismatch, "one utility set per firm required");
  GeneralizedGame g;
  g.firm_system = half;
  g.utilities = utilities;
  for (std::size_t i = 0; i < half.size(); ++i) {
    g.firm_system.firms.push_back(sub(scale(half.resource, 2), half.firms[i]));
    g.utilities.push_back(mirror(utilities[i]));
  }
  g.check();
  return g;
}

GeneralizedGame axis_symmetric_game(int n, const Rational& c, const std::vector<Rational>& offsets) {
  if (n < 2) throw Error(ErrorCode::DimensionMismatch, "at least two players");
  if (offsets.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::CountMismatch, "one offset per player");
  const std::size_t un = static_cast<std::size_t>(n);
  FirmSystem half;
  half.resource = Vector(un, Rational(1, n));
  std::vector<ComprehensiveSet> utilities;
  for (std::size_t i = 0; i < un; ++i) {
    half.firms.push_back(add(half.resource, scale(sub(unit_vector(un, i), half.resource), Rational(1, 2))));
    Vector a = ones(un);
    a[i] += c;
    utilities.push_back(halfspace_set(std::move(a), offsets[i]));
  }
  return centrally_symmetric_game(half, utilities);
}

namespace {

struct Complex2 {
  Rational re;
  Rational im;
};

Complex2 times(const Complex2& a, const Complex2& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

}  // namespace

BubbleFixture bubble_pair(int first, int second, int grid) {
  if ((first != 1 && first != -1) || (second != 1 && second != -1)) {
    throw Error(ErrorCode::MalformedInput, "bubble signs must be +1 or -1");
  }
  if (grid < 4) throw Error(ErrorCode::DimensionMismatch, "grid too small for two bubbles");
  const int side = grid + 1;
  auto id = [&](int i, int j) { return i * side + j; };

  std::vector<std::vector<int>> facets;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      facets.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      facets.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  // Counterclockwise vertex order gives +1.
  BubbleFixture out;
  out.region.complex = make_oriented(side * side, facets);
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) out.region.positions.push_back({Rational(i), Rational(j)});
  }
  for (int v = 0; v < side * side; ++v) out.region.carriers.push_back({v});

  const Rational cy = Rational(grid, 2) + Rational(1, 7);
  const Complex2 centers[] = {{Rational(grid, 4) + Rational(1, 3), cy}, {Rational(3 * grid, 4) + Rational(1, 3), cy}};
  const int signs[] = {first, second};
  // Three cones partitioning the plane in counterclockwise order.
  const Complex2 dirs[] = {{Rational(1), Rational(0)}, {Rational(-1), Rational(1)}, {Rational(0), Rational(-1)}};
  for (const Vector& p : out.region.positions) {
    Complex2 f{Rational(1), Rational(0)};
    for (int k = 0; k < 2; ++k) {
      Complex2 g{p[0] - centers[k].re, p[1] - centers[k].im};
      if (signs[k] < 0) g.im = -g.im;
      f = times(f, g);
    }
    int best = 0;
    Rational best_value = f.re * dirs[0].re + f.im * dirs[0].im;
    for (int k = 1; k < 3; ++k) {
      Rational value = f.re * dirs[k].re + f.im * dirs[k].im;
      if (value > best_value) {
        best_value = std::move(value);
        best = k;
      }
    }
    out.labels.push_back(Mask{1} << best);
  }

  out.firms.resource = Vector(3, Rational(1, 3));
  for (std::size_t k = 0; k < 3; ++k) out.firms.firms.push_back(unit_vector(3, k));
  return out;
}

}  // namespace coopx

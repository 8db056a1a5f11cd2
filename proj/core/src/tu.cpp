#include "coopx/tu.hpp"

#include "coopx/error.hpp"
#include "coopx/linear.hpp"

namespace coopx {

namespace {

Vector indicator(Mask s, int n) {
  Vector v = zeros(static_cast<std::size_t>(n));
  for (int i : members(s)) v[static_cast<std::size_t>(i)] = 1;
  return v;
}

Rational family_value(const TUGame& g, const BalancedFamily& f) {
  Rational total = 0;
  for (std::size_t k = 0; k < f.coalitions.size(); ++k) total += f.weights[k] * g.value(f.coalitions[k]);
  return total;
}

}  // namespace

std::optional<Vector> core_nonempty(const TUGame& g) {
  const int n = g.players;
  LinearSystem sys(static_cast<std::size_t>(n));
  sys.add_eq(ones(static_cast<std::size_t>(n)), g.grand());
  for (Mask s = 1; s < full_mask(n); ++s) sys.add_ge(indicator(s, n), g.value(s));
  return solve_feasibility(sys);
}

TuBalance is_balanced_tu(const TUGame& g, TuBalanceMethod method) {
  const int n = g.players;
  if (n < 1) throw Error(ErrorCode::InvalidGame, "TU game without players");
  if (method == TuBalanceMethod::Auto) method = n <= 5 ? TuBalanceMethod::Enumerate : TuBalanceMethod::DualProgram;

  TuBalance out;
  if (method == TuBalanceMethod::Enumerate) {
    bool first = true;
    for (const BalancedFamily& f : minimal_balanced_families(n)) {
      Rational v = family_value(g, f);
      if (first || v > out.value) {
        out.family = f;
        out.value = std::move(v);
        first = false;
      }
    }
  } else {
    const std::vector<Mask> coalitions = canonical_subsets(n);
    const std::size_t k = coalitions.size();
    LinearSystem sys(k, true);
    for (int i = 0; i < n; ++i) {
      Vector row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = has(coalitions[j], i) ? 1 : 0;
      sys.add_eq(std::move(row), 1);
    }
    Vector objective(k);
    for (std::size_t j = 0; j < k; ++j) objective[j] = g.value(coalitions[j]);
    const LpResult r = maximize(objective, sys);
    for (std::size_t j = 0; j < k; ++j) {
      if (r.witness[j] != 0) {
        out.family.coalitions.push_back(coalitions[j]);
        out.family.weights.push_back(r.witness[j]);
      }
    }
    out.value = r.value;
  }
  out.balanced = out.value <= g.grand();
  return out;
}

CoreCheck check_core_point(const TUGame& g, const Vector& x) {
  const int n = g.players;
  if (x.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::DimensionMismatch, "allocation has " + std::to_string(x.size()) + " entries for " +
                                                  std::to_string(n) + " players");
  }
  CoreCheck c;
  c.efficient = sum(x) == g.grand();
  Rational worst = 0;
  for (Mask s : canonical_subsets(n)) {
    Rational excess = g.value(s);
    for (int i : members(s)) excess -= x[static_cast<std::size_t>(i)];
    if (excess > worst) {
      worst = std::move(excess);
      c.blocking = s;
    }
  }
  c.accepted = c.efficient && !c.blocking;
  return c;
}

}  // namespace coopx

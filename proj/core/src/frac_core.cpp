#include "coopx/frac_core.hpp"

#include <algorithm>
#include <numeric>

#include "coopx/error.hpp"
#include "coopx/linear.hpp"

namespace coopx {

namespace {

FirmSystem coalition_firms(int n) {
  FirmSystem fs;
  for (Mask s : canonical_subsets(n)) {
    const Rational w(1, popcount(s));
    Vector v = zeros(static_cast<std::size_t>(n));
    for (int i : members(s)) v[static_cast<std::size_t>(i)] = w;
    fs.firms.push_back(std::move(v));
  }
  fs.resource = Vector(static_cast<std::size_t>(n), Rational(1, n));
  return fs;
}

}  // namespace

GeneralizedGame embed_coalitional(const TUGame& g) {
  const int n = g.players;
  GeneralizedGame out;
  out.firm_system = coalition_firms(n);
  for (Mask s : canonical_subsets(n)) {
    Vector a = zeros(static_cast<std::size_t>(n));
    for (int i : members(s)) a[static_cast<std::size_t>(i)] = 1;
    out.utilities.emplace_back(std::vector<Primitive>{Primitive({HalfSpace(std::move(a), g.value(s))})});
  }
  out.distinguished = out.utilities.size() - 1;
  return out;
}

GeneralizedGame embed_coalitional(const CoalitionalNTUGame& g) {
  const int n = g.players;
  GeneralizedGame out;
  out.firm_system = coalition_firms(n);
  for (Mask s : canonical_subsets(n)) {
    const auto it = g.sets.find(s);
    if (it == g.sets.end()) throw Error(ErrorCode::InvalidGame, "missing V(" + coalition_label(s) + ")");
    const std::vector<int> idx = members(s);
    if (it->second.dimension() != idx.size()) {
      throw Error(ErrorCode::DimensionMismatch, "V(" + coalition_label(s) + ") has the wrong dimension");
    }
    std::vector<Primitive> cylinder;
    for (const auto& p : it->second.primitives()) {
      std::vector<HalfSpace> hs;
      for (const auto& h : p.halfspaces()) {
        Vector a = zeros(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < idx.size(); ++k) a[static_cast<std::size_t>(idx[k])] = h.normal()[k];
        hs.emplace_back(std::move(a), h.offset());
      }
      cylinder.emplace_back(std::move(hs));
    }
    out.utilities.emplace_back(std::move(cylinder));
  }
  out.distinguished = out.utilities.size() - 1;
  return out;
}

std::optional<FractionalCoreWitness> make_witness(const GeneralizedGame& g, Mask firms, const Vector& point,
                                                  BalanceMode mode) {
  auto weights = balanced_weights(firms, g.firm_system, mode);
  if (!weights) return std::nullopt;
  FractionalCoreWitness w;
  w.point = point;
  w.level = sum(point) / static_cast<long>(point.size());
  w.base = shift(point, -w.level);
  w.firms = firms;
  w.weights = std::move(*weights);
  return w;
}

std::string verify_witness(const GeneralizedGame& g, const FractionalCoreWitness& w, BalanceMode mode) {
  const FirmSystem& fs = g.firm_system;
  const std::vector<int> idx = members(w.firms);
  if (idx.empty()) return "empty firm set";
  if (w.weights.size() != idx.size()) return "weight count differs from firm count";
  Vector combo = zeros(fs.dimension());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (w.weights[k] < 0) return "negative weight";
    combo = add(combo, scale(fs.firms.at(static_cast<std::size_t>(idx[k])), w.weights[k]));
  }
  if (combo != fs.resource) return "weights do not reproduce the resource";
  if (mode == BalanceMode::Convex && sum(w.weights) != 1) return "weights do not sum to 1";
  if (sum(w.base) != 0) return "base point is not in the sum-zero hyperplane";
  if (shift(w.base, w.level) != w.point) return "point differs from base + level * 1";
  for (int i : idx) {
    if (!contains(g.utilities[static_cast<std::size_t>(i)], w.point)) {
      return "point outside utility set of firm " + std::to_string(i);
    }
  }
  if (tau(g.utilities, w.base) != w.level) return "level differs from tau(base); the point is blocked";
  return {};
}

namespace {

struct Budget {
  std::uint64_t used = 0;
  std::uint64_t limit = 0;
  bool hard = true;
};

struct BudgetSpent {};

// Depth-first search for z with z in U_i (i in `required`) and level_q(z) <= 0
// for every primitive q in `blockers`.
class Search {
 public:
  Search(const GeneralizedGame& g, std::vector<std::size_t> required, std::vector<const Primitive*> blockers,
         Budget& budget)
      : g_(g), required_(std::move(required)), blockers_(std::move(blockers)), budget_(budget) {}

  std::optional<Vector> run(const LinearSystem& root) { return dfs(root); }

 private:
  std::optional<Vector> candidate(const LinearSystem& sys) {
    if (++budget_.used > budget_.limit) {
      if (budget_.hard) {
        throw Error(ErrorCode::CapExceeded, "search exceeded " + std::to_string(budget_.limit) + " nodes");
      }
      throw BudgetSpent{};
    }
    // Pushing z up along 1 settles most blocking constraints at once.
    const LpResult top = maximize(ones(sys.variables), sys);
    if (top.status == LpStatus::Optimal) return top.witness;
    if (top.status == LpStatus::Infeasible) return std::nullopt;
    return solve_feasibility(sys);
  }

  std::optional<Vector> dfs(const LinearSystem& sys) {
    const auto z = candidate(sys);
    if (!z) return std::nullopt;

    for (std::size_t i : required_) {
      const ComprehensiveSet& u = g_.utilities[i];
      if (u.contains(*z)) continue;
      std::vector<std::pair<Rational, std::size_t>> order;
      for (std::size_t p = 0; p < u.primitives().size(); ++p) order.emplace_back(-u.primitives()[p].level(*z), p);
      std::stable_sort(order.begin(), order.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [key, p] : order) {
        LinearSystem child = sys;
        for (const auto& h : u.primitives()[p].halfspaces()) child.add_le(h.normal(), h.offset());
        if (auto found = dfs(child)) return found;
      }
      return std::nullopt;
    }

    for (const Primitive* q : blockers_) {
      if (q->level(*z) <= 0) continue;
      std::vector<std::pair<Rational, std::size_t>> order;
      for (std::size_t k = 0; k < q->halfspaces().size(); ++k) order.emplace_back(q->halfspaces()[k].level(*z), k);
      std::stable_sort(order.begin(), order.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [key, k] : order) {
        LinearSystem child = sys;
        const HalfSpace& h = q->halfspaces()[k];
        child.add_ge(h.normal(), h.offset());
        if (auto found = dfs(child)) return found;
      }
      return std::nullopt;
    }
    return z;
  }

  const GeneralizedGame& g_;
  std::vector<std::size_t> required_;
  std::vector<const Primitive*> blockers_;
  Budget& budget_;
};

std::vector<const Primitive*> all_primitives(const GeneralizedGame& g, std::optional<std::size_t> skip) {
  std::vector<const Primitive*> out;
  for (std::size_t i = 0; i < g.utilities.size(); ++i) {
    if (skip && *skip == i) continue;
    for (const auto& p : g.utilities[i].primitives()) out.push_back(&p);
  }
  return out;
}

std::vector<std::size_t> as_indices(Mask s) {
  std::vector<std::size_t> out;
  for (int i : members(s)) out.push_back(static_cast<std::size_t>(i));
  return out;
}

template <typename Range, typename Key>
std::size_t argbest(const Range& items, Key key) {
  std::size_t best = 0;
  Rational best_key = key(items[0]);
  for (std::size_t k = 1; k < items.size(); ++k) {
    Rational v = key(items[k]);
    if (v < best_key) {
      best_key = std::move(v);
      best = k;
    }
  }
  return best;
}

std::optional<Vector> probe_solve(const GeneralizedGame& g, const std::vector<const Primitive*>& blockers,
                                  const SearchProbe& probe) {
  if (probe.point.size() != g.dimension()) throw Error(ErrorCode::DimensionMismatch, "probe dimension");
  const Vector top = shift(probe.point, tau(g.utilities, probe.point));
  LinearSystem sys(g.dimension());
  for (int i : members(probe.firms)) {
    const auto& prims = g.utilities.at(static_cast<std::size_t>(i)).primitives();
    const Primitive& p = prims[argbest(prims, [&](const Primitive& q) { return Rational(-q.level(top)); })];
    for (const auto& h : p.halfspaces()) sys.add_le(h.normal(), h.offset());
  }
  for (const Primitive* q : blockers) {
    const auto& hs = q->halfspaces();
    const HalfSpace& h = hs[argbest(hs, [&](const HalfSpace& x) { return x.level(top); })];
    sys.add_ge(h.normal(), h.offset());
  }
  return solve_feasibility(sys);
}

}  // namespace

FractionalCoreResult fractional_core_solve(const GeneralizedGame& g, const SolveOptions& opts) {
  g.check();
  const std::size_t n = g.dimension();
  const std::vector<const Primitive*> blockers = all_primitives(g, std::nullopt);
  FractionalCoreResult result;

  Budget total{0, opts.node_cap, true};
  for (const SearchProbe& probe : opts.probes) {
    if (!balanced_weights(probe.firms, g.firm_system, opts.mode)) continue;
    if (++total.used > total.limit) throw Error(ErrorCode::CapExceeded, "probes exceeded the node cap");
    if (auto z = probe_solve(g, blockers, probe)) {
      result.witness = make_witness(g, probe.firms, *z, opts.mode);
      result.nodes = total.used;
      return result;
    }
  }
  for (const SearchHint& hint : opts.hints) {
    const std::vector<std::size_t> idx = as_indices(hint.firms);
    if (hint.primitives.size() != idx.size()) throw Error(ErrorCode::CountMismatch, "hint primitive count");
    if (!balanced_weights(hint.firms, g.firm_system, opts.mode)) continue;
    LinearSystem root(n);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Primitive& p = g.utilities.at(idx[k]).primitives().at(hint.primitives[k]);
      for (const auto& h : p.halfspaces()) root.add_le(h.normal(), h.offset());
    }
    Budget local{0, std::min(hint.budget, opts.node_cap - total.used), false};
    Search search(g, idx, blockers, local);
    std::optional<Vector> z;
    try {
      z = search.run(root);
    } catch (const BudgetSpent&) {
    }
    total.used += local.used;
    if (z) {
      result.witness = make_witness(g, hint.firms, *z, opts.mode);
      result.nodes = total.used;
      return result;
    }
  }

  for (Mask s : minimal_balanced_sets(g.firm_system, opts.mode, opts.firm_cap)) {
    Search search(g, as_indices(s), blockers, total);
    if (auto z = search.run(LinearSystem(n))) {
      result.witness = make_witness(g, s, *z, opts.mode);
      break;
    }
  }
  result.nodes = total.used;
  return result;
}

CoreResult core_solve(const GeneralizedGame& g, const SolveOptions& opts) {
  g.check();
  if (!g.distinguished) throw Error(ErrorCode::InvalidGame, "core_solve needs a distinguished firm");
  Budget budget{0, opts.node_cap, true};
  Search search(g, {*g.distinguished}, all_primitives(g, g.distinguished), budget);
  CoreResult result;
  result.point = search.run(LinearSystem(g.dimension()));
  result.nodes = budget.used;
  return result;
}

bool verify_core_point(const GeneralizedGame& g, const Vector& x) {
  if (!g.distinguished) throw Error(ErrorCode::InvalidGame, "core check needs a distinguished firm");
  if (!contains(g.utilities[*g.distinguished], x)) return false;
  for (std::size_t i = 0; i < g.utilities.size(); ++i) {
    if (i != *g.distinguished && g.utilities[i].level(x) > 0) return false;
  }
  return true;
}

GameBalance is_balanced_game(const GeneralizedGame& g, const SolveOptions& opts) {
  g.check();
  if (!g.distinguished) throw Error(ErrorCode::InvalidGame, "balancedness needs a distinguished firm");
  GameBalance out;
  const ComprehensiveSet& target = g.utilities[*g.distinguished];
  if (target.primitives().size() != 1) {
    out.status = GameBalanceStatus::Unsupported;
    return out;
  }
  const Primitive& goal = target.primitives().front();
  const Mask dist_bit = Mask{1} << *g.distinguished;
  const std::size_t n = g.dimension();
  std::uint64_t polyhedra = 0;

  // Supersets of a balanced set only shrink the intersection, so minimal sets suffice.
  for (Mask s : minimal_balanced_sets(g.firm_system, opts.mode, opts.firm_cap)) {
    if (s & dist_bit) continue;
    const std::vector<std::size_t> idx = as_indices(s);
    std::vector<std::size_t> choice(idx.size(), 0);
    for (;;) {
      if (++polyhedra > opts.node_cap) throw Error(ErrorCode::CapExceeded, "too many primitive combinations");
      LinearSystem sys(n);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        for (const auto& h : g.utilities[idx[k]].primitives()[choice[k]].halfspaces()) sys.add_le(h.normal(), h.offset());
      }
      for (const HalfSpace& h : goal.halfspaces()) {
        const LpResult r = maximize(h.normal(), sys);
        if (r.status == LpStatus::Infeasible) break;
        if (r.status == LpStatus::Unbounded) {
          LinearSystem beyond = sys;
          beyond.add_ge(h.normal(), h.offset() + 1);
          out.status = GameBalanceStatus::Violated;
          out.firms = s;
          out.point = *solve_feasibility(beyond);
          out.excess.reset();
          return out;
        }
        const Rational excess = r.value - h.offset();
        if (excess > 0 && (out.status == GameBalanceStatus::Balanced || excess > *out.excess)) {
          out.status = GameBalanceStatus::Violated;
          out.firms = s;
          out.point = r.witness;
          out.excess = excess;
        }
      }
      std::size_t k = 0;
      while (k < idx.size() && ++choice[k] == g.utilities[idx[k]].primitives().size()) choice[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return out;
}

}  // namespace coopx

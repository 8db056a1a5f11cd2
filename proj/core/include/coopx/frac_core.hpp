#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coopx/balance.hpp"
#include "coopx/game.hpp"

namespace coopx {

inline constexpr std::uint64_t kDefaultNodeCap = 10'000'000;

/// Firms v_S = 1_S / |S| for every coalition in canonical order, r = 1/n.
/// A TU coalition contributes {x(S) <= v(S)}; an NTU coalition contributes
/// its cylinder. The grand coalition is the distinguished firm.
GeneralizedGame embed_coalitional(const TUGame& g);
GeneralizedGame embed_coalitional(const CoalitionalNTUGame& g);

/// point = base + level * 1, sum(base) = 0, level = tau(base),
/// point in U_i for i in `firms`, weights balance `firms`.
struct FractionalCoreWitness {
  Vector point;
  Vector base;
  Rational level;
  Mask firms = 0;
  Vector weights;
};

/// Fills base, level and weights from a point and a firm set; nullopt when
/// the set is not balanced.
std::optional<FractionalCoreWitness> make_witness(const GeneralizedGame& g, Mask firms, const Vector& point,
                                                  BalanceMode mode = BalanceMode::Cone);

/// Empty string when every witness invariant holds, else the first failure.
std::string verify_witness(const GeneralizedGame& g, const FractionalCoreWitness& w,
                           BalanceMode mode = BalanceMode::Cone);

/// Starts the search under `firms` with one primitive fixed per member
/// (members in increasing order); abandoned after `budget` nodes.
struct SearchHint {
  Mask firms = 0;
  std::vector<std::size_t> primitives;
  std::uint64_t budget = 1000;
};

/// A point near a suspected solution. The solver lifts it to the top of the
/// union, fixes for each member of `firms` the primitive of largest level and
/// for every primitive its halfspace of smallest level there, and solves the
/// resulting single LP. One node per probe.
struct SearchProbe {
  Vector point;
  Mask firms = 0;
};

struct SolveOptions {
  std::size_t firm_cap = kDefaultFirmCap;
  std::uint64_t node_cap = kDefaultNodeCap;
  BalanceMode mode = BalanceMode::Cone;
  std::vector<SearchProbe> probes;
  std::vector<SearchHint> hints;
};

struct FractionalCoreResult {
  std::optional<FractionalCoreWitness> witness;
  std::uint64_t nodes = 0;
  bool nonempty() const { return witness.has_value(); }
};

/// Exact decision by branch and bound over the disjunctions "z in U_i" for
/// i in a minimal balanced set and "tau^q(z) <= 0" for every primitive q.
/// Throws Error(CapExceeded) past the node cap.
FractionalCoreResult fractional_core_solve(const GeneralizedGame& g, const SolveOptions& opts = {});

struct CoreResult {
  std::optional<Vector> point;
  std::uint64_t nodes = 0;
};

/// A point of U_d outside the interior of every other U_i, d the
/// distinguished firm. Throws Error(InvalidGame) without one.
CoreResult core_solve(const GeneralizedGame& g, const SolveOptions& opts = {});

/// True iff x is in U_d and interior to no other U_i.
bool verify_core_point(const GeneralizedGame& g, const Vector& x);

enum class GameBalanceStatus { Balanced, Violated, Unsupported };

struct GameBalance {
  GameBalanceStatus status = GameBalanceStatus::Balanced;
  Mask firms = 0;
  /// In every U_i, i in `firms`, and outside U_d.
  Vector point;
  /// Largest <a, x> - b found; unset when the violation is unbounded.
  std::optional<Rational> excess;
};

/// Checks that the intersection of U_i over every balanced set without the
/// distinguished firm lies inside U_d. Reports the largest violation.
GameBalance is_balanced_game(const GeneralizedGame& g, const SolveOptions& opts = {});

}  // namespace coopx

#pragma once

#include <optional>

#include "coopx/balance.hpp"
#include "coopx/game.hpp"

namespace coopx {

/// A point x with x(N) = v(N) and x(S) >= v(S) for every S, or nullopt.
std::optional<Vector> core_nonempty(const TUGame& g);

enum class TuBalanceMethod {
  Auto,         ///< Enumerate for n <= 5, dual LP otherwise.
  Enumerate,    ///< Scan minimal balanced families.
  DualProgram,  ///< max sum w_S v(S) over balancing weights.
};

struct TuBalance {
  bool balanced = true;
  /// Best family found; for a violated game this is the maximizer.
  BalancedFamily family;
  /// sum w_S v(S) over `family`.
  Rational value;
};

TuBalance is_balanced_tu(const TUGame& g, TuBalanceMethod method = TuBalanceMethod::Auto);

struct CoreCheck {
  bool accepted = false;
  bool efficient = false;
  /// Coalition with the largest excess v(S) - x(S) > 0, ties in canonical order.
  std::optional<Mask> blocking;
};

CoreCheck check_core_point(const TUGame& g, const Vector& x);

}  // namespace coopx

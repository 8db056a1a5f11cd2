#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coopx/coalition.hpp"
#include "coopx/game.hpp"

namespace coopx {

enum class BalanceMode {
  Cone,    ///< r in cone(S)
  Convex,  ///< r in conv(S)
};

inline constexpr std::size_t kDefaultFirmCap = 20;

/// Weights over the members of `s` (increasing index) with sum w_i v_i = r,
/// or nullopt. Throws Error(IndexOutOfRange) for members outside the system.
std::optional<Vector> is_r_balanced(Mask s, const FirmSystem& fs);
/// As is_r_balanced with the weights also summing to 1.
std::optional<Vector> is_conv_r_balanced(Mask s, const FirmSystem& fs);
std::optional<Vector> balanced_weights(Mask s, const FirmSystem& fs, BalanceMode mode);

/// Inclusion-minimal balanced firm sets, canonical order. Every minimal set
/// is independent, so only sets of at most d + 1 firms are tested.
std::vector<Mask> minimal_balanced_sets(const FirmSystem& fs, BalanceMode mode, std::size_t cap = kDefaultFirmCap);

/// All balanced firm sets, canonical order. Balancedness is upward closed,
/// so this is the up-set of minimal_balanced_sets.
std::vector<Mask> enumerate_bs(const FirmSystem& fs, BalanceMode mode, std::size_t cap = kDefaultFirmCap);

/// Coalitions with weights; sum w_S 1_S = 1 over players.
struct BalancedFamily {
  std::vector<Mask> coalitions;
  Vector weights;
};

/// Minimal balanced families of n players (n <= 5), canonical order of the
/// coalition lists. Results are cached per n.
const std::vector<BalancedFamily>& minimal_balanced_families(int n);

/// True iff the weights reproduce 1 over players exactly and are nonnegative.
bool verify_family(const BalancedFamily& family, int n);

struct Equivalence {
  bool equivalent = true;
  std::optional<Mask> witness;
};

Equivalence bs_equivalent(const FirmSystem& a, const FirmSystem& b, BalanceMode mode,
                          std::size_t cap = kDefaultFirmCap);

struct Convexified {
  std::optional<FirmSystem> system;
  /// Set when some <v_i, r> <= 0.
  std::optional<std::size_t> offending_firm;
};

/// Rescales each firm onto {x : <x, r> = |r|^2}.
Convexified convexify(const FirmSystem& fs);

}  // namespace coopx

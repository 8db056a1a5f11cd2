#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coopx {

/// Subset of a finite index set {0, ..., 31} stored as a bit mask. Used for
/// coalitions of players and for sets of firms.
using Mask = std::uint32_t;

constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
constexpr bool has(Mask s, int i) { return (s >> i) & 1U; }
int popcount(Mask s);

/// Members in increasing order.
std::vector<int> members(Mask s);
Mask mask_of(const std::vector<int>& members);

/// Nonempty subsets of {0..n-1} ordered by size, then lexicographically by
/// sorted member list: {0},{1},{2},{0,1},{0,2},{1,2},{0,1,2}.
std::vector<Mask> canonical_subsets(int n);

/// Same order as canonical_subsets, as a strict weak ordering.
bool canonical_less(Mask a, Mask b);

/// "1,2" style label with 1-based members.
std::string coalition_label(Mask s);
/// Inverse of coalition_label. Throws Error(MalformedInput).
Mask parse_coalition_label(std::string_view text, int n);

}  // namespace coopx

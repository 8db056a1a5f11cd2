#include "coopx/balance.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "coopx/error.hpp"
#include "coopx/linear.hpp"

namespace coopx {

std::optional<Vector> balanced_weights(Mask s, const FirmSystem& fs, BalanceMode mode) {
  fs.check();
  const std::vector<int> idx = members(s);
  if (idx.empty()) return std::nullopt;
  if (static_cast<std::size_t>(idx.back()) >= fs.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "firm " + std::to_string(idx.back()) + " out of range");
  }
  const std::size_t k = idx.size();
  LinearSystem sys(k, true);
  for (std::size_t c = 0; c < fs.dimension(); ++c) {
    Vector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = fs.firms[idx[j]][c];
    sys.add_eq(std::move(row), fs.resource[c]);
  }
  if (mode == BalanceMode::Convex) sys.add_eq(ones(k), 1);
  return solve_feasibility(sys);
}

std::optional<Vector> is_r_balanced(Mask s, const FirmSystem& fs) {
  return balanced_weights(s, fs, BalanceMode::Cone);
}

std::optional<Vector> is_conv_r_balanced(Mask s, const FirmSystem& fs) {
  return balanced_weights(s, fs, BalanceMode::Convex);
}

namespace {

void check_cap(const FirmSystem& fs, std::size_t cap) {
  if (fs.size() > cap || fs.size() > 31) {
    throw Error(ErrorCode::CapExceeded,
                std::to_string(fs.size()) + " firms exceed the enumeration cap of " + std::to_string(cap));
  }
}

bool contains_any(Mask s, const std::vector<Mask>& subs) {
  return std::any_of(subs.begin(), subs.end(), [s](Mask m) { return (s & m) == m; });
}

// Visits subsets of {0..m-1} with exactly k members in lexicographic order.
template <class F>
void for_each_k_subset(int m, int k, F&& visit) {
  if (k > m) return;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    visit(mask_of(pick));
    int i = k;
    while (i > 0 && pick[static_cast<std::size_t>(i - 1)] == m - k + i - 1) --i;
    if (i == 0) return;
    ++pick[static_cast<std::size_t>(i - 1)];
    for (int j = i; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<Mask> minimal_balanced_sets(const FirmSystem& fs, BalanceMode mode, std::size_t cap) {
  check_cap(fs, cap);
  const int m = static_cast<int>(fs.size());
  const int max_size = std::min(m, static_cast<int>(fs.dimension()) + (mode == BalanceMode::Convex ? 1 : 0));
  std::vector<Mask> minimal;
  for (int k = 1; k <= max_size; ++k) {
    std::vector<Mask> found;
    for_each_k_subset(m, k, [&](Mask s) {
      if (!contains_any(s, minimal) && balanced_weights(s, fs, mode)) found.push_back(s);
    });
    minimal.insert(minimal.end(), found.begin(), found.end());
  }
  return minimal;
}

std::vector<Mask> enumerate_bs(const FirmSystem& fs, BalanceMode mode, std::size_t cap) {
  const std::vector<Mask> minimal = minimal_balanced_sets(fs, mode, cap);
  std::vector<Mask> all;
  for (Mask s = 1; s <= full_mask(static_cast<int>(fs.size())); ++s) {
    if (contains_any(s, minimal)) all.push_back(s);
  }
  std::sort(all.begin(), all.end(), canonical_less);
  return all;
}

bool verify_family(const BalancedFamily& family, int n) {
  if (family.coalitions.size() != family.weights.size()) return false;
  Vector total = zeros(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < family.coalitions.size(); ++k) {
    if (family.weights[k] < 0) return false;
    for (int i : members(family.coalitions[k])) {
      if (i >= n) return false;
      total[static_cast<std::size_t>(i)] += family.weights[k];
    }
  }
  return total == ones(static_cast<std::size_t>(n));
}

namespace {

std::vector<BalancedFamily> compute_minimal_families(int n) {
  const std::vector<Mask> coalitions = canonical_subsets(n);
  FirmSystem fs;
  for (Mask s : coalitions) {
    Vector v = zeros(static_cast<std::size_t>(n));
    for (int i : members(s)) v[static_cast<std::size_t>(i)] = 1;
    fs.firms.push_back(std::move(v));
  }
  fs.resource = ones(static_cast<std::size_t>(n));

  std::vector<BalancedFamily> out;
  for (Mask chosen : minimal_balanced_sets(fs, BalanceMode::Cone, 31)) {
    BalancedFamily f;
    for (int k : members(chosen)) f.coalitions.push_back(coalitions[static_cast<std::size_t>(k)]);
    f.weights = *is_r_balanced(chosen, fs);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

const std::vector<BalancedFamily>& minimal_balanced_families(int n) {
  if (n < 1 || n > 5) throw Error(ErrorCode::CapExceeded, "minimal balanced families are enumerated for n <= 5");
  static std::array<std::vector<BalancedFamily>, 6> cache;
  static std::array<std::once_flag, 6> once;
  std::call_once(once[static_cast<std::size_t>(n)],
                 [n] { cache[static_cast<std::size_t>(n)] = compute_minimal_families(n); });
  return cache[static_cast<std::size_t>(n)];
}

Equivalence bs_equivalent(const FirmSystem& a, const FirmSystem& b, BalanceMode mode, std::size_t cap) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::CountMismatch,
                "firm counts differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  const std::vector<Mask> sa = enumerate_bs(a, mode, cap);
  const std::vector<Mask> sb = enumerate_bs(b, mode, cap);
  Equivalence e;
  std::vector<Mask> diff;
  std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(diff),
                                canonical_less);
  if (!diff.empty()) {
    e.equivalent = false;
    e.witness = diff.front();
  }
  return e;
}

Convexified convexify(const FirmSystem& fs) {
  fs.check();
  Convexified out;
  const Rational norm2 = dot(fs.resource, fs.resource);
  FirmSystem result{{}, fs.resource};
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const Rational p = dot(fs.firms[i], fs.resource);
    if (p <= 0) {
      out.offending_firm = i;
      return out;
    }
    result.firms.push_back(scale(fs.firms[i], norm2 / p));
  }
  out.system = std::move(result);
  return out;
}

}  // namespace coopx

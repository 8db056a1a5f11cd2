#include "coopx/coalition.hpp"

#include <algorithm>
#include <bit>

#include "coopx/error.hpp"

namespace coopx {

int popcount(Mask s) { return std::popcount(s); }

std::vector<int> members(Mask s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1) {
    if (s & 1U) out.push_back(i);
  }
  return out;
}

Mask mask_of(const std::vector<int>& members) {
  Mask s = 0;
  for (int i : members) {
    if (i < 0 || i >= 32) throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " outside 0..31");
    s |= Mask{1} << i;
  }
  return s;
}

bool canonical_less(Mask a, Mask b) {
  const int pa = popcount(a);
  const int pb = popcount(b);
  if (pa != pb) return pa < pb;
  return members(a) < members(b);
}

std::vector<Mask> canonical_subsets(int n) {
  if (n < 0 || n > 30) throw Error(ErrorCode::CapExceeded, "subset enumeration limited to 30 elements");
  std::vector<Mask> all;
  all.reserve(full_mask(n));
  for (Mask s = 1; s <= full_mask(n); ++s) all.push_back(s);
  std::sort(all.begin(), all.end(), canonical_less);
  return all;
}

std::string coalition_label(Mask s) {
  std::string out;
  for (int i : members(s)) {
    if (!out.empty()) out += ',';
    out += std::to_string(i + 1);
  }
  return out;
}

Mask parse_coalition_label(std::string_view text, int n) {
  Mask s = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view tok = text.substr(pos, comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        tok.size() > 3) {
      throw Error(ErrorCode::MalformedInput, "bad coalition label '" + std::string(text) + "'");
    }
    const int player = std::stoi(std::string(tok));
    if (player < 1 || player > n) {
      throw Error(ErrorCode::MalformedInput, "player " + std::to_string(player) + " outside 1.." + std::to_string(n));
    }
    const Mask bit = Mask{1} << (player - 1);
    if (s & bit) throw Error(ErrorCode::MalformedInput, "repeated player in '" + std::string(text) + "'");
    s |= bit;
    pos = comma + 1;
  }
  return s;
}

}  // namespace coopx

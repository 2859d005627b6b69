#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace hlab {

/// Subset of the ground set {0, ..., N-1} as a bitmask; N <= 64.
using ElementSet = std::uint64_t;

constexpr int kMaxGround = 64;

constexpr ElementSet singleton(int e) { return ElementSet{1} << e; }
constexpr bool contains(ElementSet s, int e) { return (s >> e) & 1U; }
constexpr int set_size(ElementSet s) { return std::popcount(s); }
constexpr ElementSet full_set(int n) { return n >= 64 ? ~ElementSet{0} : (ElementSet{1} << n) - 1; }
constexpr bool is_subset(ElementSet a, ElementSet b) { return (a & ~b) == 0; }

inline std::vector<int> elements_of(ElementSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline ElementSet set_of(const std::vector<int>& elems) {
  ElementSet s = 0;
  for (int e : elems) s |= singleton(e);
  return s;
}

/// Lexicographic order on sorted element lists (a proper prefix sorts first).
inline bool lex_less(ElementSet a, ElementSet b) {
  const ElementSet d = a ^ b;
  if (d == 0) return false;
  const int low = std::countr_zero(d);
  if (contains(a, low)) return (b >> low) != 0;
  return (a >> low) == 0;
}

inline std::string format_set(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(e);
  }
  return out + "}";
}

}  // namespace hlab

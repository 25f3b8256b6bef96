#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

namespace privmon {

// Robustness values are W-bit signed integers where the largest/smallest
// representable magnitudes stand for +inf/-inf. The raw two's-complement
// minimum -2^(W-1) is never produced, so negation is an involution.
using Rob = int64_t;

constexpr int kMinWidth = 4;
constexpr int kMaxWidth = 32;

constexpr Rob pinf(int width) { return (Rob{1} << (width - 1)) - 1; }
constexpr Rob ninf(int width) { return -pinf(width); }

inline bool valid_width(int width) {
  return width >= kMinWidth && width <= kMaxWidth;
}

inline bool in_range(Rob v, int width) {
  return v >= ninf(width) && v <= pinf(width);
}

inline Rob sat_clamp(Rob v, int width) {
  return std::clamp(v, ninf(width), pinf(width));
}

// Saturating subtraction; operands are assumed in range, so the true
// difference fits in W+1 bits and only the clamp is needed.
inline Rob sat_sub(Rob a, Rob b, int width) { return sat_clamp(a - b, width); }

inline Rob sat_neg(Rob v, int /*width*/) { return -v; }

// Renders sentinels symbolically so CLI output is unambiguous at any width.
inline std::string rob_to_string(Rob v, int width) {
  if (v >= pinf(width)) return "PINF";
  if (v <= ninf(width)) return "NINF";
  return std::to_string(v);
}

} // namespace privmon

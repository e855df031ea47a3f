#pragma once

#include <bit>
#include <cstdint>

#include "laver/errors.hpp"

namespace laver {

// Element of the backwards table: a nonnegative integer below 2^62.
// Row values, periods and thresholds all fit this bound by construction.
using ElementId = std::uint64_t;

inline constexpr ElementId kElementLimit = ElementId{1} << 62;

// Largest star-table exponent: elements of the order-2^n table stay below
// the element limit for n <= 61.
inline constexpr int kMaxOrder = 61;

inline void check_element(ElementId p) {
  if (p >= kElementLimit) throw BoundError("element exceeds the 62-bit bound");
}

inline int bit_count(ElementId p) { return std::popcount(p); }

inline bool is_pow2(ElementId p) { return p != 0 && std::has_single_bit(p); }

// Largest power of two <= p; p >= 1.
inline ElementId top_bit(ElementId p) { return std::bit_floor(p); }

inline int floor_log2(ElementId p) { return std::bit_width(p) - 1; }

inline ElementId lowest_bit(ElementId p) { return p & (~p + 1); }

// Bitwise containment of binary expansions: every digit of a is <= the
// corresponding digit of b.
inline bool subset_leq(ElementId a, ElementId b) { return (a & ~b) == 0; }

}  // namespace laver

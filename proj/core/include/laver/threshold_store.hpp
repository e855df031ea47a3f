#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "laver/element.hpp"
#include "laver/errors.hpp"
#include "laver/row.hpp"

namespace laver {

// Dense threshold-compressed table: theta(p) for p = 2..max_p, one unsigned
// 32-bit value per element (theta(1) is undefined and not stored). Knowing
// the thresholds of the partial bit-sums of p is enough to rebuild its row,
// so this is a complete encoding of the product table on [0, max_p].
//
// Powers of two are stored with their defined value theta(2^m) = 2^{m-1}
// (the counting definition yields 0 there; the doubling convention pins it).
//
// A completed store is immutable-by-convention and safe for concurrent
// readers; only the sequential scan appends.
class ThresholdStore {
 public:
  ThresholdStore() = default;

  // Largest p covered; 1 for an empty store.
  ElementId max_p() const { return max_p_; }
  bool covers(ElementId p) const { return p >= 1 && p <= max_p_; }

  // theta(p) for p in [2, max_p].
  std::uint32_t theta(ElementId p) const {
    if (p < 2 || p > max_p_)
      throw DomainError("theta(" + std::to_string(p) +
                        "): element not covered by the store");
    return thetas_[static_cast<std::size_t>(p - 2)];
  }

  // Period of p in [1, max_p], derived from the theta chain of its partial
  // bit-sums (periods are not stored).
  std::uint64_t period(ElementId p) const;

  // Extends the store by one element (becomes theta(max_p + 1)).
  void append(std::uint32_t theta) {
    thetas_.push_back(theta);
    ++max_p_;
  }

  // Bit-exact file format ("LVRT"): see serialize().
  void save(const std::string& path) const;
  static ThresholdStore load(const std::string& path);

  // magic "LVRT" | version u32le = 1 | max_p u64le | theta(2..max_p) u32le
  // each | CRC-32 (IEEE) of everything preceding, u32le.
  std::vector<std::uint8_t> serialize() const;
  static ThresholdStore deserialize(std::span<const std::uint8_t> bytes);

  bool operator==(const ThresholdStore&) const = default;

 private:
  ElementId max_p_ = 1;
  std::vector<std::uint32_t> thetas_;
};

// Row of p rebuilt from the threshold chain; p in [1, max_p].
Row reconstruct_row(const ThresholdStore& store, ElementId p,
                    std::uint64_t max_entries = std::uint64_t{1} << 26);

}  // namespace laver

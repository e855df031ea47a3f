#pragma once

#include <cstdint>
#include <vector>

#include "laver/element.hpp"

namespace laver {

// Independent ground truth: the full star table of order 2^n built by the
// defining double induction (descending on p, ascending on q), with no
// threshold shortcuts. Quadratic memory; order <= 12.
class BruteTable {
 public:
  explicit BruteTable(int order);

  int order() const { return order_; }
  ElementId size() const { return size_; }

  // p, q in [1, 2^n].
  ElementId star(ElementId p, ElementId q) const {
    return cells_[static_cast<std::size_t>(p - 1) << order_ | (q - 1)];
  }

  // Backwards product for p, q in [0, 2^n).
  ElementId back(ElementId p, ElementId q) const {
    return size_ - star(size_ - p, size_ - q);
  }

  // Backwards period / threshold of p in [1, 2^n), read off the row.
  std::uint64_t back_period(ElementId p) const;
  std::uint64_t back_theta(ElementId p) const;

  // Star row period of p in [1, 2^n].
  std::uint64_t star_period(ElementId p) const;

 private:
  int order_;
  ElementId size_;
  std::vector<std::uint32_t> cells_;
};

}  // namespace laver

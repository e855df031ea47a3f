#pragma once

#include <cstddef>
#include <vector>

#include "laver/element.hpp"

namespace laver {

// One row of the backwards table: the values p*0 .. p*(pi(p)-1).
// Invariants: starts at 0, strictly increasing, ends at p-1, length a
// power of two. The full (periodic) row is values[q mod period].
struct Row {
  ElementId owner = 0;
  std::vector<ElementId> values;

  std::uint64_t period() const { return values.size(); }
  ElementId at(ElementId q) const { return values[q % values.size()]; }

  bool operator==(const Row&) const = default;
};

}  // namespace laver

#pragma once

#include <iosfwd>
#include <vector>

#include "laver/table.hpp"

namespace laver {

struct PlotPoint {
  ElementId x = 0;
  ElementId y = 0;
  bool operator==(const PlotPoint&) const = default;
};

// All strict containment pairs (a, b) with a strictly below b in the subset
// order and b <= max; b ascending, a ascending within b.
std::vector<PlotPoint> subset_order_points(ElementId max);

// All (p, p*q) for 1 <= p <= max, q < period(p).
std::vector<PlotPoint> table_points(Table& table, ElementId max);

// One "x,y" decimal line per point, LF endings, no header.
void write_points_csv(std::ostream& out, const std::vector<PlotPoint>& points);

}  // namespace laver

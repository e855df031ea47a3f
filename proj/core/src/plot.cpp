#include "laver/plot.hpp"

#include <ostream>

namespace laver {

std::vector<PlotPoint> subset_order_points(ElementId max) {
  if (max < 1) throw DomainError("subset-order plot requires max >= 1");
  check_element(max);
  std::vector<PlotPoint> points;
  for (ElementId b = 1; b <= max; ++b) {
    // Submasks of b in increasing order.
    for (ElementId a = 0;; a = (a - b) & b) {
      if (a != b) points.push_back({a, b});
      if (a == b) break;
    }
  }
  return points;
}

std::vector<PlotPoint> table_points(Table& table, ElementId max) {
  if (max < 1) throw DomainError("table plot requires max >= 1");
  check_element(max);
  std::vector<PlotPoint> points;
  for (ElementId p = 1; p <= max; ++p) {
    const Row row = table.row(p);
    for (ElementId v : row.values) points.push_back({p, v});
  }
  return points;
}

void write_points_csv(std::ostream& out, const std::vector<PlotPoint>& points) {
  for (const PlotPoint& pt : points)
    out << pt.x << ',' << pt.y << '\n';
}

}  // namespace laver

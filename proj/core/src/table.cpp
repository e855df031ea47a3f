#include "laver/table.hpp"

#include <algorithm>

#include "laver/scan.hpp"
#include "laver/threshold_chain.hpp"

namespace laver {

void Table::check_order(int order) const {
  if (order < 1 || order > kMaxOrder)
    throw DomainError("order exponent must be in [1, 61]");
}

void Table::ensure(ElementId p) {
  if (p > dense_.max_p()) extend_dense(p);
}

void Table::extend_dense(ElementId max_p) {
  if (max_p <= dense_.max_p()) return;
  if (max_p > cfg_.max_dense_elements)
    throw BoundError("element " + std::to_string(max_p) +
                     " is beyond the configured table cap of " +
                     std::to_string(cfg_.max_dense_elements) +
                     " (4 bytes per element)");
  for (ElementId p = dense_.max_p() + 1; p <= max_p; ++p)
    dense_.append(scan_theta(dense_, p));
}

std::uint64_t Table::theta_of(ElementId p) {
  ensure(p);
  return dense_.theta(p);
}

ElementId Table::product_of(ElementId p, ElementId q) {
  ensure(p);  // partial sums of p are at most p
  return chain_product(p, q, [this](ElementId x) { return theta_of(x); });
}

ElementId Table::back_prod(ElementId p, ElementId q) {
  check_element(p);
  check_element(q);
  if (p == 0) return q;
  if (q == 0) return 0;
  return product_of(p, q);
}

ElementId Table::star_prod(int order, ElementId p, ElementId q) {
  check_order(order);
  const ElementId n = ElementId{1} << order;
  if (p < 1 || p > n || q < 1 || q > n)
    throw DomainError("star operands must lie in [1, 2^order]");
  return n - back_prod(n - p, n - q);
}

ElementId Table::circ(ElementId p, ElementId q, Convention conv) {
  if (conv.kind == Convention::Kind::kBack) {
    if (p < 1 || q < 1)
      throw DomainError("back composition requires p, q >= 1");
    check_element(p);
    check_element(q);
    return back_prod(p, q - 1) + 1;
  }
  const int order = conv.order;
  check_order(order);
  const ElementId n = ElementId{1} << order;
  if (p < 1 || p > n || q < 1 || q > n)
    throw DomainError("star operands must lie in [1, 2^order]");
  const ElementId successor = q == n ? 1 : q + 1;
  const ElementId t = star_prod(order, p, successor);
  return t == 1 ? n : t - 1;
}

std::uint64_t Table::period(ElementId p) {
  if (p == 0) throw DomainError("period(0): the row of 0 has no finite period");
  check_element(p);
  ensure(p);
  return chain_period(p, [this](ElementId x) { return theta_of(x); });
}

std::uint64_t Table::threshold(ElementId p) {
  if (p < 2) throw DomainError("threshold is undefined for p < 2");
  check_element(p);
  return theta_of(p);
}

std::uint64_t Table::coperiod(ElementId p) {
  if (p == 0) throw DomainError("coperiod requires p >= 1");
  const ElementId shifted = p + (top_bit(p) << 1);
  check_element(shifted);
  return period(shifted);
}

std::uint64_t Table::cothreshold(ElementId p) {
  if (p == 0) throw DomainError("cothreshold requires p >= 1");
  const ElementId shifted = p + (top_bit(p) << 1);
  check_element(shifted);
  return threshold(shifted);
}

PeriodInfo Table::period_info(ElementId p) {
  PeriodInfo info;
  info.p = p;
  info.period = period(p);
  info.threshold = p >= 2 ? threshold(p) : 0;
  info.coperiod = coperiod(p);
  info.cothreshold = cothreshold(p);
  return info;
}

std::uint64_t Table::star_period(int order, ElementId p) {
  check_order(order);
  const ElementId n = ElementId{1} << order;
  if (p < 1 || p > n)
    throw DomainError("star element must lie in [1, 2^order]");
  return p == n ? n : period(n - p);
}

Row Table::row(ElementId p) {
  if (p == 0) throw DomainError("the row of 0 is not a finite Row");
  check_element(p);
  ensure(p);
  return chain_row(
      p, [this](ElementId x) { return theta_of(x); }, cfg_.max_row_entries);
}

Row Table::compute_row(ElementId p) {
  if (p == 0) throw DomainError("the row of 0 is not a finite Row");
  check_element(p);
  Row result;
  result.owner = p;
  auto& values = result.values;
  for (ElementId v = p - 1;; v = product_of(v, p - 1)) {
    if (values.size() >= cfg_.max_row_entries)
      throw BoundError("row of " + std::to_string(p) +
                       " exceeds the row materialization bound");
    values.push_back(v);
    if (v == 0) break;
  }
  std::reverse(values.begin(), values.end());
  return result;
}

ElementId Table::left_power(int order, ElementId x, std::uint64_t k) {
  check_order(order);
  const ElementId n = ElementId{1} << order;
  if (x < 1 || x > n)
    throw DomainError("left power base must lie in [1, 2^order]");
  if (k < 1) throw DomainError("left power exponent must be >= 1");
  // x^(k) is the star row of x-1 read at column k (with the row of 2^n
  // standing in for x = 1); rows repeat with period dividing 2^n.
  const ElementId base = x == 1 ? n : x - 1;
  const ElementId column = (k - 1) % n + 1;
  return star_prod(order, base, column);
}

}  // namespace laver

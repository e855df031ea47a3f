#pragma once

#include <cstdint>

#include "laver/element.hpp"
#include "laver/errors.hpp"
#include "laver/row.hpp"
#include "laver/threshold_store.hpp"

namespace laver {

// Which of the two equivalent presentations an operation should use:
// the backwards product * on nonnegative integers (order-independent), or
// the star product of the table of order 2^n.
struct Convention {
  enum class Kind { kBack, kStar };
  Kind kind = Kind::kBack;
  int order = 0;  // meaningful for kStar only

  static Convention back() { return {}; }
  static Convention star(int order) {
    if (order < 1 || order > kMaxOrder)
      throw DomainError("star convention requires 1 <= order <= 61");
    return {Kind::kStar, order};
  }
};

struct PeriodInfo {
  ElementId p = 0;
  std::uint64_t period = 0;
  std::uint64_t threshold = 0;  // 0 sentinel for p = 1 (undefined)
  std::uint64_t coperiod = 0;
  std::uint64_t cothreshold = 0;
};

struct TableConfig {
  // Hard cap on the scanned prefix: thresholds use 4 bytes per element, so
  // the default (2^25) keeps a table under 128 MiB.
  ElementId max_dense_elements = ElementId{1} << 25;
  // Largest row the materializing APIs will build.
  std::uint64_t max_row_entries = std::uint64_t{1} << 26;
};

// The computation engine: a threshold store grown lazily by the sequential
// scan, as far as operations require. Products, periods and rows are all
// resolved through the threshold chain; the recurrence for a new element
// only ever touches elements below it, so the scan needs no recursion.
//
// Reads are safe from concurrent threads only on a prefix that no call can
// extend; growing the prefix requires exclusive access.
class Table {
 public:
  Table() = default;
  explicit Table(TableConfig cfg) : cfg_(cfg) {}
  explicit Table(ThresholdStore store, TableConfig cfg = {})
      : cfg_(cfg), dense_(std::move(store)) {}

  // p*q. 0 is left-neutral and right-absorbing.
  ElementId back_prod(ElementId p, ElementId q);

  // p (star_n) q for p, q in [1, 2^n], via the backwards duality
  // p (star_n) q = 2^n - (2^n - p)*(2^n - q).
  ElementId star_prod(int order, ElementId p, ElementId q);

  // Semigroup product: back p.q = p*(q-1)+1; star (p.q)+1 = p(star)(q+1)
  // taken cyclically in [1, 2^n].
  ElementId circ(ElementId p, ElementId q, Convention conv);

  std::uint64_t period(ElementId p);     // p >= 1
  std::uint64_t threshold(ElementId p);  // p >= 2
  std::uint64_t coperiod(ElementId p);   // period(p + 2^n), smallest 2^n > p
  std::uint64_t cothreshold(ElementId p);
  PeriodInfo period_info(ElementId p);

  // Period of the star row of p in the order-2^n table.
  std::uint64_t star_period(int order, ElementId p);

  // Row of p through the threshold chain.
  Row row(ElementId p);

  // Row of p through the descending recurrence v <- v*(p-1), which never
  // consults thresholds of p's own partial sums. Oracle partner of
  // reconstruct_row / row.
  Row compute_row(ElementId p);

  // k-th left power x, x*x, (x*x)*x, ... in the order-2^n table; k >= 1.
  ElementId left_power(int order, ElementId x, std::uint64_t k);

  // Extends the scanned prefix to cover [2, max_p]; operations do this on
  // their own as needed, subject to the configured cap.
  void extend_dense(ElementId max_p);

  const ThresholdStore& dense() const { return dense_; }
  const TableConfig& config() const { return cfg_; }

 private:
  std::uint64_t theta_of(ElementId p);
  ElementId product_of(ElementId p, ElementId q);
  void ensure(ElementId p);
  void check_order(int order) const;

  TableConfig cfg_;
  ThresholdStore dense_;
};

}  // namespace laver

#pragma once

#include <cstddef>
#include <list>
#include <unordered_map>

#include "laver/row.hpp"
#include "laver/threshold_store.hpp"

namespace laver {

// Least-recently-used cache of materialized rows, bounded by a byte budget.
// Not internally synchronized: readers sharing a cache must partition it or
// lock around lookups.
class RowCache {
 public:
  explicit RowCache(std::size_t budget_bytes = std::size_t{256} << 20)
      : budget_(budget_bytes) {}

  // Returns nullptr on miss; bumps the entry to most-recently-used on hit.
  const Row* find(ElementId p);

  // Takes ownership of the row and evicts LRU entries down to the budget.
  // The returned reference stays valid until the next insert.
  const Row& insert(Row row);

  std::size_t size_bytes() const { return bytes_; }
  std::size_t entries() const { return index_.size(); }
  void clear();

 private:
  static std::size_t cost(const Row& row) {
    return row.values.size() * sizeof(ElementId) + 64;
  }

  std::list<Row> lru_;  // front = most recently used
  std::unordered_map<ElementId, std::list<Row>::iterator> index_;
  std::size_t bytes_ = 0;
  std::size_t budget_;
};

// Column lookup through the cache: equals back_prod(p, q) for covered p.
ElementId lookup_product(const ThresholdStore& store, RowCache& cache,
                         ElementId p, ElementId q);

}  // namespace laver

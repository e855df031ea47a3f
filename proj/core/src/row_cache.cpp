#include "laver/row_cache.hpp"

namespace laver {

const Row* RowCache::find(ElementId p) {
  auto it = index_.find(p);
  if (it == index_.end()) return nullptr;
  lru_.splice(lru_.begin(), lru_, it->second);
  return &*it->second;
}

const Row& RowCache::insert(Row row) {
  const ElementId p = row.owner;
  if (auto it = index_.find(p); it != index_.end()) {
    lru_.splice(lru_.begin(), lru_, it->second);
    return *it->second;
  }
  bytes_ += cost(row);
  lru_.push_front(std::move(row));
  index_[p] = lru_.begin();
  while (bytes_ > budget_ && lru_.size() > 1) {
    bytes_ -= cost(lru_.back());
    index_.erase(lru_.back().owner);
    lru_.pop_back();
  }
  return lru_.front();
}

void RowCache::clear() {
  lru_.clear();
  index_.clear();
  bytes_ = 0;
}

ElementId lookup_product(const ThresholdStore& store, RowCache& cache,
                         ElementId p, ElementId q) {
  if (p == 0) return q;
  if (const Row* hit = cache.find(p)) return hit->at(q);
  return cache.insert(reconstruct_row(store, p)).at(q);
}

}  // namespace laver

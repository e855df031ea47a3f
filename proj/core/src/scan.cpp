#include "laver/scan.hpp"

#include <cassert>

#include "laver/threshold_chain.hpp"

namespace laver {

std::uint32_t scan_theta(const ThresholdStore& store, ElementId p) {
  const ElementId top = top_bit(p);
  const auto theta = [&store](ElementId x) {
    return std::uint64_t{store.theta(x)};
  };
  std::uint64_t above = 0;
  for (ElementId v = p - 1; v != 0; v = chain_product(v, p - 1, theta)) {
    if (v >= top) ++above;
  }
  if (above == 0) {
    // Only powers of two have no row entry at or above their top bit; their
    // threshold is pinned by the doubling convention.
    assert(is_pow2(p));
    return static_cast<std::uint32_t>(top >> 1);
  }
  return static_cast<std::uint32_t>(above);
}

ThresholdStore scan(ElementId max_p, const ScanOptions& opts) {
  return scan_resume(ThresholdStore{}, max_p, opts);
}

ThresholdStore scan_resume(ThresholdStore store, ElementId max_p,
                           const ScanOptions& opts) {
  if (max_p < 2) throw DomainError("scan: max_p must be at least 2");
  if (max_p >= (ElementId{1} << 32))
    throw BoundError("scan: dense stores are limited to max_p < 2^32");
  std::uint64_t since_checkpoint = 0;
  for (ElementId p = store.max_p() + 1; p <= max_p; ++p) {
    store.append(scan_theta(store, p));
    if (++since_checkpoint == opts.checkpoint_every) {
      since_checkpoint = 0;
      if (!opts.checkpoint_path.empty()) store.save(opts.checkpoint_path);
      if (opts.progress) opts.progress(p, max_p);
    }
  }
  return store;
}

}  // namespace laver

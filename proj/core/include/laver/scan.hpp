#pragma once

#include <functional>
#include <string>

#include "laver/threshold_store.hpp"

namespace laver {

struct ScanOptions {
  // When nonempty, the store is checkpointed to this path (atomically,
  // via rename) every `checkpoint_every` processed elements.
  std::string checkpoint_path;
  std::uint64_t checkpoint_every = std::uint64_t{1} << 16;
  // Called with (elements done, target) at checkpoint cadence.
  std::function<void(ElementId, ElementId)> progress;
};

// theta of the next element: runs the descending row recurrence
//   v_1 = p-1,  v_{k+1} = v_k * (p-1)   (stop at 0)
// with every inner product resolved through the threshold chain of the
// already-scanned prefix, counting the entries at or above top_bit(p).
// Requires store.max_p() >= p-1.
std::uint32_t scan_theta(const ThresholdStore& store, ElementId p);

// Sequential scan: thresholds for 2..max_p in increasing order.
ThresholdStore scan(ElementId max_p, const ScanOptions& opts = {});

// Continues a previously scanned (or checkpointed) prefix. A resumed scan
// is element-for-element identical to a fresh one.
ThresholdStore scan_resume(ThresholdStore store, ElementId max_p,
                           const ScanOptions& opts = {});

}  // namespace laver

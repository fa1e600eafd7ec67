#pragma once

#include <cstdint>

#include "latticegen/path.hpp"

namespace latticegen {

/// Bookkeeping of one sampler call across its restarts.
struct RunStats {
  std::uint64_t restarts = 0;
  /// Step accesses spent in attempts that ended in a rejection.
  std::uint64_t failed_accesses = 0;
};

/// Runs `attempt(path)` from the empty path until it succeeds. Rejected
/// attempts restart from scratch; the path meter keeps accumulating.
template <class Attempt>
Path retry_until_success(Model model, Attempt&& attempt, RunStats* stats) {
  Path p(model);
  while (!attempt(p)) {
    if (stats != nullptr) {
      ++stats->restarts;
      stats->failed_accesses = p.meter().total();
    }
    p.clear();
  }
  return p;
}

}  // namespace latticegen

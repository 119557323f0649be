#pragma once

#include <cstddef>
#include <vector>

namespace paretocheck {

/// Mixed-radix odometer over one choice per position, last position
/// fastest, so searches visit selections in a reproducible order.
/// visit returns true to stop early; the return value reports a stop.
template <typename Visit>
bool for_each_selection(const std::vector<std::size_t>& radix, Visit visit) {
  std::vector<std::size_t> sel(radix.size(), 0);
  for (;;) {
    if (visit(static_cast<const std::vector<std::size_t>&>(sel))) return true;
    std::size_t pos = radix.size();
    for (;;) {
      if (pos == 0) return false;
      --pos;
      if (++sel[pos] < radix[pos]) break;
      sel[pos] = 0;
    }
  }
}

}  // namespace paretocheck

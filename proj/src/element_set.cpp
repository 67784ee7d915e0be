#include "rlat/element_set.hpp"

namespace rlat {

bool report_order_less(ElementSet a, ElementSet b) {
  if (a.count() != b.count()) return a.count() < b.count();
  // Sorted member lists compare lexicographically at the lowest differing bit:
  // whichever set owns that bit has the smaller member there.
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

}  // namespace rlat

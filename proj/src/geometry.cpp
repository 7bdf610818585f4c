#include "mfill/geometry.hpp"

namespace mfill {

Rat twice_signed_area(const std::vector<Vec2>& ring) {
  Rat acc = 0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) acc += cross(ring[i], ring[(i + 1) % n]);
  return acc;
}

}  // namespace mfill

#include "gq/projective.hpp"

#include <algorithm>
#include <stdexcept>

namespace gq {

int pack(const Coords& x) {
  int key = 0;
  for (int i = 0; i < kDimension; ++i) key = (key << 2) | x(i).code();
  return key;
}

Coords unpack(int key) {
  Coords x;
  for (int i = kDimension - 1; i >= 0; --i) {
    x(i) = GF4(key & 3);
    key >>= 2;
  }
  return x;
}

int pivot(const Coords& x) {
  for (int i = 0; i < kDimension; ++i)
    if (!x(i).is_zero()) return i;
  return -1;
}

Coords normalize(const Coords& x) {
  const int lead = pivot(x);
  if (lead < 0) throw std::invalid_argument("normalize: the zero vector is not a projective point");
  return x * x(lead).inverse();
}

ProjectivePoint::ProjectivePoint(const Coords& representative) : coords_(normalize(representative)) {}

bool canonical_less(const Coords& a, const Coords& b) {
  const int pa = pivot(a), pb = pivot(b);
  if (pa != pb) return pa < pb;
  return pack(a) < pack(b);
}

std::vector<ProjectivePoint> enumerate_projective_points() {
  std::vector<ProjectivePoint> points;
  points.reserve((kTupleCount - 1) / 3);
  for (int lead = 0; lead < kDimension; ++lead) {
    // Tuples with pivot `lead` equal to 1: zeros before, free codes after.
    const int tail_bits = 2 * (kDimension - 1 - lead);
    for (int tail = 0; tail < (1 << tail_bits); ++tail) {
      const int key = (1 << tail_bits) | tail;
      points.emplace_back(unpack(key));
    }
  }
  return points;
}

}  // namespace gq

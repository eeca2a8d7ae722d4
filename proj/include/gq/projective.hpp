#pragma once

#include <compare>
#include <vector>

#include <Eigen/Core>

#include "gq/gf4.hpp"

namespace gq {

inline constexpr int kDimension = 6;

template <typename Scalar>
using Vector6 = Eigen::Matrix<Scalar, kDimension, 1>;

using Coords = Vector6<GF4>;

/// Number of distinct 6-tuples over GF(4); also one past the largest packed key.
inline constexpr int kTupleCount = 1 << (2 * kDimension);

/// Packs a coordinate vector into 12 bits, coordinate 0 in the high bits.
int pack(const Coords& x);
Coords unpack(int key);

/// Index of the first nonzero coordinate, or -1 for the zero vector.
int pivot(const Coords& x);

/// Scales x so that its first nonzero coordinate is 1. Throws std::invalid_argument
/// for the zero vector.
Coords normalize(const Coords& x);

/// A point of PG(5,4) held in its normal form.
class ProjectivePoint {
 public:
  /// Normalizes any nonzero representative.
  explicit ProjectivePoint(const Coords& representative);

  const Coords& coords() const { return coords_; }
  int key() const { return pack(coords_); }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.key() == b.key();
  }

 private:
  Coords coords_;
};

/// Canonical order: pivot position ascending, then codes lexicographically.
/// Puts (1,0,0,0,0,0) first.
bool canonical_less(const Coords& a, const Coords& b);

/// All (4^6 - 1) / 3 = 1365 points of PG(5,4) in canonical order.
std::vector<ProjectivePoint> enumerate_projective_points();

}  // namespace gq

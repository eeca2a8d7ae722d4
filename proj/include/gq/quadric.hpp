#pragma once

#include <Eigen/Core>

#include "gq/projective.hpp"

namespace gq {

/// Quadratic form Q(x) = sum_{i <= j} c_ij x_i x_j on GF(4)^6, stored as the
/// upper-triangular coefficient matrix so that Q(x) = x^T C x.
class QuadraticForm {
 public:
  using CoefficientMatrix = Eigen::Matrix<GF4, kDimension, kDimension>;

  /// Lower-triangular entries of `coefficients` are ignored.
  explicit QuadraticForm(const CoefficientMatrix& coefficients);

  /// x0 x1 + x2 x3 + x4^2 + x4 x5 + w x5^2: a hyperbolic pair sum plus the
  /// anisotropic binary form t^2 + t + w (irreducible since trace(w) = 1).
  static QuadraticForm elliptic();

  const CoefficientMatrix& coefficients() const { return coefficients_; }

  GF4 operator()(const Coords& x) const;

  /// Polar form B(x, y) = Q(x + y) + Q(x) + Q(y).
  GF4 polar(const Coords& x, const Coords& y) const;

  /// Gram matrix of the polar form, C + C^T; symmetric with zero diagonal.
  CoefficientMatrix polar_matrix() const;

 private:
  CoefficientMatrix coefficients_;
};

inline GF4 evaluate_form(const QuadraticForm& form, const ProjectivePoint& x) {
  return form(x.coords());
}

inline GF4 polarize(const QuadraticForm& form, const ProjectivePoint& x, const ProjectivePoint& y) {
  return form.polar(x.coords(), y.coords());
}

}  // namespace gq

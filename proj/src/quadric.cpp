#include "gq/quadric.hpp"

namespace gq {

QuadraticForm::QuadraticForm(const CoefficientMatrix& coefficients)
    : coefficients_(coefficients.triangularView<Eigen::Upper>()) {}

QuadraticForm QuadraticForm::elliptic() {
  CoefficientMatrix c = CoefficientMatrix::Constant(GF4::zero());
  c(0, 1) = GF4::one();
  c(2, 3) = GF4::one();
  c(4, 4) = GF4::one();
  c(4, 5) = GF4::one();
  c(5, 5) = GF4::omega();
  return QuadraticForm(c);
}

GF4 QuadraticForm::operator()(const Coords& x) const {
  return (x.transpose() * coefficients_ * x)(0, 0);
}

GF4 QuadraticForm::polar(const Coords& x, const Coords& y) const {
  const Coords sum = x + y;
  return (*this)(sum) + (*this)(x) + (*this)(y);
}

QuadraticForm::CoefficientMatrix QuadraticForm::polar_matrix() const {
  return coefficients_ + coefficients_.transpose();
}

}  // namespace gq

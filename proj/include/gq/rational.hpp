#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

// Eigen 3.4 dense types declare const_iterator as void, which trips Boost's
// byte-container detection during implicit-conversion checks.
namespace boost::multiprecision::detail {
template <typename S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace gq {

/// Arbitrary-precision integers and reduced fractions. Expression templates
/// are disabled so the types behave as plain values inside Eigen.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = MatrixX<Rational>;
using RationalVector = VectorX<Rational>;

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline std::string to_string(const Rational& x) { return x.str(); }

BigInt binomial(int n, int k);

/// Raised when exact elimination meets a singular coefficient matrix.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solves A X = B exactly by Gauss-Jordan elimination with nonzero pivoting.
/// A must be square and nonsingular.
template <typename Scalar>
MatrixX<Scalar> solve_exact(MatrixX<Scalar> a, MatrixX<Scalar> b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve_exact: dimension mismatch");
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) throw SingularSystemError("solve_exact: singular matrix (column " + std::to_string(col) + ")");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      b.row(pivot).swap(b.row(col));
    }
    const Scalar inv = Scalar(1) / a(col, col);
    a.row(col) *= inv;
    b.row(col) *= inv;
    for (Eigen::Index row = 0; row < n; ++row) {
      if (row == col || a(row, col) == Scalar(0)) continue;
      const Scalar factor = a(row, col);
      a.row(row) -= factor * a.row(col);
      b.row(row) -= factor * b.row(col);
    }
  }
  return b;
}

}  // namespace gq

namespace Eigen {

template <>
struct NumTraits<gq::Rational> : GenericNumTraits<gq::Rational> {
  using Real = gq::Rational;
  using NonInteger = gq::Rational;
  using Nested = gq::Rational;
  using Literal = gq::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

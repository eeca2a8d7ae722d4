#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>

#include <Eigen/Core>

namespace gq {

/// Raised when an operation has no value in GF(4), i.e. inverting zero.
class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

// Tables generated from t^2 + t + 1 over GF(2). Codes: 0, 1, w = 2, w^2 = 3,
// with code bit 1 the coefficient of w.
constexpr std::array<std::array<std::uint8_t, 4>, 4> make_mul_table() {
  std::array<std::array<std::uint8_t, 4>, 4> table{};
  for (unsigned a = 0; a < 4; ++a) {
    for (unsigned b = 0; b < 4; ++b) {
      // (a0 + a1 t)(b0 + b1 t) reduced with t^2 = t + 1.
      const unsigned a0 = a & 1u, a1 = a >> 1, b0 = b & 1u, b1 = b >> 1;
      const unsigned c0 = (a0 & b0) ^ (a1 & b1);
      const unsigned c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
      table[a][b] = static_cast<std::uint8_t>(c0 | (c1 << 1));
    }
  }
  return table;
}

inline constexpr auto kMul = make_mul_table();
inline constexpr std::array<std::uint8_t, 4> kInv = {0, 1, 3, 2};

}  // namespace detail

/// An element of GF(4) = {0, 1, w, w^2}, w a root of t^2 + t + 1.
///
/// Usable as an Eigen scalar; the coordinate vectors of the projective
/// geometry are `Eigen::Matrix<GF4, 6, 1>`.
class GF4 {
 public:
  constexpr GF4() = default;
  constexpr explicit GF4(int code) : code_(static_cast<std::uint8_t>(code & 3)) {}

  static constexpr GF4 zero() { return GF4(0); }
  static constexpr GF4 one() { return GF4(1); }
  static constexpr GF4 omega() { return GF4(2); }
  static constexpr GF4 omega2() { return GF4(3); }

  constexpr int code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr GF4 operator+(GF4 a, GF4 b) { return GF4(a.code_ ^ b.code_); }
  // Characteristic 2: subtraction is addition.
  friend constexpr GF4 operator-(GF4 a, GF4 b) { return a + b; }
  friend constexpr GF4 operator-(GF4 a) { return a; }
  friend constexpr GF4 operator*(GF4 a, GF4 b) { return GF4(detail::kMul[a.code_][b.code_]); }
  friend GF4 operator/(GF4 a, GF4 b) { return a * b.inverse(); }

  GF4& operator+=(GF4 b) { return *this = *this + b; }
  GF4& operator-=(GF4 b) { return *this = *this - b; }
  GF4& operator*=(GF4 b) { return *this = *this * b; }
  GF4& operator/=(GF4 b) { return *this = *this / b; }

  friend constexpr bool operator==(GF4 a, GF4 b) { return a.code_ == b.code_; }
  friend constexpr auto operator<=>(GF4 a, GF4 b) { return a.code_ <=> b.code_; }

  GF4 inverse() const {
    if (code_ == 0) throw FieldError("GF(4): zero has no multiplicative inverse");
    return GF4(detail::kInv[code_]);
  }

  /// Absolute trace a + a^2 down to GF(2); always 0 or 1.
  constexpr GF4 trace() const { return *this + *this * *this; }

  static constexpr std::array<GF4, 4> elements() { return {GF4(0), GF4(1), GF4(2), GF4(3)}; }

 private:
  std::uint8_t code_ = 0;
};

inline constexpr GF4 ff_add(GF4 a, GF4 b) { return a + b; }
inline constexpr GF4 ff_mul(GF4 a, GF4 b) { return a * b; }
inline GF4 ff_inv(GF4 a) { return a.inverse(); }
inline constexpr GF4 ff_trace(GF4 a) { return a.trace(); }

std::ostream& operator<<(std::ostream& os, GF4 a);

}  // namespace gq

namespace Eigen {

template <>
struct NumTraits<gq::GF4> : GenericNumTraits<gq::GF4> {
  using Real = gq::GF4;
  using NonInteger = gq::GF4;
  using Nested = gq::GF4;
  using Literal = gq::GF4;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1
  };
  static inline gq::GF4 epsilon() { return gq::GF4(0); }
  static inline gq::GF4 dummy_precision() { return gq::GF4(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gq/rational.hpp"

namespace gq {

/// Linear system over exact rationals whose rows are, for each level i,
///   sum_{j >= i} C(j, i) x_j = C(window, i) * lambda_i,
/// optionally extended by rows pinning single unknowns.
struct CountingSystem {
  RationalMatrix coefficients;
  RationalVector rhs;
  std::vector<std::string> unknowns;

  /// Unknowns x_0..x_top named `<prefix>0`.., one row per entry of `lambdas`.
  static CountingSystem binomial_window(const std::string& prefix, int window, int top,
                                        std::span<const std::int64_t> lambdas);

  /// Appends the row x_unknown = value.
  CountingSystem with_fixed(int unknown, const Rational& value) const;

  int unknown_count() const { return static_cast<int>(coefficients.cols()); }
  int equation_count() const { return static_cast<int>(coefficients.rows()); }

  RationalVector residual(const RationalVector& x) const { return coefficients * x - rhs; }
};

/// Solution set of a CountingSystem written as
///   x = affine * [1, free_0, free_1, ...]^T,
/// one row per unknown; rows of free unknowns are unit rows.
struct AffineSolutionFamily {
  std::vector<int> free;
  std::vector<int> bound;
  RationalMatrix affine;

  /// Bound unknowns at all-zero free values.
  RationalVector particular() const;
  /// Coefficients of free[k] in the bound unknowns.
  RationalVector basis(std::size_t k) const;
  /// Full unknown vector for the given free values.
  RationalVector evaluate(const RationalVector& free_values) const;
  /// Composes with free = parametrization * [1, params...]^T; the result has
  /// one row per unknown and one column per homogeneous parameter.
  RationalMatrix substitute(const RationalMatrix& parametrization) const;
};

/// Exact elimination with the given unknowns left free. Throws
/// SingularSystemError if the remaining unknowns are not uniquely determined.
AffineSolutionFamily solve_counting_system(const CountingSystem& system, std::vector<int> free);

/// coefficients * affine - [rhs | 0]; identically zero for a correct family.
RationalMatrix family_residual(const CountingSystem& system, const AffineSolutionFamily& family);

/// sum_j coefficients_j x_j  (=, >=, <=, = mod modulus)  bound.
struct LinearConstraint {
  enum class Relation { Equal, AtLeast, AtMost, Congruent };

  RationalVector coefficients;
  Relation relation = Relation::Equal;
  Rational bound;
  BigInt modulus = 0;
  std::string label;

  bool holds(const RationalVector& x) const;

  static LinearConstraint equal(int unknowns, int index, std::int64_t value, std::string label = {});
  static LinearConstraint at_least(int unknowns, int index, std::int64_t value, std::string label = {});
  static LinearConstraint at_most(int unknowns, int index, std::int64_t value, std::string label = {});
  static LinearConstraint congruent(int unknowns, int index, std::int64_t residue, std::int64_t modulus,
                                    std::string label = {});
};

/// Inclusive integer ranges, one per free unknown.
struct IntegerBox {
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;

  static IntegerBox uniform(std::size_t dimensions, std::int64_t low, std::int64_t high) {
    return {std::vector<std::pair<std::int64_t, std::int64_t>>(dimensions, {low, high})};
  }
};

using Profile = std::vector<std::int64_t>;

/// Integer free values in the box (lexicographic order, first free unknown
/// outermost) for which every bound unknown is a non-negative integer and
/// every constraint holds; each hit is returned as the full unknown vector.
std::vector<Profile> enumerate_feasible_profiles(const AffineSolutionFamily& family,
                                                 std::span<const LinearConstraint> constraints,
                                                 const IntegerBox& box);

/// Block counts through subsets of the five-set G(r) & A: unknowns n0..n5,
/// lambda = (204, 60, 15, 3).
CountingSystem profile_system(std::span<const std::int64_t> lambdas = {});
/// Counts around a point a of A_far: unknowns m0..m4, lambda' = (60, 15, 3).
CountingSystem derived_system(std::span<const std::int64_t> lambdas = {});

inline constexpr std::int64_t kProfileLambdas[] = {204, 60, 15, 3};
inline constexpr std::int64_t kDerivedLambdas[] = {60, 15, 3};

/// A solution family stated with integer entries, to compare a computed one against.
struct ReferenceFamily {
  std::string id;
  CountingSystem system;
  std::vector<int> free;
  std::vector<int> bound;
  std::vector<std::int64_t> particular;
  std::vector<std::vector<std::int64_t>> basis;  // one vector per free unknown
};

/// n2..n5 = (660, -990, 720, -186) + n0 (-10, 20, -15, 4) + n1 (-4, 6, -4, 1).
ReferenceFamily profile_family_reference();
/// With n5 = 1: n0..n3 = (28, 75, 80, 20) + n4 (1, -4, 6, -4).
ReferenceFamily restricted_profile_family_reference();
/// m0..m2 = (15, 15, 30) + m3 (-1, 3, -3) + m4 (-3, 8, -6).
ReferenceFamily derived_family_reference();

/// Entry-by-entry comparison; on mismatch `where` names the first difference.
bool matches_reference(const AffineSolutionFamily& family, const ReferenceFamily& reference,
                       std::string* where = nullptr);

}  // namespace gq

#include "gq/counting.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gq {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

CountingSystem CountingSystem::binomial_window(const std::string& prefix, int window, int top,
                                               std::span<const std::int64_t> lambdas) {
  CountingSystem system;
  const auto rows = static_cast<Eigen::Index>(lambdas.size());
  system.coefficients = RationalMatrix::Constant(rows, top + 1, Rational(0));
  system.rhs = RationalVector::Constant(rows, Rational(0));
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (int j = static_cast<int>(i); j <= top; ++j)
      system.coefficients(i, j) = Rational(binomial(j, static_cast<int>(i)));
    system.rhs(i) = Rational(binomial(window, static_cast<int>(i)) * lambdas[i]);
  }
  for (int j = 0; j <= top; ++j) system.unknowns.push_back(prefix + std::to_string(j));
  return system;
}

CountingSystem CountingSystem::with_fixed(int unknown, const Rational& value) const {
  if (unknown < 0 || unknown >= unknown_count()) throw std::out_of_range("with_fixed: no such unknown");
  CountingSystem out = *this;
  const Eigen::Index row = equation_count();
  out.coefficients.conservativeResize(row + 1, Eigen::NoChange);
  out.coefficients.row(row).setConstant(Rational(0));
  out.coefficients(row, unknown) = Rational(1);
  out.rhs.conservativeResize(row + 1);
  out.rhs(row) = value;
  return out;
}

RationalVector AffineSolutionFamily::particular() const {
  RationalVector out(static_cast<Eigen::Index>(bound.size()));
  for (std::size_t i = 0; i < bound.size(); ++i) out(i) = affine(bound[i], 0);
  return out;
}

RationalVector AffineSolutionFamily::basis(std::size_t k) const {
  RationalVector out(static_cast<Eigen::Index>(bound.size()));
  for (std::size_t i = 0; i < bound.size(); ++i) out(i) = affine(bound[i], static_cast<Eigen::Index>(k + 1));
  return out;
}

RationalVector AffineSolutionFamily::evaluate(const RationalVector& free_values) const {
  if (free_values.size() != static_cast<Eigen::Index>(free.size()))
    throw std::invalid_argument("evaluate: wrong number of free values");
  RationalVector homogeneous(free_values.size() + 1);
  homogeneous << Rational(1), free_values;
  return affine * homogeneous;
}

RationalMatrix AffineSolutionFamily::substitute(const RationalMatrix& parametrization) const {
  if (parametrization.rows() != static_cast<Eigen::Index>(free.size()))
    throw std::invalid_argument("substitute: one parametrization row per free unknown is required");
  RationalMatrix lifted = RationalMatrix::Constant(parametrization.rows() + 1, parametrization.cols(), Rational(0));
  lifted(0, 0) = Rational(1);
  lifted.bottomRows(parametrization.rows()) = parametrization;
  return affine * lifted;
}

AffineSolutionFamily solve_counting_system(const CountingSystem& system, std::vector<int> free) {
  const int n = system.unknown_count();
  std::sort(free.begin(), free.end());
  if (std::adjacent_find(free.begin(), free.end()) != free.end() ||
      std::any_of(free.begin(), free.end(), [&](int f) { return f < 0 || f >= n; }))
    throw std::invalid_argument("solve_counting_system: free unknowns must be distinct valid indices");

  AffineSolutionFamily family;
  family.free = free;
  for (int j = 0; j < n; ++j)
    if (!std::binary_search(free.begin(), free.end(), j)) family.bound.push_back(j);
  if (static_cast<int>(family.bound.size()) != system.equation_count())
    throw SingularSystemError("solve_counting_system: " + std::to_string(family.bound.size()) +
                              " bound unknowns against " + std::to_string(system.equation_count()) + " equations");

  const auto rows = static_cast<Eigen::Index>(system.equation_count());
  const auto nfree = static_cast<Eigen::Index>(free.size());
  RationalMatrix bound_block(rows, rows);
  for (Eigen::Index c = 0; c < rows; ++c) bound_block.col(c) = system.coefficients.col(family.bound[c]);
  // Right-hand sides: [rhs | -A_free], so the solution is [particular | basis].
  RationalMatrix rhs(rows, nfree + 1);
  rhs.col(0) = system.rhs;
  for (Eigen::Index k = 0; k < nfree; ++k) rhs.col(k + 1) = -system.coefficients.col(free[k]);
  const RationalMatrix solved = solve_exact<Rational>(bound_block, rhs);

  family.affine = RationalMatrix::Constant(n, nfree + 1, Rational(0));
  for (Eigen::Index c = 0; c < rows; ++c) family.affine.row(family.bound[c]) = solved.row(c);
  for (Eigen::Index k = 0; k < nfree; ++k) family.affine(free[k], k + 1) = Rational(1);
  return family;
}

RationalMatrix family_residual(const CountingSystem& system, const AffineSolutionFamily& family) {
  RationalMatrix target = RationalMatrix::Constant(system.equation_count(), family.affine.cols(), Rational(0));
  target.col(0) = system.rhs;
  return system.coefficients * family.affine - target;
}

bool LinearConstraint::holds(const RationalVector& x) const {
  const Rational value = coefficients.dot(x);
  switch (relation) {
    case Relation::Equal:
      return value == bound;
    case Relation::AtLeast:
      return value >= bound;
    case Relation::AtMost:
      return value <= bound;
    case Relation::Congruent: {
      const Rational diff = value - bound;
      if (!is_integer(diff) || modulus == 0) return false;
      return numerator(diff) % modulus == 0;
    }
  }
  return false;
}

namespace {

LinearConstraint single(int unknowns, int index, LinearConstraint::Relation relation, std::int64_t value,
                        std::string label) {
  LinearConstraint c;
  c.coefficients = RationalVector::Constant(unknowns, Rational(0));
  c.coefficients(index) = Rational(1);
  c.relation = relation;
  c.bound = Rational(value);
  c.label = std::move(label);
  return c;
}

}  // namespace

LinearConstraint LinearConstraint::equal(int unknowns, int index, std::int64_t value, std::string label) {
  return single(unknowns, index, Relation::Equal, value, std::move(label));
}
LinearConstraint LinearConstraint::at_least(int unknowns, int index, std::int64_t value, std::string label) {
  return single(unknowns, index, Relation::AtLeast, value, std::move(label));
}
LinearConstraint LinearConstraint::at_most(int unknowns, int index, std::int64_t value, std::string label) {
  return single(unknowns, index, Relation::AtMost, value, std::move(label));
}
LinearConstraint LinearConstraint::congruent(int unknowns, int index, std::int64_t residue, std::int64_t modulus,
                                             std::string label) {
  auto c = single(unknowns, index, Relation::Congruent, residue, std::move(label));
  c.modulus = modulus;
  return c;
}

std::vector<Profile> enumerate_feasible_profiles(const AffineSolutionFamily& family,
                                                 std::span<const LinearConstraint> constraints,
                                                 const IntegerBox& box) {
  const std::size_t dims = family.free.size();
  if (box.ranges.size() != dims) throw std::invalid_argument("enumerate_feasible_profiles: box dimension mismatch");
  std::vector<Profile> hits;
  for (const auto& [lo, hi] : box.ranges)
    if (lo > hi) return hits;

  // Integer image of the family: x = scaled * [1, free...] / denominator.
  BigInt denominator = 1;
  for (Eigen::Index i = 0; i < family.affine.size(); ++i)
    denominator = boost::multiprecision::lcm(denominator, boost::multiprecision::denominator(family.affine(i)));
  const Eigen::Index n = family.affine.rows();
  const auto cols = static_cast<std::size_t>(family.affine.cols());
  const BigInt limit = BigInt(1) << 40;
  std::int64_t scale = 0;
  std::vector<std::int64_t> scaled(static_cast<std::size_t>(n) * cols);
  bool small = denominator < limit;
  for (const auto& [lo, hi] : box.ranges) small = small && std::max(std::abs(lo), std::abs(hi)) < (1 << 20);
  if (small) {
    scale = static_cast<std::int64_t>(denominator);
    for (Eigen::Index i = 0; i < n && small; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        const BigInt v = boost::multiprecision::numerator(family.affine(i, static_cast<Eigen::Index>(j))) *
                         (denominator / boost::multiprecision::denominator(family.affine(i, static_cast<Eigen::Index>(j))));
        if (abs(v) >= limit) {
          small = false;
          break;
        }
        scaled[static_cast<std::size_t>(i) * cols + j] = static_cast<std::int64_t>(v);
      }
  }

  std::vector<std::int64_t> current(dims);
  for (std::size_t k = 0; k < dims; ++k) current[k] = box.ranges[k].first;
  RationalVector free_values(static_cast<Eigen::Index>(dims));
  Profile candidate(static_cast<std::size_t>(n));
  while (true) {
    bool integral = true;
    if (small) {
      for (Eigen::Index i = 0; i < n && integral; ++i) {
        const std::int64_t* row = &scaled[static_cast<std::size_t>(i) * cols];
        std::int64_t value = row[0];
        for (std::size_t k = 0; k < dims; ++k) value += row[k + 1] * current[k];
        integral = value >= 0 && value % scale == 0;
        candidate[static_cast<std::size_t>(i)] = value / scale;
      }
    } else {
      for (std::size_t k = 0; k < dims; ++k) free_values(static_cast<Eigen::Index>(k)) = Rational(current[k]);
      const RationalVector x = family.evaluate(free_values);
      for (Eigen::Index i = 0; i < n && integral; ++i) {
        integral = is_integer(x(i)) && x(i) >= 0;
        if (integral) candidate[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(numerator(x(i)));
      }
    }
    if (integral) {
      RationalVector x(n);
      for (Eigen::Index i = 0; i < n; ++i) x(i) = Rational(candidate[static_cast<std::size_t>(i)]);
      if (std::all_of(constraints.begin(), constraints.end(), [&](const LinearConstraint& c) { return c.holds(x); }))
        hits.push_back(candidate);
    }
    // Odometer step, last free unknown fastest.
    std::size_t k = dims;
    while (k > 0) {
      --k;
      if (current[k] < box.ranges[k].second) {
        ++current[k];
        break;
      }
      current[k] = box.ranges[k].first;
      if (k == 0) return hits;
    }
    if (dims == 0) return hits;
  }
}

CountingSystem profile_system(std::span<const std::int64_t> lambdas) {
  if (lambdas.empty()) lambdas = kProfileLambdas;
  return CountingSystem::binomial_window("n", 5, 5, lambdas);
}

CountingSystem derived_system(std::span<const std::int64_t> lambdas) {
  if (lambdas.empty()) lambdas = kDerivedLambdas;
  return CountingSystem::binomial_window("m", 5, 4, lambdas);
}

ReferenceFamily profile_family_reference() {
  return {"system-star", profile_system(), {0, 1}, {2, 3, 4, 5},
          {660, -990, 720, -186}, {{-10, 20, -15, 4}, {-4, 6, -4, 1}}};
}

ReferenceFamily restricted_profile_family_reference() {
  return {"system-double-star", profile_system().with_fixed(5, Rational(1)), {4}, {0, 1, 2, 3},
          {28, 75, 80, 20}, {{1, -4, 6, -4}}};
}

ReferenceFamily derived_family_reference() {
  return {"system-triple-star", derived_system(), {3, 4}, {0, 1, 2},
          {15, 15, 30}, {{-1, 3, -3}, {-3, 8, -6}}};
}

bool matches_reference(const AffineSolutionFamily& family, const ReferenceFamily& reference, std::string* where) {
  auto fail = [&](const std::string& msg) {
    if (where) *where = msg;
    return false;
  };
  if (family.free != reference.free) return fail("free unknowns differ");
  // The reference may list only some bound unknowns (pinned ones are left out).
  for (std::size_t i = 0; i < reference.bound.size(); ++i) {
    const int u = reference.bound[i];
    if (std::find(family.bound.begin(), family.bound.end(), u) == family.bound.end())
      return fail("unknown " + std::to_string(u) + " is not bound");
    const std::string name = reference.system.unknowns.at(static_cast<std::size_t>(u));
    if (family.affine(u, 0) != Rational(reference.particular[i]))
      return fail("particular " + name + ": " + to_string(family.affine(u, 0)) + " vs " +
                  std::to_string(reference.particular[i]));
    for (std::size_t k = 0; k < reference.basis.size(); ++k) {
      const Rational& got = family.affine(u, static_cast<Eigen::Index>(k) + 1);
      if (got != Rational(reference.basis[k][i]))
        return fail("coefficient of " + reference.system.unknowns.at(static_cast<std::size_t>(reference.free[k])) +
                    " in " + name + ": " + to_string(got) + " vs " + std::to_string(reference.basis[k][i]));
    }
  }
  return true;
}

}  // namespace gq

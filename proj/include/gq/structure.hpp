#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gq/bitset.hpp"
#include "gq/projective.hpp"
#include "gq/quadric.hpp"

namespace gq {

/// Order (s, t) and collinearity constant alpha of a partial geometry.
struct GQParams {
  int s = 4;
  int t = 16;
  int alpha = 1;

  int points_per_line() const { return s + 1; }
  int lines_per_point() const { return t + 1; }
  /// (s + 1)(st + 1).
  constexpr int point_count() const { return (s + 1) * (s * t + 1); }
  /// (t + 1)(st + 1).
  int line_count() const { return (t + 1) * (s * t + 1); }

  friend bool operator==(const GQParams&, const GQParams&) = default;
};

inline constexpr GQParams kQuadricParams{4, 16, 1};

inline constexpr int kLineSize = 5;
using Line = std::array<int, kLineSize>;

/// A malformed incidence structure (bad index, unsorted line, duplicate point...).
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the quadric construction when the form is of the wrong type.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Points of PG(5,4) plus lines given as ascending 5-sets of point indices.
/// Well-formedness is checked on construction; GQ axioms are not.
class GQStructure {
 public:
  GQStructure(std::vector<Coords> points, std::vector<Line> lines);

  int point_count() const { return static_cast<int>(points_.size()); }
  int line_count() const { return static_cast<int>(lines_.size()); }

  const Coords& point(int index) const { return points_.at(index); }
  std::span<const Coords> points() const { return points_; }
  const Line& line(int index) const { return lines_.at(index); }
  std::span<const Line> lines() const { return lines_; }

  /// Lines through a point, ascending.
  std::span<const int> lines_through(int point) const { return incidence_.at(point); }
  const VertexSet& line_points(int line) const { return line_sets_.at(line); }

  friend bool operator==(const GQStructure& a, const GQStructure& b) {
    return a.points_ == b.points_ && a.lines_ == b.lines_;
  }

 private:
  std::vector<Coords> points_;
  std::vector<Line> lines_;
  std::vector<std::vector<int>> incidence_;
  std::vector<VertexSet> line_sets_;
};

/// Points: singular points of `form` in canonical order. Lines: totally
/// singular projective lines, sorted lexicographically by point indices.
/// Throws ConstructionError unless the form yields 325 points.
GQStructure build_quadric_quadrangle(const QuadraticForm& form = QuadraticForm::elliptic());

/// Number of singular pairs {x, y} for which "B(x, y) = 0" and "all five
/// points of the line xy are singular" disagree. Zero for any quadratic form.
std::int64_t polarity_mismatches(const QuadraticForm& form);

struct AxiomWitness {
  int point = -1;
  int line = -1;
  int other_line = -1;
  int observed = 0;
  std::string message;
};

struct AxiomCheck {
  bool passed = true;
  std::int64_t checked = 0;
  std::optional<AxiomWitness> witness;
};

/// (i) line and point degrees, (ii) two lines meet in at most one point,
/// (iii) a point off a line is collinear with exactly alpha of its points.
struct AxiomReport {
  AxiomCheck degrees;
  AxiomCheck line_intersections;
  AxiomCheck collinearity;

  bool passed() const { return degrees.passed && line_intersections.passed && collinearity.passed; }
};

AxiomReport check_gq_axioms(const GQStructure& geometry, const GQParams& params = kQuadricParams);

/// The unique line through two distinct points, if they are collinear.
/// Throws std::invalid_argument when p == q.
std::optional<int> line_through(const GQStructure& geometry, int p, int q);

/// Parse failure with the 1-based line number of the offending input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line_number, const std::string& what);
  int line_number() const { return line_number_; }

 private:
  int line_number_;
};

/// Text format: `GQ 4 16 <points> <lines>`, then `P <i> <c0..c5>` per point and
/// `L <i> <p1..p5>` per line, one record per line, single spaces, '\n' endings.
void write_geometry(std::ostream& os, const GQStructure& geometry);
std::string geometry_to_string(const GQStructure& geometry);

/// Accepts exactly what write_geometry produces; anything else is a ParseError.
GQStructure read_geometry(std::istream& is);
GQStructure geometry_from_string(const std::string& text);

}  // namespace gq

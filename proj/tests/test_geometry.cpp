#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "gq/projective.hpp"
#include "gq/quadric.hpp"
#include "gq/structure.hpp"

using namespace gq;

namespace {

Coords coords(std::initializer_list<int> codes) {
  Coords x;
  int i = 0;
  for (int c : codes) x(i++) = GF4(c);
  return x;
}

// Q = x0 x1 + x2 x3 + x4^2 + x4 x5 + w x5^2 written out coordinate by coordinate.
GF4 oracle_q(const Coords& x) {
  return x(0) * x(1) + x(2) * x(3) + x(4) * x(4) + x(4) * x(5) + GF4::omega() * x(5) * x(5);
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("projective points") {
    const auto points = enumerate_projective_points();
    CHECK(points.size() == 1365);
    CHECK(points.front().coords() == coords({1, 0, 0, 0, 0, 0}));
    std::set<int> keys;
    for (const auto& p : points) {
      const Coords& x = p.coords();
      CHECK(x(pivot(x)) == GF4::one());
      keys.insert(p.key());
    }
    CHECK(keys.size() == 1365);
    for (std::size_t i = 1; i < points.size(); ++i)
      CHECK(canonical_less(points[i - 1].coords(), points[i].coords()));
  }

  TEST_CASE("normal forms identify scalar multiples") {
    std::set<int> classes;
    for (int key = 1; key < kTupleCount; ++key) {
      const Coords x = unpack(key);
      CHECK(pack(x) == key);
      const Coords n = normalize(x);
      for (GF4 s : {GF4::one(), GF4::omega(), GF4::omega2()}) CHECK(normalize(Coords(x * s)) == n);
      classes.insert(pack(n));
    }
    CHECK(classes.size() == 1365);
    CHECK_THROWS_AS(normalize(Coords::Constant(GF4::zero())), std::invalid_argument);
  }

  TEST_CASE("quadratic form") {
    const QuadraticForm q = QuadraticForm::elliptic();
    CHECK(evaluate_form(q, ProjectivePoint(coords({1, 0, 0, 0, 0, 0}))) == GF4::zero());
    CHECK(evaluate_form(q, ProjectivePoint(coords({1, 1, 0, 0, 0, 0}))) == GF4::one());
    int singular = 0;
    for (const auto& p : enumerate_projective_points()) {
      CHECK(q(p.coords()) == oracle_q(p.coords()));
      singular += q(p.coords()).is_zero();
    }
    CHECK(singular == 325);
    CHECK(GF4::omega().trace() == GF4::one());
  }

  TEST_CASE("form is homogeneous of degree 2 and the polar form is bilinear") {
    const QuadraticForm q = QuadraticForm::elliptic();
    std::mt19937_64 rng(7);
    auto random_coords = [&] {
      Coords x;
      for (int i = 0; i < kDimension; ++i) x(i) = GF4(static_cast<int>(rng() % 4));
      return x;
    };
    for (int trial = 0; trial < 100; ++trial) {
      const Coords x = random_coords(), y = random_coords(), z = random_coords();
      const GF4 s(static_cast<int>(rng() % 4));
      CHECK(q(Coords(x * s)) == s * s * q(x));
      CHECK(q.polar(x, y) == q.polar(y, x));
      CHECK(q.polar(x, x) == GF4::zero());
      CHECK(q.polar(x, Coords(y + z)) == q.polar(x, y) + q.polar(x, z));
      CHECK(q.polar(Coords(x * s), y) == s * q.polar(x, y));
      GF4 via_matrix = GF4::zero();
      const auto m = q.polar_matrix();
      for (int i = 0; i < kDimension; ++i)
        for (int j = 0; j < kDimension; ++j) via_matrix += x(i) * m(i, j) * y(j);
      CHECK(via_matrix == q.polar(x, y));
      if (!x.isZero() && !y.isZero())
        CHECK(polarize(q, ProjectivePoint(x), ProjectivePoint(y)).is_zero() == q.polar(x, y).is_zero());
    }
  }

  TEST_CASE("polarity agrees with totally singular lines") {
    CHECK(polarity_mismatches(QuadraticForm::elliptic()) == 0);
  }

  TEST_CASE("construction counts") {
    const GQStructure& g = test::quadrangle();
    CHECK(g.point_count() == 325);
    CHECK(g.line_count() == 1105);
    int incidences = 0;
    for (int p = 0; p < g.point_count(); ++p) {
      CHECK(g.lines_through(p).size() == 17);
      incidences += static_cast<int>(g.lines_through(p).size());
    }
    CHECK(incidences == 1105 * 5);
    const QuadraticForm q = QuadraticForm::elliptic();
    for (const Line& line : g.lines()) {
      CHECK(std::is_sorted(line.begin(), line.end()));
      for (int a : line) {
        CHECK(q(g.point(a)).is_zero());
        for (int b : line)
          if (a != b) CHECK(q.polar(g.point(a), g.point(b)).is_zero());
      }
    }
  }

  TEST_CASE("wrong form type is rejected") {
    QuadraticForm::CoefficientMatrix c = QuadraticForm::CoefficientMatrix::Constant(GF4::zero());
    c(0, 1) = c(2, 3) = c(4, 5) = GF4::one();  // hyperbolic
    CHECK_THROWS_AS(build_quadric_quadrangle(QuadraticForm(c)), ConstructionError);
  }

  TEST_CASE("axioms") {
    const AxiomReport report = check_gq_axioms(test::quadrangle());
    CHECK(report.passed());
    CHECK(report.degrees.passed);
    CHECK(report.line_intersections.passed);
    CHECK(report.collinearity.passed);
  }

  TEST_CASE("deleting a line breaks axiom (i)") {
    const GQStructure& g = test::quadrangle();
    std::vector<Coords> points(g.points().begin(), g.points().end());
    std::vector<Line> lines(g.lines().begin(), g.lines().end());
    const Line removed = lines[100];
    lines.erase(lines.begin() + 100);
    const AxiomReport report = check_gq_axioms(GQStructure(points, lines));
    REQUIRE_FALSE(report.degrees.passed);
    REQUIRE(report.degrees.witness);
    CHECK(std::find(removed.begin(), removed.end(), report.degrees.witness->point) != removed.end());
    CHECK(report.degrees.witness->observed == 16);
  }

  TEST_CASE("duplicating a line breaks axiom (ii)") {
    const GQStructure& g = test::quadrangle();
    std::vector<Coords> points(g.points().begin(), g.points().end());
    std::vector<Line> lines(g.lines().begin(), g.lines().end());
    lines.push_back(lines[7]);
    const AxiomReport report = check_gq_axioms(GQStructure(points, lines));
    REQUIRE_FALSE(report.line_intersections.passed);
    CHECK(report.line_intersections.witness->observed == 5);
  }

  TEST_CASE("moving a point off its line is detected") {
    const GQStructure& g = test::quadrangle();
    std::vector<Coords> points(g.points().begin(), g.points().end());
    std::vector<Line> lines(g.lines().begin(), g.lines().end());
    Line bent = lines[0];
    int replacement = 0;
    while (std::find(bent.begin(), bent.end(), replacement) != bent.end()) ++replacement;
    bent[4] = replacement;
    std::sort(bent.begin(), bent.end());
    lines[0] = bent;
    CHECK_FALSE(check_gq_axioms(GQStructure(points, lines)).passed());
  }

  TEST_CASE("malformed structures are rejected") {
    const GQStructure& g = test::quadrangle();
    std::vector<Coords> points(g.points().begin(), g.points().end());
    std::vector<Line> lines(g.lines().begin(), g.lines().end());
    auto bad = lines;
    bad[0][4] = 325;
    CHECK_THROWS_AS(GQStructure(points, bad), StructureError);
    bad = lines;
    std::swap(bad[0][0], bad[0][1]);
    CHECK_THROWS_AS(GQStructure(points, bad), StructureError);
    auto dup = points;
    dup[1] = dup[0];
    CHECK_THROWS_AS(GQStructure(dup, lines), StructureError);
    auto unnormalized = points;
    unnormalized[0] = Coords(unnormalized[0] * GF4::omega());
    CHECK_THROWS_AS(GQStructure(unnormalized, lines), StructureError);
  }

  TEST_CASE("line_through") {
    const GQStructure& g = test::quadrangle();
    const Line& l = g.line(42);
    CHECK(line_through(g, l[0], l[3]) == 42);
    CHECK_THROWS_AS(line_through(g, 3, 3), std::invalid_argument);
    int collinear = 0, pairs = 0;
    for (int p = 0; p < g.point_count(); ++p)
      for (int q = p + 1; q < g.point_count(); ++q) {
        ++pairs;
        const auto line = line_through(g, p, q);
        if (!line) continue;
        ++collinear;
        int holding = 0;
        for (int i = 0; i < g.line_count(); ++i)
          holding += g.line_points(i).contains(p) && g.line_points(i).contains(q);
        if (holding != 1) FAIL("pair on ", holding, " lines");
        CHECK(g.line_points(*line).contains(p));
      }
    CHECK(collinear == 11050);
    CHECK(pairs == 325 * 324 / 2);
  }

  TEST_CASE("serialization is deterministic and round-trips") {
    const std::string first = geometry_to_string(build_quadric_quadrangle());
    const std::string second = geometry_to_string(build_quadric_quadrangle());
    CHECK(first == second);
    CHECK(first.rfind("GQ 4 16 325 1105\nP 0 1 0 0 0 0 0\n", 0) == 0);
    CHECK(std::count(first.begin(), first.end(), '\n') == 1 + 325 + 1105);
    CHECK(geometry_from_string(first) == test::quadrangle());
  }

  TEST_CASE("parser rejects deviations") {
    const std::string text = geometry_to_string(test::quadrangle());
    auto expect_error_at = [](const std::string& input, int line) {
      try {
        geometry_from_string(input);
        FAIL("accepted malformed input");
      } catch (const ParseError& e) {
        CHECK(e.line_number() == line);
      }
    };
    std::string s = text;
    s.replace(0, 2, "GX");
    expect_error_at(s, 1);
    s = text;
    s.pop_back();
    CHECK_THROWS_AS(geometry_from_string(s), ParseError);
    s = text + "extra\n";
    CHECK_THROWS_AS(geometry_from_string(s), ParseError);
    // Double space inside the third record.
    s = text;
    const auto third = s.find("\nP 1 ");
    s.insert(third + 4, " ");
    expect_error_at(s, 3);
    // Out-of-range code.
    s = text;
    s.replace(s.find("P 0 1 0"), 7, "P 0 7 0");
    expect_error_at(s, 2);
    // Unsorted line.
    s = text;
    const auto lpos = s.find("\nL 0 ");
    const auto lend = s.find('\n', lpos + 1);
    std::istringstream fields(s.substr(lpos + 5, lend - lpos - 5));
    int a, b, c, d, e;
    fields >> a >> b >> c >> d >> e;
    s.replace(lpos + 1, lend - lpos - 1,
              "L 0 " + std::to_string(b) + " " + std::to_string(a) + " " + std::to_string(c) + " " +
                  std::to_string(d) + " " + std::to_string(e));
    CHECK_THROWS_AS(geometry_from_string(s), ParseError);
    CHECK_THROWS_AS(geometry_from_string(""), ParseError);
  }
}

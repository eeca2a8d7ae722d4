#include "gq/structure.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>

namespace gq {

GQStructure::GQStructure(std::vector<Coords> points, std::vector<Line> lines)
    : points_(std::move(points)), lines_(std::move(lines)) {
  const int n = point_count();
  std::vector<char> seen(kTupleCount, 0);
  for (int i = 0; i < n; ++i) {
    const Coords& x = points_[i];
    const int lead = pivot(x);
    if (lead < 0 || x(lead) != GF4::one())
      throw StructureError("point " + std::to_string(i) + " is not in normal form");
    char& flag = seen[pack(x)];
    if (flag) throw StructureError("point " + std::to_string(i) + " repeats an earlier point");
    flag = 1;
  }

  incidence_.assign(n, {});
  line_sets_.reserve(lines_.size());
  for (int l = 0; l < line_count(); ++l) {
    const Line& line = lines_[l];
    for (int k = 0; k < kLineSize; ++k) {
      if (line[k] < 0 || line[k] >= n)
        throw StructureError("line " + std::to_string(l) + " references point " +
                             std::to_string(line[k]) + " out of range");
      if (k > 0 && line[k] <= line[k - 1])
        throw StructureError("line " + std::to_string(l) + " is not strictly ascending");
    }
    for (int p : line) incidence_[p].push_back(l);
    line_sets_.push_back(VertexSet::from(n, line));
  }
}

namespace {

constexpr int kQuadricPointCount = kQuadricParams.point_count();

// Normalized points of the projective line spanned by x and y.
std::array<Coords, kLineSize> span_points(const Coords& x, const Coords& y) {
  return {x, y, normalize(x + y), normalize(x + GF4::omega() * y), normalize(x + GF4::omega2() * y)};
}

}  // namespace

GQStructure build_quadric_quadrangle(const QuadraticForm& form) {
  std::vector<Coords> points;
  for (const auto& x : enumerate_projective_points())
    if (evaluate_form(form, x).is_zero()) points.push_back(x.coords());
  if (static_cast<int>(points.size()) != kQuadricPointCount)
    throw ConstructionError("quadratic form has " + std::to_string(points.size()) +
                            " singular points; an elliptic quadric in PG(5,4) has 325");

  std::vector<int> index_of(kTupleCount, -1);
  for (int i = 0; i < kQuadricPointCount; ++i) index_of[pack(points[i])] = i;

  std::set<Line> found;
  for (int i = 0; i < kQuadricPointCount; ++i) {
    for (int j = i + 1; j < kQuadricPointCount; ++j) {
      if (!form.polar(points[i], points[j]).is_zero()) continue;
      Line line{};
      const auto span = span_points(points[i], points[j]);
      for (int k = 0; k < kLineSize; ++k) {
        const int idx = index_of[pack(span[k])];
        if (idx < 0) throw ConstructionError("polar pair spans a line with a non-singular point");
        line[k] = idx;
      }
      std::sort(line.begin(), line.end());
      found.insert(line);
    }
  }
  return GQStructure(std::move(points), std::vector<Line>(found.begin(), found.end()));
}

std::int64_t polarity_mismatches(const QuadraticForm& form) {
  std::vector<Coords> singular;
  for (const auto& x : enumerate_projective_points())
    if (evaluate_form(form, x).is_zero()) singular.push_back(x.coords());
  std::int64_t mismatches = 0;
  for (std::size_t i = 0; i < singular.size(); ++i) {
    for (std::size_t j = i + 1; j < singular.size(); ++j) {
      const bool orthogonal = form.polar(singular[i], singular[j]).is_zero();
      const auto span = span_points(singular[i], singular[j]);
      const bool totally_singular =
          std::all_of(span.begin(), span.end(), [&](const Coords& z) { return form(z).is_zero(); });
      if (orthogonal != totally_singular) ++mismatches;
    }
  }
  return mismatches;
}

AxiomReport check_gq_axioms(const GQStructure& geometry, const GQParams& params) {
  AxiomReport report;
  const int n = geometry.point_count();
  const int m = geometry.line_count();

  auto& degrees = report.degrees;
  for (int l = 0; l < m && degrees.passed; ++l) {
    ++degrees.checked;
    if (kLineSize != params.points_per_line()) {
      degrees.passed = false;
      degrees.witness = AxiomWitness{.line = l, .observed = kLineSize,
                                     .message = "line " + std::to_string(l) + " has " +
                                                std::to_string(kLineSize) + " points"};
    }
  }
  for (int p = 0; p < n && degrees.passed; ++p) {
    ++degrees.checked;
    const int on = static_cast<int>(geometry.lines_through(p).size());
    if (on != params.lines_per_point()) {
      degrees.passed = false;
      degrees.witness = AxiomWitness{.point = p, .observed = on,
                                     .message = "point " + std::to_string(p) + " lies on " +
                                                std::to_string(on) + " lines"};
    }
  }

  auto& pairs = report.line_intersections;
  for (int a = 0; a < m && pairs.passed; ++a) {
    for (int b = a + 1; b < m; ++b) {
      ++pairs.checked;
      const int shared = intersection_count(geometry.line_points(a), geometry.line_points(b));
      if (shared > 1) {
        pairs.passed = false;
        pairs.witness = AxiomWitness{.line = a, .other_line = b, .observed = shared,
                                     .message = "lines " + std::to_string(a) + " and " +
                                                std::to_string(b) + " share " +
                                                std::to_string(shared) + " points"};
        break;
      }
    }
  }

  std::vector<VertexSet> collinear(n, VertexSet(n));
  for (int p = 0; p < n; ++p) {
    for (int l : geometry.lines_through(p)) collinear[p] |= geometry.line_points(l);
    collinear[p].erase(p);
  }
  auto& axiom3 = report.collinearity;
  for (int p = 0; p < n && axiom3.passed; ++p) {
    for (int l = 0; l < m; ++l) {
      if (geometry.line_points(l).contains(p)) continue;
      ++axiom3.checked;
      const int seen = intersection_count(collinear[p], geometry.line_points(l));
      if (seen != params.alpha) {
        axiom3.passed = false;
        axiom3.witness = AxiomWitness{.point = p, .line = l, .observed = seen,
                                      .message = "point " + std::to_string(p) + " is collinear with " +
                                                 std::to_string(seen) + " points of line " +
                                                 std::to_string(l)};
        break;
      }
    }
  }
  return report;
}

std::optional<int> line_through(const GQStructure& geometry, int p, int q) {
  if (p == q) throw std::invalid_argument("line_through: the two points must be distinct");
  auto lp = geometry.lines_through(p);
  auto lq = geometry.lines_through(q);
  std::optional<int> result;
  for (int l : lp) {
    if (std::binary_search(lq.begin(), lq.end(), l)) {
      if (result) throw StructureError("points " + std::to_string(p) + " and " + std::to_string(q) +
                                       " lie on more than one line");
      result = l;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Serialization

ParseError::ParseError(int line_number, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + what), line_number_(line_number) {}

namespace {

std::string header_record(int points, int lines) {
  return "GQ " + std::to_string(kQuadricParams.s) + " " + std::to_string(kQuadricParams.t) + " " +
         std::to_string(points) + " " + std::to_string(lines);
}

std::string point_record(int index, const Coords& x) {
  std::string out = "P " + std::to_string(index);
  for (int i = 0; i < kDimension; ++i) out += " " + std::to_string(x(i).code());
  return out;
}

std::string line_record(int index, const Line& line) {
  std::string out = "L " + std::to_string(index);
  for (int p : line) out += " " + std::to_string(p);
  return out;
}

// Splits on single spaces and parses every token after the tag as a
// non-negative decimal; the caller re-renders the record to reject anything
// that is not byte-identical to the canonical form.
std::vector<long> numeric_fields(const std::string& record, const std::string& tag, std::size_t count,
                                 int line_number) {
  if (record.rfind(tag + " ", 0) != 0) throw ParseError(line_number, "expected a '" + tag + "' record");
  std::vector<long> values;
  std::size_t pos = tag.size() + 1;
  while (pos <= record.size()) {
    const std::size_t end = std::min(record.find(' ', pos), record.size());
    long v = 0;
    auto [ptr, ec] = std::from_chars(record.data() + pos, record.data() + end, v);
    if (ec != std::errc() || ptr != record.data() + end || v < 0)
      throw ParseError(line_number, "malformed field in '" + record + "'");
    values.push_back(v);
    pos = end + 1;
  }
  if (values.size() != count)
    throw ParseError(line_number, "expected " + std::to_string(count) + " fields after '" + tag + "'");
  return values;
}

}  // namespace

void write_geometry(std::ostream& os, const GQStructure& geometry) {
  os << header_record(geometry.point_count(), geometry.line_count()) << '\n';
  for (int i = 0; i < geometry.point_count(); ++i) os << point_record(i, geometry.point(i)) << '\n';
  for (int l = 0; l < geometry.line_count(); ++l) os << line_record(l, geometry.line(l)) << '\n';
}

std::string geometry_to_string(const GQStructure& geometry) {
  std::ostringstream os;
  write_geometry(os, geometry);
  return os.str();
}

GQStructure read_geometry(std::istream& is) {
  int line_number = 0;
  std::string record;
  auto next = [&]() {
    ++line_number;
    if (!std::getline(is, record)) throw ParseError(line_number, "unexpected end of input");
    if (is.eof()) throw ParseError(line_number, "missing trailing newline");
  };

  next();
  const auto header = numeric_fields(record, "GQ", 4, line_number);
  if (header[0] != kQuadricParams.s || header[1] != kQuadricParams.t)
    throw ParseError(line_number, "only order (4,16) geometries are supported");
  if (record != header_record(static_cast<int>(header[2]), static_cast<int>(header[3])))
    throw ParseError(line_number, "non-canonical header");
  const long point_total = header[2];
  const long line_total = header[3];
  if (point_total > (kTupleCount - 1) / 3)
    throw ParseError(line_number, "more points than PG(5,4) has");

  std::vector<Coords> points;
  points.reserve(point_total);
  for (long i = 0; i < point_total; ++i) {
    next();
    const auto f = numeric_fields(record, "P", 1 + kDimension, line_number);
    if (f[0] != i) throw ParseError(line_number, "point index out of sequence");
    Coords x;
    for (int c = 0; c < kDimension; ++c) {
      if (f[1 + c] > 3) throw ParseError(line_number, "coordinate code outside 0..3");
      x(c) = GF4(static_cast<int>(f[1 + c]));
    }
    if (record != point_record(static_cast<int>(i), x)) throw ParseError(line_number, "non-canonical point record");
    points.push_back(x);
  }

  std::vector<Line> lines;
  lines.reserve(line_total);
  for (long l = 0; l < line_total; ++l) {
    next();
    const auto f = numeric_fields(record, "L", 1 + kLineSize, line_number);
    if (f[0] != l) throw ParseError(line_number, "line index out of sequence");
    Line line{};
    for (int k = 0; k < kLineSize; ++k) {
      if (f[1 + k] >= point_total) throw ParseError(line_number, "point index out of range");
      line[k] = static_cast<int>(f[1 + k]);
    }
    if (record != line_record(static_cast<int>(l), line)) throw ParseError(line_number, "non-canonical line record");
    if (!std::is_sorted(line.begin(), line.end()) ||
        std::adjacent_find(line.begin(), line.end()) != line.end())
      throw ParseError(line_number, "line points must be strictly ascending");
    lines.push_back(line);
  }
  if (is.peek() != std::char_traits<char>::eof()) throw ParseError(line_number + 1, "trailing content");

  try {
    return GQStructure(std::move(points), std::move(lines));
  } catch (const StructureError& e) {
    throw ParseError(line_number, e.what());
  }
}

GQStructure geometry_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_geometry(is);
}

}  // namespace gq

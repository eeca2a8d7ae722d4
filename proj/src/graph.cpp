#include "gq/graph.hpp"

#include <algorithm>
#include <random>

namespace gq {

PointGraph::PointGraph(int n) : rows_(n, VertexSet(n)) {}

void PointGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("PointGraph: loops are not allowed");
  rows_[u].insert(v);
  rows_[v].insert(u);
}

void PointGraph::remove_edge(int u, int v) {
  rows_[u].erase(v);
  rows_[v].erase(u);
}

std::int64_t PointGraph::edge_count() const {
  std::int64_t twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

VertexSet PointGraph::non_neighbours(int v) const {
  VertexSet out(size());
  for (int u = 0; u < size(); ++u)
    if (u != v && !adjacent(u, v)) out.insert(u);
  return out;
}

PointGraph point_graph(const GQStructure& geometry) {
  PointGraph graph(geometry.point_count());
  for (const Line& line : geometry.lines())
    for (int i = 0; i < kLineSize; ++i)
      for (int j = i + 1; j < kLineSize; ++j) graph.add_edge(line[i], line[j]);
  return graph;
}

SrgResult verify_srg(const PointGraph& graph) {
  SrgResult result;
  const int n = graph.size();
  if (n == 0) {
    result.witness = SrgWitness{.reason = "empty graph"};
    return result;
  }
  const int k = graph.degree(0);
  for (int u = 1; u < n; ++u) {
    if (graph.degree(u) != k) {
      result.witness = SrgWitness{.u = u, .observed = graph.degree(u),
                                  .reason = "degree differs from vertex 0 (" + std::to_string(k) + ")"};
      return result;
    }
  }
  if (k == n - 1) {
    result.witness = SrgWitness{.u = 0, .observed = k, .reason = "complete graph"};
    return result;
  }
  if (k == 0) {
    result.witness = SrgWitness{.u = 0, .observed = 0, .reason = "null graph"};
    return result;
  }

  std::optional<int> lambda, mu;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      ++result.pairs_checked;
      const int common = intersection_count(graph.neighbours(u), graph.neighbours(v));
      auto& expected = graph.adjacent(u, v) ? lambda : mu;
      if (!expected) expected = common;
      if (common != *expected) {
        result.witness = SrgWitness{.u = u, .v = v, .observed = common,
                                    .reason = std::string(graph.adjacent(u, v) ? "adjacent" : "non-adjacent") +
                                              " pair has " + std::to_string(common) +
                                              " common neighbours, expected " + std::to_string(*expected)};
        return result;
      }
    }
  }
  result.params = SrgParams{n, k, lambda.value_or(0), mu.value_or(0)};
  return result;
}

bool is_coclique(const PointGraph& graph, const VertexSet& vertices) {
  bool ok = true;
  vertices.for_each([&](int v) {
    if (ok && intersection_count(graph.neighbours(v), vertices) != 0) ok = false;
  });
  return ok;
}

VertexSet triad_trace_set(const PointGraph& graph, int p, int q, int r) {
  const std::array<std::pair<int, int>, 3> pairs{{{p, q}, {p, r}, {q, r}}};
  for (auto [a, b] : pairs) {
    if (a == b) throw PreconditionError("triad has repeated vertex " + std::to_string(a));
    if (graph.adjacent(a, b))
      throw PreconditionError("not a triad: " + std::to_string(a) + " ~ " + std::to_string(b));
  }
  return graph.neighbours(p) & graph.neighbours(q) & graph.neighbours(r);
}

std::vector<int> triad_trace(const PointGraph& graph, int p, int q, int r) {
  return triad_trace_set(graph, p, q, r).members();
}

namespace {

TriadRegularity regularity_of_trace(const PointGraph& graph, const VertexSet& trace) {
  VertexSet closure(graph.size());
  for (int v = 0; v < graph.size(); ++v) closure.insert(v);
  trace.for_each([&](int t) { closure &= graph.neighbours(t); });
  return {trace.count(), closure.count()};
}

}  // namespace

TriadRegularity triad_regularity(const PointGraph& graph, int p, int q, int r) {
  return regularity_of_trace(graph, triad_trace_set(graph, p, q, r));
}

TriadScan scan_triads(const PointGraph& graph, int expected_trace, int s, std::optional<std::int64_t> sample,
                      std::uint64_t seed) {
  TriadScan scan;
  scan.min_trace = graph.size();
  auto visit = [&](int p, int q, int r) {
    const VertexSet trace = graph.neighbours(p) & graph.neighbours(q) & graph.neighbours(r);
    const TriadRegularity reg = regularity_of_trace(graph, trace);
    ++scan.triads;
    scan.min_trace = std::min(scan.min_trace, reg.trace_size);
    scan.max_trace = std::max(scan.max_trace, reg.trace_size);
    scan.max_closure = std::max(scan.max_closure, reg.closure_size);
    if (reg.trace_size != expected_trace) {
      ++scan.bad_trace;
      if (!scan.first_bad_trace) scan.first_bad_trace = {p, q, r};
    }
    if (reg.closure_size > s + 1) ++scan.oversized_closure;
    if (!reg.regular(s)) {
      ++scan.irregular;
      if (!scan.first_irregular) scan.first_irregular = {p, q, r};
    }
  };

  const int n = graph.size();
  if (!sample) {
    for (int p = 0; p < n; ++p) {
      const VertexSet far_p = graph.non_neighbours(p);
      far_p.for_each([&](int q) {
        if (q <= p) return;
        VertexSet far_both = far_p - graph.neighbours(q);
        far_both.erase(q);
        far_both.for_each([&](int r) {
          if (r > q) visit(p, q, r);
        });
      });
    }
  } else {
    const auto pairs = non_edges(graph);
    if (pairs.empty()) return scan;
    std::mt19937_64 rng(seed);
    for (std::int64_t i = 0; i < *sample; ++i) {
      const auto [p, q] = pairs[rng() % pairs.size()];
      VertexSet far_both = graph.non_neighbours(p) - graph.neighbours(q);
      far_both.erase(q);
      const auto candidates = far_both.members();
      if (candidates.empty()) continue;
      visit(p, q, candidates[rng() % candidates.size()]);
    }
  }
  if (scan.triads == 0) scan.min_trace = 0;
  return scan;
}

std::vector<std::pair<int, int>> non_edges(const PointGraph& graph) {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < graph.size(); ++p)
    for (int q = p + 1; q < graph.size(); ++q)
      if (!graph.adjacent(p, q)) out.emplace_back(p, q);
  return out;
}

std::pair<int, int> canonical_non_edge(const PointGraph& graph) {
  for (int p = 0; p < graph.size(); ++p)
    for (int q = p + 1; q < graph.size(); ++q)
      if (!graph.adjacent(p, q)) return {p, q};
  throw PreconditionError("graph has no non-edge");
}

std::vector<std::pair<int, int>> sample_non_edges(const PointGraph& graph, std::size_t count, std::uint64_t seed) {
  auto pairs = non_edges(graph);
  if (count >= pairs.size()) return pairs;
  // Partial Fisher-Yates keeps the draw independent of the standard library's shuffle.
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (pairs.size() - i));
    std::swap(pairs[i], pairs[j]);
  }
  pairs.resize(count);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace gq

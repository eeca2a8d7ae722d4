#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gq/bitset.hpp"
#include "gq/structure.hpp"

namespace gq {

/// Simple undirected graph with one adjacency bit-row per vertex.
class PointGraph {
 public:
  explicit PointGraph(int n);

  int size() const { return static_cast<int>(rows_.size()); }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  const VertexSet& neighbours(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].count(); }
  std::int64_t edge_count() const;

  /// Vertices other than v that are not adjacent to v.
  VertexSet non_neighbours(int v) const;

 private:
  std::vector<VertexSet> rows_;
};

/// Collinearity graph: adjacent iff the two points share a line.
PointGraph point_graph(const GQStructure& geometry);

struct SrgParams {
  int v = 0, k = 0, lambda = 0, mu = 0;

  /// k (k - lambda - 1) = (v - k - 1) mu.
  bool feasible() const {
    return static_cast<std::int64_t>(k) * (k - lambda - 1) == static_cast<std::int64_t>(v - k - 1) * mu;
  }
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

inline constexpr SrgParams kQuadricSrg{325, 68, 3, 17};

struct SrgWitness {
  int u = -1, v = -1;  // v == -1 for a degree failure at u
  int observed = 0;
  std::string reason;
};

struct SrgResult {
  std::optional<SrgParams> params;
  std::optional<SrgWitness> witness;
  std::int64_t pairs_checked = 0;
  bool ok() const { return params.has_value(); }
};

/// Checks regularity and the common-neighbour count of every vertex pair;
/// complete and null graphs are rejected.
SrgResult verify_srg(const PointGraph& graph);

/// Input that violates an analysis precondition (adjacent pair where a non-edge
/// is required, vertex outside the expected part...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_coclique(const PointGraph& graph, const VertexSet& vertices);

/// Common neighbours of a triad. Throws PreconditionError naming an offending
/// pair if {p, q, r} is not a 3-coclique of distinct vertices.
VertexSet triad_trace_set(const PointGraph& graph, int p, int q, int r);
std::vector<int> triad_trace(const PointGraph& graph, int p, int q, int r);

struct TriadRegularity {
  int trace_size = 0;
  /// Vertices adjacent to every vertex of the trace.
  int closure_size = 0;
  bool regular(int s = 4) const { return closure_size == s + 1; }
};

TriadRegularity triad_regularity(const PointGraph& graph, int p, int q, int r);

/// True iff the triad is 3-regular, i.e. the trace's common neighbourhood has s + 1 vertices.
inline bool check_3_regularity(const PointGraph& graph, int p, int q, int r, int s = 4) {
  return triad_regularity(graph, p, q, r).regular(s);
}

struct TriadScan {
  std::int64_t triads = 0;
  std::int64_t bad_trace = 0;
  std::int64_t irregular = 0;
  std::int64_t oversized_closure = 0;
  int min_trace = 0, max_trace = 0;
  int max_closure = 0;
  std::optional<std::array<int, 3>> first_bad_trace;
  std::optional<std::array<int, 3>> first_irregular;
};

/// Every triad p < q < r when `sample` is empty; otherwise `sample` triads
/// drawn reproducibly from `seed`.
TriadScan scan_triads(const PointGraph& graph, int expected_trace, int s,
                      std::optional<std::int64_t> sample = std::nullopt, std::uint64_t seed = 0);

/// All non-edges {p, q} with p < q, in lexicographic order.
std::vector<std::pair<int, int>> non_edges(const PointGraph& graph);

/// The lexicographically first non-edge.
std::pair<int, int> canonical_non_edge(const PointGraph& graph);

/// `count` distinct non-edges chosen reproducibly from `seed`, ascending.
std::vector<std::pair<int, int>> sample_non_edges(const PointGraph& graph, std::size_t count, std::uint64_t seed);

}  // namespace gq

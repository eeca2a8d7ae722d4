#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gq/graph.hpp"

namespace gq {

/// The four-way split of V \ {p, q} around a non-edge {p, q}:
/// A common neighbours, B common non-neighbours, C near p only, D near q only.
struct LocalPartition {
  int p = -1, q = -1;
  VertexSet a, b, c, d;
  bool a_is_coclique = false;

  std::vector<int> a_members() const { return a.members(); }
  std::vector<int> b_members() const { return b.members(); }
};

/// Throws PreconditionError if p == q or p ~ q.
LocalPartition local_partition(const PointGraph& graph, int p, int q);

/// A local partition refined by a vertex r of B: each part splits into the
/// vertices adjacent to r ("near") and the rest ("far"; r itself is in neither part of B).
struct RefinedPartition {
  LocalPartition base;
  int r = -1;
  VertexSet a_near, a_far, b_near, b_far, c_near, c_far, d_near, d_far;
};

/// Throws PreconditionError unless r lies in base.b.
RefinedPartition refine(const PointGraph& graph, const LocalPartition& base, int r);

inline constexpr int kBlockSize = 5;

/// Classes N_0..N_5 of B by number of neighbours in A_near, with their sizes.
struct AdjacencyProfile {
  std::array<int, kBlockSize + 1> n{};
  std::array<VertexSet, kBlockSize + 1> classes;

  int total() const;
  /// Sum of i * n_i.
  int weighted_total() const;
};

/// Throws PreconditionError if some vertex of B has more than five
/// neighbours in A_near.
AdjacencyProfile adjacency_profile(const PointGraph& graph, const RefinedPartition& part);

struct RefinedCountsReport {
  /// |B_near & N_i| for i = 0..5.
  std::array<int, kBlockSize + 1> b_near_classes{};
  /// |G(a) & B_near & N_0| for each a in A_far, ascending in a.
  std::vector<std::pair<int, int>> far_point_counts;
  bool split_ok = false;
  bool far_counts_ok = false;
  std::optional<std::string> witness;

  bool ok() const { return split_ok && far_counts_ok; }
};

/// B_near = (B_near & N_0) + (B_near & N_1) with sizes 24 and 15, and every
/// a in A_far sees exactly 10 vertices of B_near & N_0.
RefinedCountsReport refined_counts_check(const PointGraph& graph, const RefinedPartition& part,
                                         const AdjacencyProfile& profile);

struct PairLawReport {
  int k = 0;  // |G(x) & G(y) & A|
  int in_b = 0, in_c = 0, in_d = 0;
  bool holds() const { return in_b == 7 + k && in_c == 5 - k && in_d == 5 - k; }
};

/// Common neighbours of a non-adjacent pair x, y of B, split over A, B, C, D.
/// Throws PreconditionError if x == y, x ~ y, or either lies outside B.
PairLawReport pair_law_check(const PointGraph& graph, const LocalPartition& part, int x, int y);

/// m_i(a) = |G(a) & N_i| for a in A_far, i = 0..4.
struct DerivedProfile {
  int a = -1;
  std::array<int, kBlockSize> m{};
  int total() const;
};

/// Throws PreconditionError unless a lies in part.a_far.
DerivedProfile derived_profile(const PointGraph& graph, const RefinedPartition& part,
                               const AdjacencyProfile& profile, int a);

}  // namespace gq

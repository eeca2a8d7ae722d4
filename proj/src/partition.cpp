#include "gq/partition.hpp"

#include <numeric>

namespace gq {

LocalPartition local_partition(const PointGraph& graph, int p, int q) {
  if (p == q) throw PreconditionError("local_partition: p and q must differ");
  if (graph.adjacent(p, q))
    throw PreconditionError("local_partition: " + std::to_string(p) + " ~ " + std::to_string(q) + " is an edge");
  const VertexSet& np = graph.neighbours(p);
  const VertexSet& nq = graph.neighbours(q);
  LocalPartition part;
  part.p = p;
  part.q = q;
  part.a = np & nq;
  part.c = np - nq;
  part.c.erase(q);
  part.d = nq - np;
  part.d.erase(p);
  part.b = graph.non_neighbours(p) - nq;
  part.b.erase(q);
  part.a_is_coclique = is_coclique(graph, part.a);
  return part;
}

RefinedPartition refine(const PointGraph& graph, const LocalPartition& base, int r) {
  if (r < 0 || r >= graph.size() || !base.b.contains(r))
    throw PreconditionError("refine: vertex " + std::to_string(r) + " is not in B");
  const VertexSet& nr = graph.neighbours(r);
  RefinedPartition part;
  part.base = base;
  part.r = r;
  part.a_near = base.a & nr;
  part.a_far = base.a - nr;
  part.b_near = base.b & nr;
  part.b_far = base.b - nr;
  part.b_far.erase(r);
  part.c_near = base.c & nr;
  part.c_far = base.c - nr;
  part.d_near = base.d & nr;
  part.d_far = base.d - nr;
  return part;
}

int AdjacencyProfile::total() const { return std::accumulate(n.begin(), n.end(), 0); }

int AdjacencyProfile::weighted_total() const {
  int sum = 0;
  for (int i = 0; i <= kBlockSize; ++i) sum += i * n[i];
  return sum;
}

AdjacencyProfile adjacency_profile(const PointGraph& graph, const RefinedPartition& part) {
  AdjacencyProfile profile;
  for (auto& cls : profile.classes) cls = VertexSet(graph.size());
  part.base.b.for_each([&](int y) {
    const int i = intersection_count(graph.neighbours(y), part.a_near);
    if (i > kBlockSize)
      throw PreconditionError("adjacency_profile: vertex " + std::to_string(y) + " has " + std::to_string(i) +
                              " neighbours in A_near");
    profile.classes[i].insert(y);
  });
  // r has no neighbour in itself but is adjacent to all of A_near, so it lands in N_|A_near|.
  for (int i = 0; i <= kBlockSize; ++i) profile.n[i] = profile.classes[i].count();
  return profile;
}

RefinedCountsReport refined_counts_check(const PointGraph& graph, const RefinedPartition& part,
                                         const AdjacencyProfile& profile) {
  RefinedCountsReport report;
  for (int i = 0; i <= kBlockSize; ++i)
    report.b_near_classes[i] = intersection_count(part.b_near, profile.classes[i]);
  const auto& split = report.b_near_classes;
  report.split_ok = split[0] == 24 && split[1] == 15 && split[2] == 0 && split[3] == 0 && split[4] == 0 &&
                    split[5] == 0;
  if (!report.split_ok)
    report.witness = "r = " + std::to_string(part.r) + ": |B_near & N_0| = " + std::to_string(split[0]) +
                     ", |B_near & N_1| = " + std::to_string(split[1]);

  const VertexSet near_zero = part.b_near & profile.classes[0];
  report.far_counts_ok = true;
  part.a_far.for_each([&](int a) {
    const int seen = intersection_count(graph.neighbours(a), near_zero);
    report.far_point_counts.emplace_back(a, seen);
    if (seen != 10 && report.far_counts_ok) {
      report.far_counts_ok = false;
      if (!report.witness)
        report.witness = "r = " + std::to_string(part.r) + ", a = " + std::to_string(a) +
                         ": |G(a) & B_near & N_0| = " + std::to_string(seen);
    }
  });
  return report;
}

PairLawReport pair_law_check(const PointGraph& graph, const LocalPartition& part, int x, int y) {
  if (x == y) throw PreconditionError("pair_law_check: x and y must differ");
  if (!part.b.contains(x) || !part.b.contains(y)) throw PreconditionError("pair_law_check: x and y must lie in B");
  if (graph.adjacent(x, y))
    throw PreconditionError("pair_law_check: " + std::to_string(x) + " ~ " + std::to_string(y) + " is an edge");
  const VertexSet common = graph.neighbours(x) & graph.neighbours(y);
  PairLawReport report;
  report.k = intersection_count(common, part.a);
  report.in_b = intersection_count(common, part.b);
  report.in_c = intersection_count(common, part.c);
  report.in_d = intersection_count(common, part.d);
  return report;
}

int DerivedProfile::total() const { return std::accumulate(m.begin(), m.end(), 0); }

DerivedProfile derived_profile(const PointGraph& graph, const RefinedPartition& part,
                               const AdjacencyProfile& profile, int a) {
  if (a < 0 || a >= graph.size() || !part.a_far.contains(a))
    throw PreconditionError("derived_profile: vertex " + std::to_string(a) + " is not in A_far");
  DerivedProfile out;
  out.a = a;
  for (int i = 0; i < kBlockSize; ++i) out.m[i] = intersection_count(graph.neighbours(a), profile.classes[i]);
  return out;
}

}  // namespace gq

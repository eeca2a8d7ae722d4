#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "gq/counting.hpp"
#include "gq/graph.hpp"
#include "gq/partition.hpp"

using namespace gq;

namespace {

// Plain boolean adjacency matrix built straight from the line list.
std::vector<std::vector<bool>> oracle_adjacency(const GQStructure& g) {
  std::vector<std::vector<bool>> adj(g.point_count(), std::vector<bool>(g.point_count(), false));
  for (const Line& line : g.lines())
    for (int a : line)
      for (int b : line)
        if (a != b) adj[a][b] = true;
  return adj;
}

PointGraph complete_graph(int n) {
  PointGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_SUITE("srg") {
  TEST_CASE("point graph matches the line list") {
    const auto adj = oracle_adjacency(test::quadrangle());
    const PointGraph& g = test::collinearity();
    CHECK(g.size() == 325);
    CHECK(g.edge_count() == 11050);
    for (int u = 0; u < 325; ++u) {
      CHECK(g.degree(u) == 68);
      CHECK_FALSE(g.adjacent(u, u));
      for (int v = 0; v < 325; ++v)
        if (g.adjacent(u, v) != adj[u][v]) FAIL("adjacency differs at ", u, ", ", v);
    }
  }

  TEST_CASE("strongly regular with (325, 68, 3, 17)") {
    const SrgResult result = verify_srg(test::collinearity());
    REQUIRE(result.ok());
    CHECK(*result.params == kQuadricSrg);
    CHECK(result.params->feasible());
    CHECK(result.pairs_checked == 325 * 324 / 2);

    // Independent count over the boolean matrix.
    const auto adj = oracle_adjacency(test::quadrangle());
    std::set<int> edge_counts, non_edge_counts;
    for (int u = 0; u < 325; ++u)
      for (int v = u + 1; v < 325; ++v) {
        int common = 0;
        for (int w = 0; w < 325; ++w) common += adj[u][w] && adj[v][w];
        (adj[u][v] ? edge_counts : non_edge_counts).insert(common);
      }
    CHECK(edge_counts == std::set<int>{3});
    CHECK(non_edge_counts == std::set<int>{17});
  }

  TEST_CASE("complete and null graphs are not strongly regular") {
    CHECK_FALSE(verify_srg(complete_graph(5)).ok());
    CHECK_FALSE(verify_srg(PointGraph(5)).ok());
  }

  TEST_CASE("deleting any single edge breaks verify_srg") {
    PointGraph g = test::collinearity();
    int tried = 0;
    for (int u = 0; u < 325; u += 13) {
      const int v = g.neighbours(u).members().front();
      g.remove_edge(u, v);
      const SrgResult result = verify_srg(g);
      CHECK_FALSE(result.ok());
      REQUIRE(result.witness);
      CHECK((result.witness->u == u || result.witness->u == v || result.witness->v == u || result.witness->v == v ||
             result.witness->v == -1));
      g.add_edge(u, v);
      ++tried;
    }
    CHECK(tried == 25);
    CHECK(verify_srg(g).ok());
  }

  TEST_CASE("local partition") {
    const PointGraph& g = test::collinearity();
    const auto pairs = non_edges(g);
    CHECK(pairs.size() == 41600);
    CHECK(canonical_non_edge(g) == pairs.front());
    for (std::size_t i = 0; i < pairs.size(); i += 97) {
      const auto [p, q] = pairs[i];
      const LocalPartition part = local_partition(g, p, q);
      CHECK(part.a.count() == 17);
      CHECK(part.b.count() == 204);
      CHECK(part.c.count() == 51);
      CHECK(part.d.count() == 51);
      CHECK(part.a_is_coclique);
      CHECK(is_coclique(g, part.a));
      VertexSet all = part.a | part.b | part.c | part.d;
      all.insert(p);
      all.insert(q);
      CHECK(all.count() == 325);
      CHECK(part.a.count() + part.b.count() + part.c.count() + part.d.count() == 323);
      CHECK((part.a & part.b).empty());
      CHECK((part.c & part.d).empty());
    }
    CHECK_THROWS_AS(local_partition(g, 0, 0), PreconditionError);
    const int neighbour = g.neighbours(0).members().front();
    CHECK_THROWS_AS(local_partition(g, 0, neighbour), PreconditionError);
  }

  TEST_CASE("triads") {
    const PointGraph& g = test::collinearity();
    const auto [p, q] = canonical_non_edge(g);
    const LocalPartition part = local_partition(g, p, q);
    const int r = part.b.members().front();
    const std::vector<int> trace = triad_trace(g, p, q, r);
    CHECK(trace.size() == 5);
    CHECK(std::is_sorted(trace.begin(), trace.end()));
    for (int x : trace) CHECK((g.adjacent(x, p) && g.adjacent(x, q) && g.adjacent(x, r)));
    const TriadRegularity reg = triad_regularity(g, p, q, r);
    CHECK(reg.trace_size == 5);
    CHECK(reg.closure_size == 5);
    CHECK(check_3_regularity(g, p, q, r));

    // The closure contains the triad itself.
    VertexSet common = g.neighbours(trace[0]);
    for (int x : trace) common &= g.neighbours(x);
    CHECK(common.contains(p));
    CHECK(common.contains(q));
    CHECK(common.contains(r));

    const int neighbour = g.neighbours(p).members().front();
    CHECK_THROWS_AS(triad_trace(g, p, q, neighbour), PreconditionError);
    CHECK_THROWS_AS(triad_trace(g, p, p, r), PreconditionError);
  }

  TEST_CASE("triad count and sampled scan") {
    const PointGraph& g = test::collinearity();
    CHECK(41600LL * 204 / 3 == 2828800);
    const TriadScan sample = scan_triads(g, 5, 4, 20000, 3);
    CHECK(sample.triads == 20000);
    CHECK(sample.bad_trace == 0);
    CHECK(sample.irregular == 0);
    CHECK(sample.max_closure == 5);
    const TriadScan again = scan_triads(g, 5, 4, 20000, 3);
    CHECK(again.triads == sample.triads);
    CHECK(sample_non_edges(g, 50, 9) == sample_non_edges(g, 50, 9));
    const auto s = sample_non_edges(g, 50, 9);
    CHECK(s.size() == 50);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
  }

  TEST_CASE("a graph with an irregular triad is flagged") {
    // Disjoint union of two 3-claws sharing leaves: triad {0, 1, 2} with trace {3, 4}.
    PointGraph g(6);
    for (int centre : {3, 4})
      for (int leaf : {0, 1, 2}) g.add_edge(centre, leaf);
    g.add_edge(5, 3);
    const TriadRegularity reg = triad_regularity(g, 0, 1, 2);
    CHECK(reg.trace_size == 2);
    CHECK(reg.closure_size == 3);
    CHECK_FALSE(reg.regular(4));
  }

  TEST_CASE("refined partition and adjacency profile") {
    const PointGraph& g = test::collinearity();
    const auto [p, q] = canonical_non_edge(g);
    const LocalPartition part = local_partition(g, p, q);
    const CountingSystem system = profile_system();
    std::set<std::array<int, 6>> profiles;
    part.b.for_each([&](int r) {
      const RefinedPartition rp = refine(g, part, r);
      CHECK(rp.a_near.count() == 5);
      CHECK(rp.a_far.count() == 12);
      CHECK(rp.b_near.count() == 39);
      CHECK(rp.b_far.count() == 164);
      CHECK(rp.c_near.count() == 12);
      CHECK(rp.d_near.count() == 12);
      const AdjacencyProfile profile = adjacency_profile(g, rp);
      CHECK(profile.total() == 204);
      CHECK(profile.weighted_total() == 300);
      CHECK(profile.n[5] == 3);
      CHECK(profile.classes[5].contains(r));
      CHECK(4 * profile.n[0] + profile.n[1] == 186 + profile.n[5]);
      RationalVector x(6);
      for (int i = 0; i < 6; ++i) x(i) = Rational(profile.n[i]);
      CHECK(system.residual(x).cwiseEqual(Rational(0)).all());
      profiles.insert(profile.n);
      const RefinedCountsReport counts = refined_counts_check(g, rp, profile);
      CHECK(counts.ok());
      CHECK(counts.b_near_classes[0] == 24);
      CHECK(counts.b_near_classes[1] == 15);
      CHECK(counts.far_point_counts.size() == 12);
    });
    // Regression constant measured on this construction.
    CHECK(profiles == std::set<std::array<int, 6>>{{36, 45, 120, 0, 0, 3}});
    const int neighbour_of_p = g.neighbours(p).members().front();
    CHECK_THROWS_AS(refine(g, part, neighbour_of_p), PreconditionError);
  }

  TEST_CASE("pair law") {
    const PointGraph& g = test::collinearity();
    const auto pairs = sample_non_edges(g, 4, 11);
    for (const auto& [p, q] : pairs) {
      const LocalPartition part = local_partition(g, p, q);
      const auto b = part.b.members();
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
          if (g.adjacent(b[i], b[j])) continue;
          const PairLawReport law = pair_law_check(g, part, b[i], b[j]);
          if (!law.holds()) FAIL("pair law fails for ", b[i], ", ", b[j]);
          CHECK(law.k <= 5);
          CHECK(law.in_b + law.in_c + law.in_d + law.k == 17);
        }
      const int x = b[0];
      const int y = g.neighbours(x).members().front();
      CHECK_THROWS_AS(pair_law_check(g, part, x, x), PreconditionError);
      if (part.b.contains(y)) CHECK_THROWS_AS(pair_law_check(g, part, x, y), PreconditionError);
      CHECK_THROWS_AS(pair_law_check(g, part, x, part.a.members().front()), PreconditionError);
    }
  }

  TEST_CASE("derived profiles") {
    const PointGraph& g = test::collinearity();
    const auto [p, q] = canonical_non_edge(g);
    const LocalPartition part = local_partition(g, p, q);
    const AffineSolutionFamily family = solve_counting_system(derived_system(), {3, 4});
    part.b.for_each([&](int r) {
      const RefinedPartition rp = refine(g, part, r);
      const AdjacencyProfile profile = adjacency_profile(g, rp);
      rp.a_far.for_each([&](int a) {
        const DerivedProfile m = derived_profile(g, rp, profile, a);
        CHECK(m.total() == 60);
        CHECK(m.m[3] <= 2);
        CHECK(m.m[4] <= 1);
        RationalVector free_values(2);
        free_values << Rational(m.m[3]), Rational(m.m[4]);
        const RationalVector predicted = family.evaluate(free_values);
        for (int i = 0; i < 5; ++i) CHECK(predicted(i) == Rational(m.m[i]));
      });
      CHECK_THROWS_AS(derived_profile(g, rp, profile, rp.a_near.members().front()), PreconditionError);
    });
  }
}

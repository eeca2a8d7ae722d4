// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gq/counting.hpp"
#include "gq/design.hpp"
#include "gq/gf4.hpp"
#include "gq/graph.hpp"
#include "gq/partition.hpp"
#include "gq/replay.hpp"
#include "gq/structure.hpp"

using namespace gq;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) note = what;
    ok = ok && condition;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const GQStructure& geometry() {
  static const GQStructure g = build_quadric_quadrangle();
  return g;
}

const PointGraph& graph() {
  static const PointGraph g = point_graph(geometry());
  return g;
}

Outcome construction() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const GQStructure g = geometry_from_string(geometry_to_string(build_quadric_quadrangle()));
  out.require(g.point_count() == 325, "point count");
  out.require(g.line_count() == 1105, "line count");
  for (const Line& line : g.lines()) out.require(line.size() == 5, "line size");
  for (int p = 0; p < g.point_count(); ++p) out.require(g.lines_through(p).size() == 17, "lines per point");
  out.require(seconds_since(start) < 10.0, "slower than 10 s");
  return out;
}

Outcome axioms() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const AxiomReport report = check_gq_axioms(geometry());
  out.require(report.degrees.passed, "axiom (i)");
  out.require(report.line_intersections.passed, "axiom (ii)");
  out.require(report.collinearity.passed, "axiom (iii)");
  out.require(seconds_since(start) < 30.0, "slower than 30 s");
  return out;
}

Outcome srg() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const SrgResult result = verify_srg(graph());
  out.require(result.ok() && *result.params == SrgParams{325, 68, 3, 17}, "parameters");
  out.require(result.pairs_checked == 325LL * 324 / 2, "pair count");
  out.require(seconds_since(start) < 30.0, "slower than 30 s");
  return out;
}

Outcome triads() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  const TriadScan full = scan_triads(graph(), 5, 4);
  out.require(full.triads == 2828800, "triad count " + std::to_string(full.triads));
  out.require(full.bad_trace == 0 && full.min_trace == 5 && full.max_trace == 5, "trace sizes");
  out.require(full.irregular == 0 && full.oversized_closure == 0 && full.max_closure == 5, "3-regularity");
  out.require(seconds_since(start) < 300.0, "exhaustive scan slower than 5 min");
  start = std::chrono::steady_clock::now();
  const TriadScan sample = scan_triads(graph(), 5, 4, 100000, 0);
  out.require(sample.triads >= 100000 && sample.bad_trace == 0 && sample.irregular == 0, "sampled scan");
  out.require(seconds_since(start) < 10.0, "sampled scan slower than 10 s");
  return out;
}

Outcome design() {
  Outcome out;
  std::vector<std::pair<int, int>> pairs{canonical_non_edge(graph())};
  for (const auto& pq : sample_non_edges(graph(), 50, 0))
    if (pq != pairs.front()) pairs.push_back(pq);
  out.require(pairs.size() >= 50, "sample size");
  for (const auto& [p, q] : pairs) {
    const Design d = design_from_partition(graph(), local_partition(graph(), p, q));
    out.require(verify_t_design(d, 3, 17, 5, 3).ok, "3-(17,5,3)");
    const LambdaResult lambdas = lambda_vector(d, 3);
    out.require(lambdas.ok() && *lambdas.lambdas == std::vector<std::int64_t>{204, 60, 15, 3}, "lambda vector");
    out.require(multiplicity_spectrum(d) == std::map<int, int>{{3, 68}}, "multiplicity spectrum");
    out.require(verify_t_design(d.support(), 3, 17, 5, 1).ok, "support 3-(17,5,1)");
  }
  return out;
}

Outcome profiles() {
  Outcome out;
  const auto [p, q] = canonical_non_edge(graph());
  const LocalPartition part = local_partition(graph(), p, q);
  const CountingSystem system = profile_system();
  int cases = 0;
  part.b.for_each([&](int r) {
    ++cases;
    const RefinedPartition refined = refine(graph(), part, r);
    const AdjacencyProfile profile = adjacency_profile(graph(), refined);
    out.require(profile.n[5] == 3, "n5");
    const RefinedCountsReport counts = refined_counts_check(graph(), refined, profile);
    out.require(counts.b_near_classes[0] == 24 && counts.b_near_classes[1] == 15, "B' split");
    out.require(counts.far_counts_ok && counts.far_point_counts.size() == 12, "|G(a) & B' & N0| = 10");
    RationalVector x(6);
    for (int i = 0; i < 6; ++i) x(i) = Rational(profile.n[i]);
    out.require(system.residual(x).cwiseEqual(Rational(0)).all(), "counting equations");
  });
  out.require(cases == 204, "case count");
  return out;
}

Outcome pair_law() {
  Outcome out;
  const auto [p, q] = canonical_non_edge(graph());
  const LocalPartition part = local_partition(graph(), p, q);
  const std::vector<int> b = part.b.members();
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (graph().adjacent(b[i], b[j])) continue;
      ++pairs;
      const PairLawReport law = pair_law_check(graph(), part, b[i], b[j]);
      out.require(law.in_b == 7 + law.k && law.holds(), "7 + k");
    }
  out.require(pairs > 0, "no pairs");
  return out;
}

Outcome counting_systems() {
  Outcome out;
  for (const ReferenceFamily& reference :
       {profile_family_reference(), restricted_profile_family_reference(), derived_family_reference()}) {
    const AffineSolutionFamily family = solve_counting_system(reference.system, reference.free);
    std::string where;
    out.require(matches_reference(family, reference, &where), reference.id + ": " + where);
    out.require(family_residual(reference.system, family).cwiseEqual(Rational(0)).all(), reference.id + " residual");
  }
  return out;
}

Outcome replays() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const ProofTrace l34 = replay_lemma(LemmaId::L3_4);
  out.require(l34.passed() && l34.steps.back().statement.find("feasible set empty") == 0, "L3.4");
  for (LemmaId id : {LemmaId::L3_12, LemmaId::L3_13, LemmaId::L3_14, LemmaId::L3_15, LemmaId::R3_5})
    out.require(replay_lemma(id).passed(), std::string(lemma_name(id)));
  const AffineSolutionFamily family = solve_counting_system(profile_system(), {0, 1});
  const std::vector<LinearConstraint> constraints = {LinearConstraint::equal(6, 5, 2),
                                                     LinearConstraint::at_least(6, 0, 36),
                                                     LinearConstraint::at_least(6, 1, 15)};
  out.require(enumerate_feasible_profiles(family, constraints, IntegerBox::uniform(2, 0, 204)).empty(),
              "n5 = 2 scan over [0, 204]^2");
  out.require(seconds_since(start) < 5.0, "slower than 5 s");
  return out;
}

Outcome properties() {
  Outcome out;
  for (GF4 a : GF4::elements()) {
    out.require(a + a == GF4::zero() && a * GF4::one() == a, "unary field axioms");
    for (GF4 b : GF4::elements()) {
      out.require(a + b == b + a && a * b == b * a, "commutativity");
      for (GF4 c : GF4::elements())
        out.require((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c, "associativity/distributivity");
    }
    if (!a.is_zero()) out.require(a * a.inverse() == GF4::one(), "inverses");
  }
  out.require(geometry_to_string(build_quadric_quadrangle()) == geometry_to_string(build_quadric_quadrangle()),
              "rebuild not byte-identical");
  PointGraph mutated = graph();
  const int v = mutated.neighbours(0).members().front();
  mutated.remove_edge(0, v);
  out.require(!verify_srg(mutated).ok(), "edge deletion not detected");
  for (LemmaId id : all_lemmas()) {
    const ReplayConstants constants = default_constants(id);
    for (const auto& [name, value] : constants) {
      ReplayConstants tampered = constants;
      tampered[name] = value + 1;
      out.require(!replay_lemma(id, tampered).passed(), std::string(lemma_name(id)) + " ignores " + name);
    }
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"construction: 325 points, 1105 lines, 5 points per line, 17 lines per point", construction},
      {"GQ axioms (i)-(iii) hold exhaustively", axioms},
      {"point graph is SRG(325, 68, 3, 17) over all pairs", srg},
      {"every triad has 5 common neighbours and is 3-regular", triads},
      {"3-(17,5,3) designs with lambda (204,60,15,3), spectrum {3: 68}, support 3-(17,5,1)", design},
      {"profiles of the canonical non-edge: n5 = 3, 24/15 split, 10 per far point, equations exact", profiles},
      {"pair law |G(x) & G(y) & B| = 7 + k on the canonical non-edge", pair_law},
      {"profile, restricted and derived counting families reproduced exactly", counting_systems},
      {"nonexistence replays pass and the n5 = 2 scan is empty", replays},
      {"field axioms, rebuild identity, edge-deletion and tamper sensitivity", properties},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.note = std::string("exception: ") + e.what();
    }
    const double elapsed = seconds_since(start);
    std::printf("%s %2d %s (%.2f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", index++, name.c_str(), elapsed,
                outcome.ok ? "" : ": ", outcome.note.c_str());
    failures += !outcome.ok;
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

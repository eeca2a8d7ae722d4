#include "gq/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gq/counting.hpp"
#include "gq/design.hpp"
#include "gq/graph.hpp"
#include "gq/partition.hpp"

namespace gq {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxWitnesses = 10;

const std::vector<std::pair<std::string, LemmaId>> kReplaySuites = {
    {"replay-L3.4", LemmaId::L3_4},   {"replay-L3.12", LemmaId::L3_12}, {"replay-L3.13", LemmaId::L3_13},
    {"replay-L3.14", LemmaId::L3_14}, {"replay-L3.15", LemmaId::L3_15}, {"replay-R3.5", LemmaId::R3_5},
};

const std::map<std::string, std::string, std::less<>> kAliases = {
    {"system-(*)", "system-star"},
    {"system-(**)", "system-double-star"},
    {"system-(***)", "system-triple-star"},
    {"B'N0-count", "bprime-n0-count"},
    {"B′N₀-count", "bprime-n0-count"},
    {"3regularity", "3-regularity"},
};

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

std::string pair_name(int p, int q) { return cat("{", p, ", ", q, "}"); }

/// Shared, lazily computed state for one verification run.
class Context {
 public:
  Context(const GQStructure& geometry, const VerifyOptions& options)
      : geometry_(geometry), options_(options), graph_(point_graph(geometry)) {}

  const GQStructure& geometry() const { return geometry_; }
  const VerifyOptions& options() const { return options_; }
  const PointGraph& graph() const { return graph_; }

  const TriadScan& triads() {
    if (!triads_) triads_ = scan_triads(graph_, kQuadricParams.s + 1, kQuadricParams.s, options_.sample, options_.seed);
    return *triads_;
  }

  /// Non-edges for the cheap per-(p, q) suites.
  const std::vector<std::pair<int, int>>& all_pairs() {
    if (!all_pairs_) {
      all_pairs_ = options_.sample ? sample_non_edges(graph_, static_cast<std::size_t>(*options_.sample), options_.seed)
                                   : non_edges(graph_);
    }
    return *all_pairs_;
  }

  /// Non-edges for the per-(p, q, r) suites: canonical plus a seeded sample, or all of them.
  const std::vector<std::pair<int, int>>& selected_pairs() {
    if (!selected_pairs_) {
      if (options_.deep) {
        selected_pairs_ = non_edges(graph_);
      } else {
        std::vector<std::pair<int, int>> pairs{canonical_non_edge(graph_)};
        for (const auto& pq : sample_non_edges(graph_, options_.non_edge_sample, options_.seed))
          if (pq != pairs.front()) pairs.push_back(pq);
        selected_pairs_ = std::move(pairs);
      }
    }
    return *selected_pairs_;
  }

 private:
  const GQStructure& geometry_;
  const VerifyOptions& options_;
  PointGraph graph_;
  std::optional<TriadScan> triads_;
  std::optional<std::vector<std::pair<int, int>>> all_pairs_;
  std::optional<std::vector<std::pair<int, int>>> selected_pairs_;
};

class SuiteRun {
 public:
  explicit SuiteRun(SuiteResult& result) : result_(result) { result_.passed = true; }

  void fail(const std::string& witness) {
    result_.passed = false;
    if (result_.witnesses.size() < kMaxWitnesses) result_.witnesses.push_back(witness);
  }
  void require(bool ok, const std::function<std::string()>& witness) {
    if (!ok) fail(witness());
  }
  void count(std::int64_t n = 1) { result_.checked += n; }
  json& details() { return result_.details; }

 private:
  SuiteResult& result_;
};

void witness_from_axiom(SuiteRun& run, const char* axiom, const AxiomCheck& check) {
  run.count(check.checked);
  if (check.passed) return;
  const AxiomWitness w = check.witness.value_or(AxiomWitness{});
  run.fail(cat(axiom, ": ", w.message, " (point ", w.point, ", line ", w.line, ", other line ", w.other_line,
               ", observed ", w.observed, ")"));
}

void suite_axioms(Context& ctx, SuiteRun& run) {
  const AxiomReport report = check_gq_axioms(ctx.geometry());
  witness_from_axiom(run, "degrees", report.degrees);
  witness_from_axiom(run, "line intersections", report.line_intersections);
  witness_from_axiom(run, "collinearity", report.collinearity);
  run.require(ctx.geometry().point_count() == kQuadricParams.point_count(),
              [&] { return cat("point count ", ctx.geometry().point_count()); });
  run.require(ctx.geometry().line_count() == kQuadricParams.line_count(),
              [&] { return cat("line count ", ctx.geometry().line_count()); });
  run.details() = {{"points", ctx.geometry().point_count()},
                   {"lines", ctx.geometry().line_count()},
                   {"s", kQuadricParams.s},
                   {"t", kQuadricParams.t}};
}

void suite_srg(Context& ctx, SuiteRun& run) {
  const SrgResult result = verify_srg(ctx.graph());
  run.count(result.pairs_checked);
  if (!result.ok()) {
    const SrgWitness w = result.witness.value_or(SrgWitness{});
    run.fail(cat(w.reason, " at ", pair_name(w.u, w.v), ", observed ", w.observed));
    return;
  }
  const SrgParams& p = *result.params;
  run.details() = {{"parameters", {p.v, p.k, p.lambda, p.mu}}};
  run.require(p == kQuadricSrg, [&] { return cat("parameters (", p.v, ", ", p.k, ", ", p.lambda, ", ", p.mu, ")"); });
}

void suite_coclique(Context& ctx, SuiteRun& run) {
  const PointGraph& g = ctx.graph();
  const int mu = kQuadricSrg.mu, off = kQuadricSrg.k - kQuadricSrg.mu;
  const int rest = g.size() - 2 - mu - 2 * off;
  for (const auto& [p, q] : ctx.all_pairs()) {
    const LocalPartition part = local_partition(g, p, q);
    run.count();
    const bool sizes = part.a.count() == mu && part.b.count() == rest && part.c.count() == off &&
                       part.d.count() == off;
    run.require(sizes && part.a_is_coclique, [&] {
      return cat(pair_name(p, q), ": |A|, |B|, |C|, |D| = ", part.a.count(), ", ", part.b.count(), ", ",
                 part.c.count(), ", ", part.d.count(), part.a_is_coclique ? "" : ", A not a coclique");
    });
  }
  run.details() = {{"non_edges", ctx.all_pairs().size()}, {"sizes", {mu, rest, off, off}}};
}

void suite_triads(Context& ctx, SuiteRun& run) {
  const TriadScan& scan = ctx.triads();
  run.count(scan.triads);
  if (scan.bad_trace > 0) {
    const auto t = scan.first_bad_trace.value_or(std::array<int, 3>{-1, -1, -1});
    run.fail(cat(scan.bad_trace, " triads with trace size != 5, first {", t[0], ", ", t[1], ", ", t[2], "}"));
  }
  run.details() = {{"trace_size_min", scan.min_trace},
                   {"trace_size_max", scan.max_trace},
                   {"mode", ctx.options().sample ? "sample" : "exhaustive"}};
}

void suite_3_regularity(Context& ctx, SuiteRun& run) {
  const TriadScan& scan = ctx.triads();
  run.count(scan.triads);
  if (scan.irregular > 0) {
    const auto t = scan.first_irregular.value_or(std::array<int, 3>{-1, -1, -1});
    run.fail(cat(scan.irregular, " triads not 3-regular, first {", t[0], ", ", t[1], ", ", t[2], "}"));
  }
  if (scan.oversized_closure > 0) run.fail(cat(scan.oversized_closure, " closures larger than s + 1"));
  run.details() = {{"closure_size_max", scan.max_closure},
                   {"mode", ctx.options().sample ? "sample" : "exhaustive"}};
}

template <typename F>
void for_each_design(Context& ctx, F&& f) {
  for (const auto& [p, q] : ctx.selected_pairs()) {
    const LocalPartition part = local_partition(ctx.graph(), p, q);
    f(p, q, design_from_partition(ctx.graph(), part));
  }
}

void suite_design(Context& ctx, SuiteRun& run) {
  for_each_design(ctx, [&](int p, int q, const Design& d) {
    run.count();
    const DesignCheck full = verify_t_design(d, 3, 17, 5, 3);
    run.require(full.ok, [&] { return cat(pair_name(p, q), ": not a 3-(17,5,3) design: ", full.witness.value_or("")); });
    const DesignCheck support = verify_t_design(d.support(), 3, 17, 5, 1);
    run.require(support.ok,
                [&] { return cat(pair_name(p, q), ": support not a 3-(17,5,1) design: ", support.witness.value_or("")); });
  });
  run.details() = {{"non_edges", ctx.selected_pairs().size()}, {"design", "3-(17,5,3)"}, {"support", "3-(17,5,1)"}};
}

std::string show_vector(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ")";
}

void suite_lambda(Context& ctx, SuiteRun& run) {
  const std::vector<std::int64_t> expected(std::begin(kProfileLambdas), std::end(kProfileLambdas));
  const std::vector<std::int64_t> expected_derived(std::begin(kDerivedLambdas), std::end(kDerivedLambdas));
  for_each_design(ctx, [&](int p, int q, const Design& d) {
    run.count();
    const LambdaResult lambdas = lambda_vector(d, 3);
    run.require(lambdas.ok() && *lambdas.lambdas == expected, [&] {
      if (!lambdas.ok()) return cat(pair_name(p, q), ": lambda not constant on level ", lambdas.witness->level);
      return cat(pair_name(p, q), ": lambda ", show_vector(*lambdas.lambdas));
    });
    for (int x = 0; x < d.v(); ++x) {
      const LambdaResult derived = lambda_vector(derived_design(d, x), 2);
      run.require(derived.ok() && *derived.lambdas == expected_derived,
                  [&] { return cat(pair_name(p, q), ": derived design at point ", x, " has other lambda"); });
    }
  });
  run.details() = {{"lambda", expected}, {"derived_lambda", expected_derived}};
}

void suite_multiplicity(Context& ctx, SuiteRun& run) {
  const std::map<int, int> expected = {{3, 68}};
  for_each_design(ctx, [&](int p, int q, const Design& d) {
    run.count();
    const auto spectrum = multiplicity_spectrum(d);
    run.require(spectrum == expected, [&] {
      std::string text;
      for (const auto& [m, c] : spectrum) text += cat(" ", m, ":", c);
      return cat(pair_name(p, q), ": spectrum", text);
    });
  });
  run.details() = {{"spectrum", {{"3", 68}}}};
}

/// Visits every (p, q, r) of the selected non-edges with r in B.
template <typename F>
void for_each_refinement(Context& ctx, F&& f) {
  for (const auto& [p, q] : ctx.selected_pairs()) {
    const LocalPartition part = local_partition(ctx.graph(), p, q);
    part.b.for_each([&](int r) {
      const RefinedPartition refined = refine(ctx.graph(), part, r);
      const AdjacencyProfile profile = adjacency_profile(ctx.graph(), refined);
      f(refined, profile);
    });
  }
}

std::string triple_name(const RefinedPartition& part) {
  return cat("(p, q, r) = (", part.base.p, ", ", part.base.q, ", ", part.r, ")");
}

void suite_lemma_3_2(Context& ctx, SuiteRun& run) {
  for_each_refinement(ctx, [&](const RefinedPartition& part, const AdjacencyProfile& profile) {
    run.count();
    const bool sizes = part.a_near.count() == 5 && part.a_far.count() == 12 && part.b_near.count() == 39 &&
                       part.c_near.count() == 12 && part.d_near.count() == 12;
    run.require(sizes, [&] {
      return cat(triple_name(part), ": |A'|, |A''|, |B'|, |C'|, |D'| = ", part.a_near.count(), ", ",
                 part.a_far.count(), ", ", part.b_near.count(), ", ", part.c_near.count(), ", ",
                 part.d_near.count());
    });
    const RefinedCountsReport report = refined_counts_check(ctx.graph(), part, profile);
    run.require(report.split_ok, [&] {
      return cat(triple_name(part), ": |B' & N0| = ", report.b_near_classes[0], ", |B' & N1| = ",
                 report.b_near_classes[1]);
    });
  });
  run.details() = {{"non_edges", ctx.selected_pairs().size()}, {"b_near_split", {24, 15}}};
}

void suite_bprime_n0(Context& ctx, SuiteRun& run) {
  for_each_refinement(ctx, [&](const RefinedPartition& part, const AdjacencyProfile& profile) {
    const RefinedCountsReport report = refined_counts_check(ctx.graph(), part, profile);
    run.count(static_cast<std::int64_t>(report.far_point_counts.size()));
    for (const auto& [a, seen] : report.far_point_counts)
      run.require(seen == 10, [&] { return cat(triple_name(part), ": a = ", a, " sees ", seen); });
  });
  run.details() = {{"expected", 10}};
}

void suite_lemma_3_8(Context& ctx, SuiteRun& run) {
  const PointGraph& g = ctx.graph();
  const auto pairs = ctx.options().deep ? ctx.selected_pairs()
                                        : std::vector<std::pair<int, int>>{canonical_non_edge(g)};
  std::map<int, std::int64_t> by_k;
  for (const auto& [p, q] : pairs) {
    const LocalPartition part = local_partition(g, p, q);
    const std::vector<int> b = part.b.members();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        if (g.adjacent(b[i], b[j])) continue;
        const PairLawReport law = pair_law_check(g, part, b[i], b[j]);
        run.count();
        ++by_k[law.k];
        run.require(law.holds(), [&] {
          return cat(pair_name(p, q), ", x = ", b[i], ", y = ", b[j], ": k = ", law.k, ", in B ", law.in_b, ", in C ",
                     law.in_c, ", in D ", law.in_d);
        });
      }
  }
  json histogram = json::object();
  for (const auto& [k, n] : by_k) histogram[std::to_string(k)] = n;
  run.details() = {{"non_edges", pairs.size()}, {"pairs_by_k", histogram}};
}

void suite_profile_n5(Context& ctx, SuiteRun& run) {
  const CountingSystem system = profile_system();
  std::map<std::vector<std::int64_t>, std::int64_t> observed;
  for_each_refinement(ctx, [&](const RefinedPartition& part, const AdjacencyProfile& profile) {
    run.count();
    std::vector<std::int64_t> n(profile.n.begin(), profile.n.end());
    ++observed[n];
    RationalVector x(6);
    for (int i = 0; i < 6; ++i) x(i) = Rational(n[i]);
    const bool equations = system.residual(x).cwiseEqual(Rational(0)).all();
    const bool fourth = n[5] == -186 + 4 * n[0] + n[1];
    run.require(n[5] == 3 && equations && fourth && profile.total() == 204 && profile.weighted_total() == 300,
                [&] { return cat(triple_name(part), ": profile ", show_vector(n)); });
  });
  json profiles = json::array();
  for (const auto& [n, c] : observed) profiles.push_back({{"n", n}, {"count", c}});
  run.details() = {{"non_edges", ctx.selected_pairs().size()}, {"profiles", profiles}};
}

void suite_derived_profile(Context& ctx, SuiteRun& run) {
  const CountingSystem system = derived_system();
  const AffineSolutionFamily family = solve_counting_system(system, {3, 4});
  int max_m3 = 0, max_m4 = 0;
  for_each_refinement(ctx, [&](const RefinedPartition& part, const AdjacencyProfile& profile) {
    part.a_far.for_each([&](int a) {
      const DerivedProfile m = derived_profile(ctx.graph(), part, profile, a);
      run.count();
      max_m3 = std::max(max_m3, m.m[3]);
      max_m4 = std::max(max_m4, m.m[4]);
      RationalVector free_values(2);
      free_values << Rational(m.m[3]), Rational(m.m[4]);
      const RationalVector predicted = family.evaluate(free_values);
      bool in_family = true;
      for (int i = 0; i < 5; ++i) in_family = in_family && predicted(i) == Rational(m.m[i]);
      run.require(in_family && m.total() == 60 && m.m[3] <= 2 && m.m[4] <= 1, [&] {
        return cat(triple_name(part), ", a = ", a, ": m = ",
                   show_vector(std::vector<std::int64_t>(m.m.begin(), m.m.end())));
      });
    });
  });
  run.details() = {{"max_m3", max_m3}, {"max_m4", max_m4}};
}

void suite_system(SuiteRun& run, const ReferenceFamily& reference) {
  const AffineSolutionFamily family = solve_counting_system(reference.system, reference.free);
  const bool residual = family_residual(reference.system, family).cwiseEqual(Rational(0)).all();
  std::string where;
  const bool matches = matches_reference(family, reference, &where);
  run.count(family.affine.size());
  run.require(residual, [] { return std::string("nonzero residual"); });
  run.require(matches, [&] { return "differs from the reference: " + where; });
  json rows = json::array();
  for (Eigen::Index i = 0; i < family.affine.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < family.affine.cols(); ++j) row.push_back(to_string(family.affine(i, j)));
    rows.push_back({{"unknown", reference.system.unknowns[static_cast<std::size_t>(i)]}, {"affine", row}});
  }
  run.details() = {{"family", reference.id}, {"rows", rows}};
}

void suite_replay(SuiteRun& run, LemmaId id) {
  const ProofTrace trace = replay_lemma(id);
  run.count(static_cast<std::int64_t>(std::count_if(trace.steps.begin(), trace.steps.end(), [](const ProofStep& s) {
    return s.kind == StepKind::Arithmetic;
  })));
  for (const ProofStep& step : trace.steps)
    if (step.verdict == Verdict::Failed) run.fail(step.statement + ": " + step.detail);
  if (!trace.passed()) run.fail("trace did not pass");
  run.details() = trace;
}

using SuiteFn = std::function<void(Context&, SuiteRun&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = [] {
    std::vector<std::pair<std::string, SuiteFn>> s = {
        {"axioms", suite_axioms},
        {"srg", suite_srg},
        {"coclique", suite_coclique},
        {"triads", suite_triads},
        {"3-regularity", suite_3_regularity},
        {"design", suite_design},
        {"lambda", suite_lambda},
        {"multiplicity", suite_multiplicity},
        {"lemma-3.2", suite_lemma_3_2},
        {"lemma-3.8", suite_lemma_3_8},
        {"profile-n5", suite_profile_n5},
        {"bprime-n0-count", suite_bprime_n0},
        {"derived-profile", suite_derived_profile},
        {"system-star", [](Context&, SuiteRun& run) { suite_system(run, profile_family_reference()); }},
        {"system-double-star",
         [](Context&, SuiteRun& run) { suite_system(run, restricted_profile_family_reference()); }},
        {"system-triple-star", [](Context&, SuiteRun& run) { suite_system(run, derived_family_reference()); }},
    };
    for (const auto& [name, id] : kReplaySuites) {
      const LemmaId lemma = id;
      s.emplace_back(name, [lemma](Context&, SuiteRun& run) { suite_replay(run, lemma); });
    }
    return s;
  }();
  return suites;
}

}  // namespace

bool VerificationReport::passed() const {
  return !suites.empty() && std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

const SuiteResult* VerificationReport::find(std::string_view id) const {
  for (const SuiteResult& s : suites)
    if (s.id == id) return &s;
  return nullptr;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

std::optional<std::string> canonical_suite_id(std::string_view name) {
  for (const std::string& id : suite_ids())
    if (id == name) return id;
  if (auto it = kAliases.find(name); it != kAliases.end()) return it->second;
  return std::nullopt;
}

VerificationReport run_verification(const GQStructure& geometry, const VerifyOptions& options) {
  std::vector<std::string> wanted;
  for (const std::string& name : options.suites) {
    const auto id = canonical_suite_id(name);
    if (!id) throw std::invalid_argument("unknown suite '" + name + "'");
    if (std::find(wanted.begin(), wanted.end(), *id) == wanted.end()) wanted.push_back(*id);
  }

  VerificationReport report;
  report.seed = options.seed;
  report.sample = options.sample;
  report.deep = options.deep;
  Context ctx(geometry, options);
  for (const auto& [id, fn] : registry()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), id) == wanted.end()) continue;
    SuiteResult result;
    result.id = id;
    const auto start = std::chrono::steady_clock::now();
    SuiteRun run(result);
    try {
      fn(ctx, run);
    } catch (const std::exception& e) {
      run.fail(std::string("exception: ") + e.what());
    }
    result.wall_us =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    report.suites.push_back(std::move(result));
  }
  return report;
}

// ---------------------------------------------------------------------------
// JSON

void to_json(json& j, const SuiteResult& suite) {
  j = {{"id", suite.id},
       {"status", suite.passed ? "pass" : "fail"},
       {"checked", suite.checked},
       {"witnesses", suite.witnesses},
       {"wall_us", suite.wall_us},
       {"details", suite.details}};
}

void from_json(const json& j, SuiteResult& suite) {
  suite.id = j.at("id").get<std::string>();
  const std::string status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") throw std::invalid_argument("suite status must be pass or fail");
  suite.passed = status == "pass";
  suite.checked = j.at("checked").get<std::int64_t>();
  suite.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  suite.wall_us = j.at("wall_us").get<std::int64_t>();
  suite.details = j.at("details");
}

void to_json(json& j, const VerificationReport& report) {
  j = {{"schema", report.schema},
       {"status", report.passed() ? "pass" : "fail"},
       {"input", report.input},
       {"seed", report.seed},
       {"sample", report.sample ? json(*report.sample) : json(nullptr)},
       {"deep", report.deep},
       {"suites", report.suites}};
}

void from_json(const json& j, VerificationReport& report) {
  report.schema = j.at("schema").get<int>();
  if (report.schema != kReportSchema) throw std::invalid_argument("unsupported report schema " + std::to_string(report.schema));
  report.input = j.at("input").get<std::string>();
  report.seed = j.at("seed").get<std::uint64_t>();
  const json& sample = j.at("sample");
  report.sample = sample.is_null() ? std::nullopt : std::optional<std::int64_t>(sample.get<std::int64_t>());
  report.deep = j.at("deep").get<bool>();
  report.suites = j.at("suites").get<std::vector<SuiteResult>>();
  if ((j.at("status").get<std::string>() == "pass") != report.passed())
    throw std::invalid_argument("report status disagrees with its suites");
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream os;
  if (!report.input.empty()) os << "input: " << report.input << '\n';
  os << "seed " << report.seed << ", " << (report.sample ? "sample " + std::to_string(*report.sample) : "exhaustive")
     << (report.deep ? ", deep" : "") << '\n';
  for (const SuiteResult& s : report.suites) {
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1f ms", static_cast<double>(s.wall_us) / 1000.0);
    os << (s.passed ? "PASS " : "FAIL ") << s.id << "  checked=" << s.checked << "  " << timing << '\n';
    for (const std::string& w : s.witnesses) os << "    witness: " << w << '\n';
  }
  os << "overall: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

namespace {

template <typename Enum>
Enum parse_enum(const std::string& text, std::initializer_list<Enum> values) {
  for (Enum v : values)
    if (to_string(v) == text) return v;
  throw std::invalid_argument("unknown trace token '" + text + "'");
}

}  // namespace

void to_json(json& j, const ProofTrace& trace) {
  json steps = json::array();
  for (const ProofStep& step : trace.steps) {
    json s = {{"kind", to_string(step.kind)},
              {"verdict", to_string(step.verdict)},
              {"statement", step.statement},
              {"detail", step.detail},
              {"citation", nullptr}};
    if (step.citation) s["citation"] = {{"ref", step.citation->ref}, {"statement", step.citation->statement}};
    steps.push_back(std::move(s));
  }
  j = {{"id", trace.id}, {"claim", trace.claim}, {"passed", trace.passed()}, {"steps", steps}};
}

void from_json(const json& j, ProofTrace& trace) {
  trace.id = j.at("id").get<std::string>();
  trace.claim = j.at("claim").get<std::string>();
  trace.steps.clear();
  for (const json& s : j.at("steps")) {
    ProofStep step;
    step.kind = parse_enum(s.at("kind").get<std::string>(),
                           {StepKind::Arithmetic, StepKind::Geometric, StepKind::Note, StepKind::Conclusion});
    step.verdict = parse_enum(s.at("verdict").get<std::string>(),
                              {Verdict::Verified, Verdict::Failed, Verdict::Assumed, Verdict::Noted});
    step.statement = s.at("statement").get<std::string>();
    step.detail = s.at("detail").get<std::string>();
    if (const json& c = s.at("citation"); !c.is_null())
      step.citation = Citation{c.at("ref").get<std::string>(), c.at("statement").get<std::string>()};
    trace.steps.push_back(std::move(step));
  }
}

std::string render_text(const ProofTrace& trace) {
  std::ostringstream os;
  os << trace.id << ": " << trace.claim << '\n';
  int index = 1;
  for (const ProofStep& step : trace.steps) {
    os << "  " << index++ << ". [" << to_string(step.kind) << ", " << to_string(step.verdict) << "] "
       << step.statement << '\n';
    if (!step.detail.empty()) os << "       " << step.detail << '\n';
    if (step.citation) os << "       cites " << step.citation->ref << ": " << step.citation->statement << '\n';
  }
  os << (trace.passed() ? "PASS " : "FAIL ") << trace.id << '\n';
  return os.str();
}

}  // namespace gq

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gq/design.hpp"
#include "gq/graph.hpp"
#include "gq/partition.hpp"
#include "gq/replay.hpp"
#include "gq/structure.hpp"
#include "gq/verifier.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw UsageError("cannot write '" + path + "'");
}

gq::GQStructure load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return gq::read_geometry(in);
  } catch (const gq::ParseError& e) {
    throw UsageError(path + ": parse error at " + e.what());
  } catch (const gq::StructureError& e) {
    throw UsageError(path + ": malformed geometry: " + e.what());
  }
}

int cmd_construct(const std::string& output) {
  const gq::GQStructure geometry = gq::build_quadric_quadrangle();
  emit(gq::geometry_to_string(geometry), output);
  std::cerr << "points " << geometry.point_count() << ", lines " << geometry.line_count() << '\n';
  return kExitPass;
}

struct VerifyArgs {
  std::string input;
  std::vector<std::string> suites;
  bool all = false;
  std::optional<std::int64_t> sample;
  std::uint64_t seed = 0;
  bool deep = false;
  std::string format = "text";
  std::string output;
};

int cmd_verify(const VerifyArgs& args) {
  gq::VerifyOptions options;
  if (!args.all) options.suites = args.suites;
  options.sample = args.sample;
  options.seed = args.seed;
  options.deep = args.deep;
  for (const std::string& s : options.suites)
    if (!gq::canonical_suite_id(s)) throw UsageError("unknown suite '" + s + "'");

  const gq::GQStructure geometry = load(args.input);
  gq::VerificationReport report = gq::run_verification(geometry, options);
  report.input = args.input;
  emit(args.format == "json" ? nlohmann::json(report).dump(2) + "\n" : gq::render_text(report), args.output);
  return report.passed() ? kExitPass : kExitFailed;
}

int cmd_replay(const std::vector<std::string>& ids, bool all, const std::string& format, const std::string& output) {
  std::vector<gq::LemmaId> lemmas;
  if (all || ids.empty()) {
    lemmas = gq::all_lemmas();
  } else {
    for (const std::string& id : ids) {
      const auto parsed = gq::parse_lemma_id(id);
      if (!parsed) throw UsageError("unknown lemma id '" + id + "' (expected L3.4, L3.12, L3.13, L3.14, L3.15 or R3.5)");
      lemmas.push_back(*parsed);
    }
  }
  bool passed = true;
  nlohmann::json traces = nlohmann::json::array();
  std::string text;
  for (gq::LemmaId id : lemmas) {
    const gq::ProofTrace trace = gq::replay_lemma(id);
    passed = passed && trace.passed();
    traces.push_back(trace);
    text += gq::render_text(trace) + "\n";
  }
  if (format == "json") {
    const nlohmann::json doc = {{"schema", gq::kReportSchema}, {"status", passed ? "pass" : "fail"}, {"traces", traces}};
    emit(doc.dump(2) + "\n", output);
  } else {
    emit(text, output);
  }
  return passed ? kExitPass : kExitFailed;
}

int cmd_design(const std::string& input, const std::vector<int>& non_edge, const std::string& output) {
  const gq::GQStructure geometry = load(input);
  const gq::PointGraph graph = gq::point_graph(geometry);
  auto [p, q] = gq::canonical_non_edge(graph);
  if (!non_edge.empty()) {
    p = non_edge[0];
    q = non_edge[1];
    if (p < 0 || q < 0 || p >= graph.size() || q >= graph.size()) throw UsageError("point index out of range");
  }
  try {
    const gq::LocalPartition part = gq::local_partition(graph, p, q);
    emit(gq::design_to_string(gq::design_from_partition(graph, part)), output);
  } catch (const gq::PreconditionError& e) {
    throw UsageError(e.what());
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct Q(5,4), verify its structure and replay the counting arguments"};
  app.require_subcommand(1);

  std::string construct_output;
  auto* construct = app.add_subcommand("construct", "Build Q(5,4) and write the geometry file");
  construct->add_option("-o,--output", construct_output, "Output path ('-' for stdout)")->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run verification suites on a geometry file");
  verify->add_option("input", verify_args.input, "Geometry file")->required();
  verify->add_flag("--all", verify_args.all, "Run every suite (default)");
  verify->add_option("--suite", verify_args.suites, "Suite id; repeatable");
  verify->add_option("--sample", verify_args.sample, "Reproducible sample size for triad and non-edge scans")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_args.seed, "Sampling seed");
  verify->add_flag("--deep", verify_args.deep, "Per-(p, q, r) suites over every non-edge");
  verify->add_option("--format", verify_args.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("-o,--output", verify_args.output, "Report path");

  std::vector<std::string> replay_ids;
  bool replay_all = false;
  std::string replay_format = "text", replay_output;
  auto* replay = app.add_subcommand("replay", "Replay the arithmetic of the nonexistence lemmas");
  replay->add_option("ids", replay_ids, "Lemma ids (L3.4, L3.12, L3.13, L3.14, L3.15, R3.5)");
  replay->add_flag("--all", replay_all, "Replay every lemma (default when no id is given)");
  replay->add_option("--format", replay_format, "Output format")->check(CLI::IsMember({"json", "text"}));
  replay->add_option("-o,--output", replay_output, "Output path");

  std::string design_input, design_output;
  std::vector<int> design_pair;
  auto* design = app.add_subcommand("design", "Export the design of a non-edge");
  design->add_option("input", design_input, "Geometry file")->required();
  design->add_option("--non-edge", design_pair, "Two non-collinear points (default: canonical non-edge)")
      ->expected(2);
  design->add_option("-o,--output", design_output, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(construct_output);
    if (*verify) return cmd_verify(verify_args);
    if (*replay) return cmd_replay(replay_ids, replay_all, replay_format, replay_output);
    if (*design) return cmd_design(design_input, design_pair, design_output);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "gq/verifier.hpp"

using namespace gq;

TEST_SUITE("verifier") {
  TEST_CASE("suite ids and aliases") {
    const auto& ids = suite_ids();
    for (const char* id : {"axioms", "srg", "coclique", "triads", "3-regularity", "design", "lambda", "multiplicity",
                           "lemma-3.2", "lemma-3.8", "profile-n5", "bprime-n0-count", "system-star",
                           "system-double-star", "system-triple-star", "replay-L3.4", "replay-L3.12", "replay-L3.13",
                           "replay-L3.14", "replay-L3.15", "replay-R3.5"})
      CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    CHECK(canonical_suite_id("system-(**)") == "system-double-star");
    CHECK(canonical_suite_id("B'N0-count") == "bprime-n0-count");
    CHECK_FALSE(canonical_suite_id("nope").has_value());
    CHECK_THROWS_AS(run_verification(test::quadrangle(), {{"nope"}}), std::invalid_argument);
  }

  TEST_CASE("sampled run passes everything and round-trips through JSON") {
    VerifyOptions options;
    options.sample = 2000;
    options.non_edge_sample = 3;
    VerificationReport report = run_verification(test::quadrangle(), options);
    report.input = "memory";
    CHECK(report.passed());
    CHECK(report.suites.size() == suite_ids().size());
    for (const SuiteResult& s : report.suites) {
      CAPTURE(s.id);
      CHECK(s.passed);
      CHECK(s.checked > 0);
      CHECK(s.witnesses.empty());
    }
    const SuiteResult* srg = report.find("srg");
    REQUIRE(srg);
    CHECK(srg->details.at("parameters") == nlohmann::json({325, 68, 3, 17}));

    const nlohmann::json j = report;
    CHECK(j.at("schema") == 1);
    CHECK(j.at("status") == "pass");
    CHECK(j.get<VerificationReport>() == report);
    CHECK(nlohmann::json::parse(j.dump()).get<VerificationReport>() == report);
    CHECK(render_text(report).find("overall: PASS") != std::string::npos);
  }

  TEST_CASE("a broken geometry fails with witnesses") {
    const GQStructure& g = test::quadrangle();
    std::vector<Coords> points(g.points().begin(), g.points().end());
    std::vector<Line> lines(g.lines().begin(), g.lines().end());
    lines.pop_back();
    VerifyOptions options;
    options.suites = {"axioms", "srg"};
    const VerificationReport report = run_verification(GQStructure(points, lines), options);
    CHECK_FALSE(report.passed());
    REQUIRE(report.suites.size() == 2);
    for (const SuiteResult& s : report.suites) {
      CHECK_FALSE(s.passed);
      CHECK_FALSE(s.witnesses.empty());
    }
    const VerificationReport back = nlohmann::json(report).get<VerificationReport>();
    CHECK(back == report);
    CHECK(render_text(report).find("FAIL axioms") != std::string::npos);
  }

  TEST_CASE("inconsistent or foreign reports are rejected") {
    VerifyOptions options;
    options.suites = {"system-star"};
    nlohmann::json j = run_verification(test::quadrangle(), options);
    nlohmann::json wrong_status = j;
    wrong_status["status"] = "fail";
    CHECK_THROWS(wrong_status.get<VerificationReport>());
    nlohmann::json wrong_schema = j;
    wrong_schema["schema"] = 2;
    CHECK_THROWS(wrong_schema.get<VerificationReport>());
    nlohmann::json missing = j;
    missing.erase("suites");
    CHECK_THROWS(missing.get<VerificationReport>());
  }

  TEST_CASE("proof traces round-trip") {
    for (LemmaId id : all_lemmas()) {
      const ProofTrace trace = replay_lemma(id);
      const nlohmann::json j = trace;
      CHECK(j.at("passed") == true);
      CHECK(j.get<ProofTrace>() == trace);
      CHECK(render_text(trace).find("PASS " + trace.id) != std::string::npos);
    }
  }
}

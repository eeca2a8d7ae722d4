#include <algorithm>

#include "doctest.h"
#include "gq/replay.hpp"

using namespace gq;

TEST_SUITE("replay") {
  TEST_CASE("every replay passes with its default constants") {
    for (LemmaId id : all_lemmas()) {
      const ProofTrace trace = replay_lemma(id);
      CAPTURE(trace.id);
      CHECK(trace.passed());
      REQUIRE_FALSE(trace.steps.empty());
      CHECK(trace.steps.back().kind == StepKind::Conclusion);
      for (const ProofStep& step : trace.steps) {
        if (step.kind == StepKind::Arithmetic) CHECK(step.verdict == Verdict::Verified);
        if (step.kind == StepKind::Geometric) {
          CHECK(step.verdict == Verdict::Assumed);
          CHECK(step.citation.has_value());
        }
      }
    }
  }

  TEST_CASE("ids") {
    CHECK(all_lemmas().size() == 6);
    for (LemmaId id : all_lemmas()) CHECK(parse_lemma_id(lemma_name(id)) == id);
    CHECK_FALSE(parse_lemma_id("L9.9").has_value());
    CHECK_THROWS_AS(replay_lemma(std::string_view("L9.9")), std::invalid_argument);
    CHECK(replay_lemma(std::string_view("L3.14")).id == "L3.14");
  }

  TEST_CASE("L3.4 ends in an empty feasible set") {
    const ProofTrace trace = replay_lemma(LemmaId::L3_4);
    CHECK(trace.steps.back().statement.find("feasible set empty") == 0);
    auto has = [&](const std::string& text) {
      return std::any_of(trace.steps.begin(), trace.steps.end(),
                         [&](const ProofStep& s) { return s.statement.find(text) != std::string::npos; });
    };
    CHECK(has("4·n0 + n1 = 188"));
    CHECK(has("m ≤ 47 − 36"));
    CHECK(has("m ≥ 13 contradicts m ≤ 11"));
  }

  TEST_CASE("L3.14 compares 40 against 24") {
    const ProofTrace trace = replay_lemma(LemmaId::L3_14);
    CHECK(std::any_of(trace.steps.begin(), trace.steps.end(),
                      [](const ProofStep& s) { return s.statement == "40 > 24" && s.verdict == Verdict::Verified; }));
  }

  TEST_CASE("L3.15 flags the summation variable") {
    const ProofTrace trace = replay_lemma(LemmaId::L3_15);
    CHECK(std::any_of(trace.steps.begin(), trace.steps.end(), [](const ProofStep& s) {
      return s.kind == StepKind::Note && s.statement.find("m3(c)") != std::string::npos;
    }));
  }

  TEST_CASE("R3.5 is a note over the n5 = 2 replay") {
    const ProofTrace trace = replay_lemma(LemmaId::R3_5);
    CHECK(trace.steps.front().kind == StepKind::Note);
    CHECK(trace.passed());
  }

  TEST_CASE("tampering with any single constant flips the verdict") {
    for (LemmaId id : all_lemmas()) {
      const ReplayConstants constants = default_constants(id);
      CHECK(constants.size() > 10);
      for (const auto& [name, value] : constants)
        for (int delta : {-1, 1}) {
          ReplayConstants tampered = constants;
          tampered[name] = value + delta;
          if (replay_lemma(id, tampered).passed())
            FAIL_CHECK(lemma_name(id), ": changing ", name, " by ", delta, " still passes");
        }
    }
  }

  TEST_CASE("weakening the n0 bound of L3.4 is caught") {
    ReplayConstants constants = default_constants(LemmaId::L3_4);
    constants["n0.lower"] = 24;
    constants["new_n0"] = 0;
    constants["m.upper"] = 23;
    const ProofTrace trace = replay_lemma(LemmaId::L3_4, constants);
    CHECK_FALSE(trace.passed());
    CHECK(trace.steps.back().verdict == Verdict::Failed);
  }

  TEST_CASE("a missing constant fails the trace instead of passing") {
    ReplayConstants constants = default_constants(LemmaId::L3_13);
    constants.erase("m3.cap");
    const ProofTrace trace = replay_lemma(LemmaId::L3_13, constants);
    CHECK_FALSE(trace.passed());
  }
}

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gq {

/// Arguments replayable as proof traces. Identifiers follow the
/// numbering used by the command line (`L3.4`, ..., `R3.5`).
enum class LemmaId { L3_4, L3_12, L3_13, L3_14, L3_15, R3_5 };

std::string_view lemma_name(LemmaId id);
std::optional<LemmaId> parse_lemma_id(std::string_view text);
std::vector<LemmaId> all_lemmas();

enum class StepKind {
  Arithmetic,  // checked here
  Geometric,   // cited and taken as an assumption
  Note,
  Conclusion,
};

enum class Verdict { Verified, Failed, Assumed, Noted };

std::string_view to_string(StepKind kind);
std::string_view to_string(Verdict verdict);

struct Citation {
  std::string ref;        // e.g. "L3.9", "GQ axiom (iii)", "setup"
  std::string statement;  // the cited fact as a formula

  friend bool operator==(const Citation&, const Citation&) = default;
};

struct ProofStep {
  StepKind kind = StepKind::Note;
  Verdict verdict = Verdict::Noted;
  std::string statement;
  std::string detail;
  std::optional<Citation> citation;

  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

struct ProofTrace {
  std::string id;
  std::string claim;
  std::vector<ProofStep> steps;

  /// Every arithmetic step verified and the trace ends in a verified conclusion.
  bool passed() const;

  friend bool operator==(const ProofTrace&, const ProofTrace&) = default;
};

/// Named integer constants a trace is built from. Every one of them enters
/// at least one checked equality or inequality.
using ReplayConstants = std::map<std::string, std::int64_t>;

ReplayConstants default_constants(LemmaId id);

/// A missing constant or arithmetic that does not check out produces Failed
/// steps rather than exceptions.
ProofTrace replay_lemma(LemmaId id, const ReplayConstants& constants);
ProofTrace replay_lemma(LemmaId id);
/// Throws std::invalid_argument for an unknown identifier.
ProofTrace replay_lemma(std::string_view id);

}  // namespace gq

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gq/replay.hpp"
#include "gq/structure.hpp"

namespace gq {

inline constexpr int kReportSchema = 1;

struct VerifyOptions {
  /// Suite ids to run; empty means every suite.
  std::vector<std::string> suites;
  /// Caps the triad and non-edge scans at this many reproducibly drawn items.
  std::optional<std::int64_t> sample;
  std::uint64_t seed = 0;
  /// Per-(p, q, r) suites over every non-edge instead of the canonical one plus a sample.
  bool deep = false;
  std::size_t non_edge_sample = 50;
};

struct SuiteResult {
  std::string id;
  bool passed = false;
  std::int64_t checked = 0;
  std::vector<std::string> witnesses;
  std::int64_t wall_us = 0;
  nlohmann::json details = nlohmann::json::object();

  friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

struct VerificationReport {
  int schema = kReportSchema;
  std::string input;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> sample;
  bool deep = false;
  std::vector<SuiteResult> suites;

  bool passed() const;
  const SuiteResult* find(std::string_view id) const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Every suite id, in execution order.
const std::vector<std::string>& suite_ids();
/// Resolves an id or one of its aliases ("system-(*)", "B'N0-count", ...).
std::optional<std::string> canonical_suite_id(std::string_view name);

/// Throws std::invalid_argument for an unknown suite id.
VerificationReport run_verification(const GQStructure& geometry, const VerifyOptions& options = {});

void to_json(nlohmann::json& j, const SuiteResult& suite);
void from_json(const nlohmann::json& j, SuiteResult& suite);
void to_json(nlohmann::json& j, const VerificationReport& report);
/// Throws nlohmann::json::exception or std::invalid_argument on a report that
/// is not schema-valid.
void from_json(const nlohmann::json& j, VerificationReport& report);

std::string render_text(const VerificationReport& report);

void to_json(nlohmann::json& j, const ProofTrace& trace);
void from_json(const nlohmann::json& j, ProofTrace& trace);
std::string render_text(const ProofTrace& trace);

}  // namespace gq

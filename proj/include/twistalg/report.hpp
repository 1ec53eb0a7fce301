#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistalg/pipeline.hpp"

namespace twistalg {

struct FrobeniusSummary {
  FrobWitness witness;
  std::vector<CheckResult> checks;
};

/// Everything a run reports; all members are deterministic for a fixed
/// problem file and seed.
struct PresentationReport {
  const Pipeline* pl = nullptr;
  std::uint64_t seed = 0;
  std::vector<CheckResult> verdicts;
  std::optional<FrobeniusSummary> frobenius;
};

std::string report_text(const PresentationReport& r);
std::string report_json(const PresentationReport& r);

/// Vertices and arrows only, arrows labelled w_i; relations stay in JSON.
std::string quiver_dot(const QuiverPresentation& q);

std::string presentation_to_json(const QuiverPresentation& q);
/// Throws ParseError on malformed input.
QuiverPresentation presentation_from_json(const std::string& text);

std::string oracle_text(const OracleReport& r);
/// Elapsed times are omitted unless asked for, keeping the output byte-stable.
std::string oracle_json(const OracleReport& r, bool timings = false);

/// A scalar printed as "zeta_n^k" with its field embedding, or "1".
std::string scalar_text(const RootScalar& z, const FieldSpec& f);
std::string field_text(const FieldSpec& f);

}  // namespace twistalg

#pragma once

// Worked examples as runnable fixtures. Expected polynomials, orbits and k-sets are transcribed
// verbatim; dimensions and minimum distances are frozen regression values from earlier runs.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcgoppa/codes.hpp"

namespace qcgoppa::fixtures {

enum class MatchMode { bit_exact, structural };

std::string_view mode_name(MatchMode m) noexcept;

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CodeRecord {
  std::string label;
  CodeReport report;
};

struct Result {
  std::string id;
  MatchMode mode = MatchMode::bit_exact;
  std::vector<Check> checks;
  /// Observations that are not pass/fail, such as inconsistencies in the transcribed data.
  std::vector<std::string> notes;
  std::vector<CodeRecord> codes;
  double seconds = 0;

  bool passed() const;
  std::size_t failures() const;
};

struct Options {
  /// Upgrades structural fixtures to coefficient-exact comparison.
  bool strict = false;
  unsigned threads = 1;
  /// Moduli for fields the transcription does not pin down (GF(32), GF(1024)).
  ModulusTable table = ModulusTable::builtin();
};

/// ex3_10, ex3_11, ex3_12, ex4_5, ex4_6, ex4_8, ex4_9.
const std::vector<std::string>& ids();
/// Throws InvalidArgument for an unknown id.
MatchMode default_mode(std::string_view id);
Result run(std::string_view id, const Options& opts = {});

/// G.H^T = 0, even weights for subcode and extended variants, the dimension bound, QC flags,
/// even minimum distance for subcodes. Does not consult regression values.
std::vector<Check> code_invariants(const CodeReport& r);

/// Frozen (dimension, minimum distance) for a code label, if recorded.
struct Regression {
  std::size_t dimension = 0;
  std::optional<unsigned> min_distance;
};
std::optional<Regression> regression_value(std::string_view label);

}  // namespace qcgoppa::fixtures

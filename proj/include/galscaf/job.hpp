#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galscaf/extension.hpp"
#include "galscaf/group_algebra.hpp"

#include "json.hpp"

namespace galscaf {

// Raised when the retry ladder exhausts the configured cap ceiling.
struct PrecisionCeiling : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficient table for an element of K[G]: (automorphism tuple, series
// terms) pairs.
using XiTable = std::vector<std::pair<std::vector<int>,
                                      std::vector<std::pair<std::int64_t, FqElem>>>>;

struct JobConfig {
  ExtensionSpec extension;
  std::string task;  // analyze | diagram | scaffold-verify | scaffold-build | roundtrip | falsify
  std::int64_t cap = 64;
  std::int64_t cap_ceiling = 4096;
  std::uint64_t seed = 0;
  std::optional<XiTable> xi;                 // diagram, scaffold-build
  std::optional<std::vector<XiTable>> scaffold;  // scaffold-verify
  std::int64_t budget = 64;                  // falsify
  std::optional<std::int64_t> max_precision;  // verification sweep bound

  // Strict parse: unknown fields are rejected with their path.
  static JobConfig from_json(const nlohmann::json& j);
  static JobConfig from_string(const std::string& text);
};

struct RunOptions {
  int threads = 1;
};

// Dispatch a job, retrying with doubled caps on InsufficientPrecision up
// to the ceiling. The certificate is reproduced bit-for-bit by identical
// configs (keys sorted, integers only, recorded seed and retry ladder).
nlohmann::json run_job(const JobConfig& config, const RunOptions& opts = {});

// Canonical serialization: "json" is sorted-key JSON with a trailing
// newline; "text" is a human-readable report.
std::string emit_certificate(const nlohmann::json& cert, const std::string& format);

// Helpers shared with the bindings and tests.
GroupAlgebraElem xi_from_table(const Extension& ext, const XiTable& table);
nlohmann::json series_to_json(const Series& s);
nlohmann::json xi_to_json(const GroupAlgebraElem& xi);

}  // namespace galscaf

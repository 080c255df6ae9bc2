#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "henselab/report.hpp"

namespace henselab {

/// Parse + dispatch failures carry the offending field name.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<long> precision_cap;
};

/// Runs a scenario given as JSON text. Resets the ambient registry, so runs
/// are idempotent for identical (scenario, seed, precision cap, version).
Report run_scenario_text(const std::string& json_text, const RunOverrides& overrides = {});

/// Loads the scenario file; ScenarioError on malformed input.
Report run_scenario_file(const std::string& path, const RunOverrides& overrides = {});

/// Canonical report serialization: fixed key order, two-space indent, UTF-8,
/// rationals and field elements as strings. Byte-identical for equal inputs.
std::string report_to_json(const Report& report);

/// Exit code contract: 0 all-pass, 1 any fail, 2 input error.
int exit_code_for(const Report& report);

}  // namespace henselab

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jamopt/scenario.hpp"

namespace jamopt {

/// Raised for malformed scenario documents; the message names the offending
/// field (and the line for syntax errors).
class ScenarioParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the JSON scenario document. Unknown fields are rejected.
Scenario parse_scenario_text(std::string_view text,
                             std::string_view source_name = "<string>");

Scenario load_scenario(const std::filesystem::path& path);

}  // namespace jamopt

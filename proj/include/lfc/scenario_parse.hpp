#pragma once

#include "lfc/scenario.hpp"

#include <string>

namespace lfc {

/// Parse and fully validate a scenario file. Either every invariant holds in
/// the returned Scenario or a ParseError/ValidationError pinpoints the file,
/// line, and section of the first offending entry. The format is documented
/// in docs/scenario-format.md.
Scenario parse_scenario(const std::string& path);

/// Same, operating on an in-memory document; `display_name` stands in for
/// the file path in diagnostics and output naming.
Scenario parse_scenario_text(const std::string& text, const std::string& display_name);

} // namespace lfc

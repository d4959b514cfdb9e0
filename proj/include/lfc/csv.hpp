#pragma once

#include "lfc/sim.hpp"

#include <string>
#include <vector>

namespace lfc {

/// Render a double in its shortest round-trip decimal form.
std::string format_double(double v);

/// Write `time,<output names...>` plus one row per recorded sample.
/// Shortest round-trip decimals, '.' separator, LF endings, newline after
/// the last row. Throws IoError on filesystem failure.
void emit_csv(const SimResult& result, const std::string& path);

struct CsvData {
    std::vector<std::string> names;               ///< header fields
    std::vector<std::vector<double>> columns;     ///< one per header field
};

/// Read back a CSV written by emit_csv (or any numeric CSV with a header).
CsvData read_csv(const std::string& path);

/// Human-readable metrics summary, one block per signal; every number is
/// recomputable from the CSV alone.
std::string format_metrics(const SimResult& result);

} // namespace lfc

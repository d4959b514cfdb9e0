#pragma once

#include "lfc/sim.hpp"

#include <string>
#include <vector>

namespace lfc {

/// Render the named signals of a result as a single SVG chart: time axis in
/// seconds, deviation axis in pu, a legend entry per signal. The output is a
/// pure function of the inputs; identical calls produce identical bytes.
/// Throws UnknownSignalError for an empty list or an unknown name, IoError
/// on write failure.
void emit_plot(const SimResult& result, const std::vector<std::string>& signals,
               const std::string& path);

} // namespace lfc

#pragma once

#include "lfc/scenario.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace lfc {

struct ResultBundle {
    std::filesystem::path csv;
    std::filesystem::path metrics;
    std::vector<std::filesystem::path> plots;
    bool diverged = false;
    SimResult result;
};

/// Assemble, integrate, and write the bundle under out_dir: <name>.csv,
/// <name>_metrics.txt, and, when plot signals are requested, a single
/// <name>_plot.svg chart holding them all. A diverging run still writes its
/// partial trajectory and flags the bundle instead of throwing.
ResultBundle run_scenario(const Scenario& scenario, const std::filesystem::path& out_dir,
                          const std::vector<std::string>& plot_signals = {});

} // namespace lfc

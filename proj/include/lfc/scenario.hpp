#pragma once

#include "lfc/control.hpp"
#include "lfc/network.hpp"
#include "lfc/sim.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lfc {

/// A fully validated, ready-to-run study: the interconnection, its
/// disturbances, the integration settings, and (optionally) a gain-search
/// request.
struct Scenario {
    std::string name;              ///< stem of the source file; names outputs
    SimConfig sim;
    double base_frequency = 50.0;  ///< Hz; display conversion only, pu inside
    MultiAreaSystem system;
    std::vector<Disturbance> disturbances;
    std::optional<TuningCriterion> tuning;
};

struct TuneResult {
    PIGains gains;
    double score = 0.0;
};

/// Exhaustive grid search over the criterion's Kp/Ki grids. Every area gets
/// the candidate gains (the (0,0) candidate means "no secondary control");
/// each candidate is scored by the criterion cost summed over the areas'
/// frequency deviations, with diverging or |df| > 10 pu runs scored +inf.
/// Ties break toward the smallest Ki, then the smallest Kp. Throws
/// AllUnstableError when no grid point survives.
TuneResult tune_gains(const Scenario& scenario, const TuningCriterion& criterion);

} // namespace lfc

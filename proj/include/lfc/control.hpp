#pragma once

#include "lfc/transfer_function.hpp"

#include <vector>

namespace lfc {

/// Secondary-loop controller gains. Pure integral control is Kp = 0, Ki > 0.
struct PIGains {
    double Kp = 0.0; ///< proportional gain, pu/pu; >= 0
    double Ki = 0.0; ///< integral gain, pu/(pu*s); >= 0

    bool operator==(const PIGains&) const = default;
};

/// Frequency bias weight inside the area control error.
struct BiasSetting {
    double B; ///< pu power per pu frequency; B > 0
};

/// (Kp s + Ki)/s. Throws ZeroControllerError when both gains are zero.
TransferFunction pi_controller_tf(const PIGains& g);

/// Primary-control-only steady-state frequency offset -dPL/(D + 1/R) for a
/// single area with unit-dc-gain governor and turbine. Disabled droop is
/// encoded as R = infinity (1/R = 0).
double steady_state_deviation(double dPL, double D, double R);

/// Area control error dPtie + B*df. Each area's secondary controller
/// integrates -ACE (with the bias term degenerating to plain -df for a
/// single-area system).
double ace(double df, double dPtie, const BiasSetting& b);

/// Uniform gain grid min, min+step, ..., max (inclusive within rounding).
struct GainGrid {
    double min = 0.0;
    double max = 0.0;
    double step = 1.0;

    std::vector<double> values() const;
};

/// Scalar cost used by the gain search.
enum class CostKind { ISE, ITAE };

/// Grid-search specification: cost kind, evaluation horizon, and the Kp/Ki
/// grids.
struct TuningCriterion {
    CostKind kind = CostKind::ISE;
    double horizon = 20.0; ///< seconds; must cover the settling region
    GainGrid kp;
    GainGrid ki;
};

} // namespace lfc

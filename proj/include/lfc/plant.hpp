#pragma once

#include "lfc/transfer_function.hpp"

#include <optional>

namespace lfc {

/// Synchronous machine plus composite frequency-dependent load.
struct GeneratorParams {
    double H; ///< inertia constant, seconds; H > 0
    double D; ///< load damping, pu power per pu frequency; D >= 0
};

/// Speed governor: first-order actuator with permanent droop R. Droop is a
/// feedback edge owned by the network assembly, not folded into the block.
struct GovernorParams {
    double tau_g; ///< time constant, seconds; tau_g > 0
    double R;     ///< speed regulation, pu frequency per pu power; R > 0
};

struct ThermalTurbineParams {
    double tau_t; ///< time constant, seconds; tau_t > 0
};

/// Ideal lossless hydro turbine (inelastic penstock, incompressible water).
/// R_t/T_r configure the transient-droop gate compensator; both must be
/// present when compensation is on, and then R_t > R and T_r > 0.
struct HydroTurbineParams {
    double T_w;                  ///< water starting time, seconds; T_w > 0
    bool compensation = true;    ///< transient-droop compensation switch
    std::optional<double> R_t;   ///< temporary droop, pu
    std::optional<double> T_r;   ///< reset time, seconds
};

/// 1/(2H s + D): frequency deviation per net accelerating power.
TransferFunction generator_tf(const GeneratorParams& p);

/// 1/(tau_g s + 1).
TransferFunction governor_tf(const GovernorParams& p);

/// 1/(tau_t s + 1).
TransferFunction thermal_turbine_tf(const ThermalTurbineParams& p);

/// (-T_w s + 1)/(0.5 T_w s + 1): non-minimum phase, right-half-plane zero at
/// s = 1/T_w. Its step response starts at -2x the final value.
TransferFunction hydro_turbine_tf(const HydroTurbineParams& p);

/// Hydro gate actuator. Compensation off: the plain first-order lag.
/// Compensation on: the lag in series with the transient-droop block
/// (1 + T_r s)/(1 + (R_t/R) T_r s), which slows gate motion enough to keep
/// the non-minimum-phase water column controllable.
/// Throws MissingCompensationParams when on without R_t/T_r.
TransferFunction hydro_governor_tf(const GovernorParams& g, const HydroTurbineParams& h,
                                   bool compensation);

} // namespace lfc

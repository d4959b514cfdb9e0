#pragma once

#include "lfc/control.hpp"
#include "lfc/plant.hpp"
#include "lfc/state_space.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lfc {

enum class AreaKind { Thermal, Hydro };

/// One control area: generator/load, governor, prime mover, optional
/// secondary controller, and the ACE frequency-bias weight.
struct AreaModel {
    std::string id;
    AreaKind kind = AreaKind::Thermal;
    GeneratorParams generator{5.0, 0.8};
    GovernorParams governor{0.2, 0.05};
    std::variant<ThermalTurbineParams, HydroTurbineParams> turbine =
        ThermalTurbineParams{0.5};
    std::optional<PIGains> controller;
    std::optional<double> bias; ///< B override; defaults to D + 1/R

    /// Frequency bias for ACE: the override if set, else the area frequency
    /// response characteristic D + 1/R.
    double effective_bias() const {
        return bias ? *bias : generator.D + 1.0 / governor.R;
    }
};

/// Transmission link between two areas. Interchange power is
/// T * (delta_from - delta_to) with the rotor-angle states driven by
/// d(delta)/dt = 2*pi*df, i.e. d(dPtie)/dt = 2*pi*T*(df_from - df_to).
struct TieLine {
    std::string from;
    std::string to;
    double T; ///< synchronizing coefficient, pu power per radian; T > 0
};

struct MultiAreaSystem {
    std::vector<AreaModel> areas;
    std::vector<TieLine> ties;
};

/// An assembled, integrable model: the state-space realization plus the
/// naming needed to address inputs/outputs and audit tie-line bookkeeping.
///
/// Inputs: dPL_<id> per area, then dPref_<id> per area. Outputs: df_<id> per
/// area, dPtie_<from>_<to> per tie, then dPm_<id>, dPv_<id>, ace_<id> per
/// area. Positive tie flow is power exported by `from` toward `to`.
struct SystemModel {
    StateSpace ss;
    std::vector<std::string> input_names;
    std::vector<std::string> output_names;
    std::vector<std::string> state_names;
    std::vector<std::string> area_ids;
    std::vector<TieLine> ties;

    int input_index(const std::string& name) const;  ///< -1 when absent
    int output_index(const std::string& name) const; ///< -1 when absent
};

/// Classical closed loop for one area: droop feedback into the governor
/// summing junction, plus the secondary integrator on -df when a controller
/// is configured. Inputs {dPL, dPref}, outputs {df, dPm, dPv, ace}.
SystemModel assemble_single_area(const AreaModel& area);

/// Tie-coupled interconnection. Each area's generator sees
/// dPm - dPL - (net tie export); controllers integrate -ACE (which reduces
/// to -df when the system has a single area). Throws UnknownAreaRef on
/// dangling tie endpoints.
SystemModel assemble_multi_area(const MultiAreaSystem& system);

struct SimResult; // sim.hpp

/// Conservation audit over a finished trajectory: every tie's reported flow
/// is the exact negation of what the opposite area sees (one shared state
/// expression, opposite sign), so the per-sample sum of all tie injections
/// must vanish to rounding. Returns false if any sample leaks power.
bool tie_antisymmetry_check(const SystemModel& model, const SimResult& trajectory);

} // namespace lfc

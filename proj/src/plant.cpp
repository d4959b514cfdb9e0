#include "lfc/plant.hpp"

#include "lfc/errors.hpp"

#include <stdexcept>

namespace lfc {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

TransferFunction first_order_lag(double tau) {
    return TransferFunction(Polynomial({1.0}), Polynomial({1.0, tau}));
}

} // namespace

TransferFunction generator_tf(const GeneratorParams& p) {
    require(p.H > 0.0, "generator: H must be > 0");
    require(p.D >= 0.0, "generator: D must be >= 0");
    return TransferFunction(Polynomial({1.0}), Polynomial({p.D, 2.0 * p.H}));
}

TransferFunction governor_tf(const GovernorParams& p) {
    require(p.tau_g > 0.0, "governor: tau_g must be > 0");
    require(p.R > 0.0, "governor: R must be > 0");
    return first_order_lag(p.tau_g);
}

TransferFunction thermal_turbine_tf(const ThermalTurbineParams& p) {
    require(p.tau_t > 0.0, "thermal turbine: tau_t must be > 0");
    return first_order_lag(p.tau_t);
}

TransferFunction hydro_turbine_tf(const HydroTurbineParams& p) {
    require(p.T_w > 0.0, "hydro turbine: T_w must be > 0");
    return TransferFunction(Polynomial({1.0, -p.T_w}), Polynomial({1.0, 0.5 * p.T_w}));
}

TransferFunction hydro_governor_tf(const GovernorParams& g, const HydroTurbineParams& h,
                                   bool compensation) {
    require(g.tau_g > 0.0, "hydro governor: tau_g must be > 0");
    require(g.R > 0.0, "hydro governor: R must be > 0");
    const TransferFunction lag = first_order_lag(g.tau_g);
    if (!compensation) return lag;
    if (!h.R_t || !h.T_r) {
        throw MissingCompensationParams(
            "hydro governor: compensation enabled but R_t/T_r not supplied");
    }
    require(*h.R_t > g.R, "hydro governor: temporary droop R_t must exceed permanent droop R");
    require(*h.T_r > 0.0, "hydro governor: reset time T_r must be > 0");
    const double stretched = (*h.R_t / g.R) * (*h.T_r);
    const TransferFunction droop_comp(Polynomial({1.0, *h.T_r}),
                                      Polynomial({1.0, stretched}));
    return series(lag, droop_comp);
}

} // namespace lfc

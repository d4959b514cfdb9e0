#include "lfc/control.hpp"

#include "lfc/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace lfc {

TransferFunction pi_controller_tf(const PIGains& g) {
    if (g.Kp < 0.0 || g.Ki < 0.0) {
        throw std::invalid_argument("pi controller: gains must be >= 0");
    }
    if (g.Kp == 0.0 && g.Ki == 0.0) {
        throw ZeroControllerError("pi controller: Kp and Ki are both zero");
    }
    return TransferFunction(Polynomial({g.Ki, g.Kp}), Polynomial({0.0, 1.0}));
}

double steady_state_deviation(double dPL, double D, double R) {
    const double beta = D + 1.0 / R;
    if (!(beta > 0.0)) {
        throw std::invalid_argument("steady_state_deviation: D + 1/R must be > 0");
    }
    return -dPL / beta;
}

double ace(double df, double dPtie, const BiasSetting& b) {
    return dPtie + b.B * df;
}

std::vector<double> GainGrid::values() const {
    if (!(std::isfinite(min) && std::isfinite(max) && std::isfinite(step))) {
        throw std::invalid_argument("gain grid: bounds and step must be finite");
    }
    if (max < min) throw std::invalid_argument("gain grid: max must be >= min");
    if (min == max) return {min};
    if (step <= 0.0) throw std::invalid_argument("gain grid: step must be > 0");
    std::vector<double> out;
    const double slack = 1e-9 * std::max(1.0, std::fabs(max));
    for (int i = 0;; ++i) {
        const double v = min + static_cast<double>(i) * step;
        if (v > max + slack) break;
        out.push_back(v);
    }
    return out;
}

} // namespace lfc

#pragma once

#include "lfc/errors.hpp"
#include "lfc/network.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace lfc {

struct StepShape {
    double t0 = 0.0;
    double magnitude = 0.0;
};

/// Linear rise from 0 at t0 to magnitude at t1, held afterwards.
struct RampShape {
    double t0 = 0.0;
    double t1 = 0.0;
    double magnitude = 0.0;
};

/// Zero-order-hold pseudo-random sequence, uniform in [-amplitude, amplitude].
/// The generator is the counter-based splitmix64 documented in
/// docs/scenario-format.md so runs are reproducible across implementations.
struct NoiseShape {
    double t0 = 0.0;
    double amplitude = 0.0;
    std::uint64_t seed = 0;
    double sample_interval = 0.1;
};

struct Disturbance {
    std::string target; ///< area id (load channel) or literal input name
    std::variant<StepShape, RampShape, NoiseShape> shape = StepShape{};
};

/// Value of the k-th held noise sample for a seed. Exposed so the documented
/// generator can be checked directly.
double noise_sample(std::uint64_t seed, std::uint64_t k);

/// Disturbance value at time t; step/ramp are exact, noise is held constant
/// over each sample interval. Right-continuous at discontinuities.
double disturbance_value(const Disturbance& d, double t);

/// Left limit at time t. Integration steps that END exactly on a
/// discontinuity must feed their terminal stage the pre-jump value or the
/// scheme drops to first order across the jump.
double disturbance_value_left(const Disturbance& d, double t);

struct SimConfig {
    double dt = 0.01;      ///< step, seconds; 0 < dt <= 0.1
    double t_end = 60.0;   ///< horizon, seconds; >= 1
    int record_stride = 1; ///< record every stride-th step; >= 1
};

/// Throws std::invalid_argument when a bound is violated.
void validate(const SimConfig& cfg);

struct ResponseMetrics {
    double peak_deviation = 0.0; ///< signed value of the largest-|.| sample
    double peak_time = 0.0;
    double settling_time = 0.0;  ///< 2% band around the final value
    bool settled = true;
    double steady_state = 0.0;   ///< mean of the last 5% of the horizon
};

/// Time-stamped trajectories plus per-signal response metrics. Metrics are
/// absent when the run diverged; the recorded prefix is still returned.
struct SimResult {
    std::vector<double> time;
    std::vector<std::string> names;
    std::vector<std::vector<double>> series; ///< [signal][sample]
    std::vector<ResponseMetrics> metrics;
    bool diverged = false;
    double diverged_at = 0.0;

    int index_of(const std::string& name) const; ///< -1 when absent
};

/// Integration blew past the plausibility bound; the partial trajectory up
/// to the last finite sample rides along.
class DivergenceError : public Error {
public:
    DivergenceError(const std::string& msg, SimResult partial_)
        : Error(msg), partial(std::move(partial_)) {}

    SimResult partial;
};

/// Classical fixed-step RK4 on xdot = A x + B u(t) from the zero state,
/// inputs evaluated exactly at stage times. Throws DivergenceError when any
/// state leaves [-1e6, 1e6]; throws UnknownAreaRef for unresolvable targets.
SimResult integrate(const SystemModel& model, const std::vector<Disturbance>& inputs,
                    const SimConfig& cfg);

/// Same integration but divergence is reported through the result flag
/// instead of an exception; gain-search loops scan grids with this.
SimResult integrate_flagged(const SystemModel& model,
                            const std::vector<Disturbance>& inputs,
                            const SimConfig& cfg);

/// Realize a transfer function and apply a unit step at t = 0. The single
/// output is named "y".
SimResult step_response(const TransferFunction& g, const SimConfig& cfg);

ResponseMetrics compute_metrics(const std::vector<double>& series,
                                const std::vector<double>& time);

/// Successive dt-halving self-check. diffs[j] is the max-norm distance
/// between refinement j and j+1 on the shared sample grid; for an order-4
/// scheme the ratio diffs[j]/diffs[j+1] sits near 16.
struct ProbeReport {
    std::vector<double> dts;
    std::vector<double> diffs;
    std::vector<double> ratios;
    bool exact = false; ///< differences at rounding level; ratios undefined
};

ProbeReport convergence_probe(const SystemModel& model,
                              const std::vector<Disturbance>& inputs,
                              const SimConfig& cfg, int refinements = 3);

} // namespace lfc

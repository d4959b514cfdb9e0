#include "lfc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lfc {

namespace {

constexpr double kStateBound = 1e6;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

} // namespace

double noise_sample(std::uint64_t seed, std::uint64_t k) {
    const std::uint64_t word = mix64(seed + (k + 1) * 0x9E3779B97F4A7C15ULL);
    const double unit = static_cast<double>(word >> 11) * 0x1.0p-53; // [0,1)
    return 2.0 * unit - 1.0;
}

namespace {

double shape_value(const Disturbance& d, double t, bool left_limit) {
    if (const auto* s = std::get_if<StepShape>(&d.shape)) {
        return (left_limit ? t > s->t0 : t >= s->t0) ? s->magnitude : 0.0;
    }
    if (const auto* r = std::get_if<RampShape>(&d.shape)) {
        // continuous: the left limit equals the value
        if (t < r->t0) return 0.0;
        if (t >= r->t1) return r->magnitude;
        return r->magnitude * (t - r->t0) / (r->t1 - r->t0);
    }
    const auto& noise = std::get<NoiseShape>(d.shape);
    if (t < noise.t0 || (left_limit && t == noise.t0)) return 0.0;
    const double pos = (t - noise.t0) / noise.sample_interval;
    double k = std::floor(pos);
    if (left_limit && k == pos) {
        if (k == 0.0) return 0.0;
        k -= 1.0;
    }
    return noise.amplitude * noise_sample(noise.seed, static_cast<std::uint64_t>(k));
}

} // namespace

double disturbance_value(const Disturbance& d, double t) {
    return shape_value(d, t, false);
}

double disturbance_value_left(const Disturbance& d, double t) {
    return shape_value(d, t, true);
}

void validate(const SimConfig& cfg) {
    if (!(cfg.dt > 0.0) || cfg.dt > 0.1) {
        throw std::invalid_argument("sim config: dt must be in (0, 0.1]");
    }
    if (!(cfg.t_end >= 1.0)) {
        throw std::invalid_argument("sim config: t_end must be >= 1 s");
    }
    if (cfg.record_stride < 1) {
        throw std::invalid_argument("sim config: record_stride must be >= 1");
    }
}

int SimResult::index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

namespace {

struct BoundInput {
    int channel;
    const Disturbance* dist;
};

std::vector<BoundInput> bind_inputs(const SystemModel& model,
                                    const std::vector<Disturbance>& inputs) {
    std::vector<BoundInput> bound;
    bound.reserve(inputs.size());
    for (const auto& d : inputs) {
        int idx = model.input_index("dPL_" + d.target);
        if (idx < 0) idx = model.input_index(d.target);
        if (idx < 0) {
            throw UnknownAreaRef("disturbance targets unknown area or input '" + d.target + "'");
        }
        bound.push_back({idx, &d});
    }
    return bound;
}

SimResult integrate_core(const SystemModel& model, const std::vector<Disturbance>& inputs,
                         const SimConfig& cfg) {
    validate(cfg);
    const auto bound = bind_inputs(model, inputs);

    const int n = model.ss.order();
    const int m = model.ss.num_inputs();
    const int p = model.ss.num_outputs();
    const double dt = cfg.dt;
    const auto total_steps = static_cast<long>(std::floor(cfg.t_end / dt + 1e-9));

    SimResult res;
    res.names = model.output_names;
    res.series.resize(static_cast<std::size_t>(p));
    const std::size_t expected =
        static_cast<std::size_t>(total_steps / cfg.record_stride) + 1;
    res.time.reserve(expected);
    for (auto& s : res.series) s.reserve(expected);

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd u = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd k1(n), k2(n), k3(n), k4(n), xs(n), y(p);

    auto eval_u = [&](double t) {
        u.setZero();
        for (const auto& b : bound) {
            u(b.channel) += disturbance_value(*b.dist, t);
        }
    };
    auto eval_u_left = [&](double t) {
        u.setZero();
        for (const auto& b : bound) {
            u(b.channel) += disturbance_value_left(*b.dist, t);
        }
    };

    for (long k = 0;; ++k) {
        const double t = static_cast<double>(k) * dt;
        if (k % cfg.record_stride == 0) {
            eval_u(t);
            y.noalias() = model.ss.C * x + model.ss.D * u;
            res.time.push_back(t);
            for (int j = 0; j < p; ++j) {
                res.series[static_cast<std::size_t>(j)].push_back(y(j));
            }
        }
        if (k == total_steps) break;

        eval_u(t);
        k1.noalias() = model.ss.A * x + model.ss.B * u;
        eval_u(t + 0.5 * dt);
        xs.noalias() = x + (0.5 * dt) * k1;
        k2.noalias() = model.ss.A * xs + model.ss.B * u;
        xs.noalias() = x + (0.5 * dt) * k2;
        k3.noalias() = model.ss.A * xs + model.ss.B * u;
        eval_u_left(t + dt); // pre-jump value when a discontinuity sits on the node
        xs.noalias() = x + dt * k3;
        k4.noalias() = model.ss.A * xs + model.ss.B * u;
        x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (n > 0 && (!x.allFinite() || x.cwiseAbs().maxCoeff() > kStateBound)) {
            res.diverged = true;
            res.diverged_at = t + dt;
            break;
        }
    }

    if (!res.diverged) {
        res.metrics.reserve(static_cast<std::size_t>(p));
        for (const auto& s : res.series) {
            res.metrics.push_back(compute_metrics(s, res.time));
        }
    }
    return res;
}

} // namespace

SimResult integrate_flagged(const SystemModel& model,
                            const std::vector<Disturbance>& inputs,
                            const SimConfig& cfg) {
    return integrate_core(model, inputs, cfg);
}

SimResult integrate(const SystemModel& model, const std::vector<Disturbance>& inputs,
                    const SimConfig& cfg) {
    SimResult res = integrate_core(model, inputs, cfg);
    if (res.diverged) {
        const double at = res.diverged_at;
        throw DivergenceError("integration diverged at t = " + std::to_string(at) + " s",
                              std::move(res));
    }
    return res;
}

SimResult step_response(const TransferFunction& g, const SimConfig& cfg) {
    StateSpace ss = to_state_space(g);
    std::vector<std::string> states;
    for (int i = 0; i < ss.order(); ++i) states.push_back("x" + std::to_string(i));
    SystemModel model{std::move(ss), {"u"}, {"y"}, std::move(states), {}, {}};
    return integrate(model, {Disturbance{"u", StepShape{0.0, 1.0}}}, cfg);
}

ResponseMetrics compute_metrics(const std::vector<double>& series,
                                const std::vector<double>& time) {
    if (series.empty() || series.size() != time.size()) {
        throw std::invalid_argument("compute_metrics: series and time must be non-empty and equal length");
    }
    ResponseMetrics out;

    std::size_t peak_idx = 0;
    for (std::size_t i = 1; i < series.size(); ++i) {
        if (std::fabs(series[i]) > std::fabs(series[peak_idx])) peak_idx = i;
    }
    out.peak_deviation = series[peak_idx];
    out.peak_time = time[peak_idx];

    const auto tail = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(0.05 * static_cast<double>(series.size()))));
    double acc = 0.0;
    for (std::size_t i = series.size() - tail; i < series.size(); ++i) acc += series[i];
    out.steady_state = acc / static_cast<double>(tail);

    const double band = std::max(0.02 * std::fabs(out.steady_state), 1e-6);
    std::size_t last_violation = series.size(); // sentinel: none
    for (std::size_t i = series.size(); i-- > 0;) {
        if (std::fabs(series[i] - out.steady_state) > band) {
            last_violation = i;
            break;
        }
    }
    if (last_violation == series.size()) {
        out.settling_time = time.front();
        out.settled = true;
    } else if (last_violation + 1 == series.size()) {
        out.settling_time = time.back();
        out.settled = false;
    } else {
        out.settling_time = time[last_violation + 1];
        out.settled = true;
    }
    return out;
}

ProbeReport convergence_probe(const SystemModel& model,
                              const std::vector<Disturbance>& inputs,
                              const SimConfig& cfg, int refinements) {
    if (refinements < 1) {
        throw std::invalid_argument("convergence_probe: need at least one refinement");
    }
    ProbeReport rep;
    std::vector<SimResult> runs;
    for (int j = 0; j <= refinements; ++j) {
        const double scale = static_cast<double>(1 << j);
        SimConfig level{cfg.dt / scale, cfg.t_end, cfg.record_stride * (1 << j)};
        rep.dts.push_back(level.dt);
        runs.push_back(integrate(model, inputs, level));
    }

    double signal_scale = 0.0;
    for (const auto& s : runs.back().series) {
        for (double v : s) signal_scale = std::max(signal_scale, std::fabs(v));
    }

    for (int j = 0; j < refinements; ++j) {
        const auto& a = runs[static_cast<std::size_t>(j)];
        const auto& b = runs[static_cast<std::size_t>(j) + 1];
        const std::size_t samples = std::min(a.time.size(), b.time.size());
        double diff = 0.0;
        for (std::size_t sig = 0; sig < a.series.size(); ++sig) {
            for (std::size_t k = 0; k < samples; ++k) {
                diff = std::max(diff, std::fabs(a.series[sig][k] - b.series[sig][k]));
            }
        }
        rep.diffs.push_back(diff);
    }

    const double floor_tol = 1e-13 * std::max(1.0, signal_scale);
    rep.exact = std::all_of(rep.diffs.begin(), rep.diffs.end(),
                            [&](double d) { return d <= floor_tol; });
    if (!rep.exact) {
        for (std::size_t j = 0; j + 1 < rep.diffs.size(); ++j) {
            if (rep.diffs[j + 1] > 0.0) {
                rep.ratios.push_back(rep.diffs[j] / rep.diffs[j + 1]);
            }
        }
    }
    return rep;
}

} // namespace lfc

#include "lfc/scenario.hpp"

#include "lfc/errors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lfc {

namespace {

constexpr double kDivergedFrequency = 10.0; // pu; far outside any physical excursion

double cost_of_run(const SimResult& res, const SystemModel& model, CostKind kind,
                   double dt) {
    if (res.diverged) return std::numeric_limits<double>::infinity();
    double total = 0.0;
    for (const auto& id : model.area_ids) {
        const int idx = res.index_of("df_" + id);
        const auto& df = res.series[static_cast<std::size_t>(idx)];
        for (std::size_t k = 0; k < df.size(); ++k) {
            const double v = df[k];
            if (std::fabs(v) > kDivergedFrequency) {
                return std::numeric_limits<double>::infinity();
            }
            total += kind == CostKind::ISE ? v * v * dt : res.time[k] * std::fabs(v) * dt;
        }
    }
    return total;
}

} // namespace

TuneResult tune_gains(const Scenario& scenario, const TuningCriterion& criterion) {
    if (!(criterion.horizon > 0.0)) {
        throw std::invalid_argument("tune_gains: horizon must be > 0");
    }
    const std::vector<double> kps = criterion.kp.values();
    const std::vector<double> kis = criterion.ki.values();

    const SimConfig cfg{scenario.sim.dt, criterion.horizon, 1};

    bool any_finite = false;
    double best_score = std::numeric_limits<double>::infinity();
    PIGains best{};
    bool first = true;

    for (double ki : kis) {
        for (double kp : kps) {
            MultiAreaSystem candidate = scenario.system;
            for (auto& area : candidate.areas) {
                if (kp == 0.0 && ki == 0.0) {
                    area.controller.reset();
                } else {
                    area.controller = PIGains{kp, ki};
                }
            }
            const SystemModel model = assemble_multi_area(candidate);
            const SimResult res = integrate_flagged(model, scenario.disturbances, cfg);
            const double score = cost_of_run(res, model, criterion.kind, cfg.dt);
            if (std::isfinite(score)) any_finite = true;

            // argmin with deterministic tie-break: score, then Ki, then Kp
            const bool better =
                first || score < best_score ||
                (score == best_score &&
                 (ki < best.Ki || (ki == best.Ki && kp < best.Kp)));
            if (better) {
                best_score = score;
                best = PIGains{kp, ki};
                first = false;
            }
        }
    }

    if (!any_finite) {
        throw AllUnstableError("tune_gains: every grid point diverged");
    }
    return TuneResult{best, best_score};
}

} // namespace lfc

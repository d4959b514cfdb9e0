#include "lfc/network.hpp"

#include "lfc/errors.hpp"
#include "lfc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace lfc {

namespace {

/// A scalar signal expressed as a linear form over the global state and
/// input vectors. Block wiring is plain arithmetic on these.
struct LinForm {
    Eigen::RowVectorXd x;
    Eigen::RowVectorXd u;

    LinForm(int n, int m)
        : x(Eigen::RowVectorXd::Zero(n)), u(Eigen::RowVectorXd::Zero(m)) {}

    LinForm& operator+=(const LinForm& o) {
        x += o.x;
        u += o.u;
        return *this;
    }
    LinForm& operator-=(const LinForm& o) {
        x -= o.x;
        u -= o.u;
        return *this;
    }
    friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
    friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
    friend LinForm operator*(double k, LinForm f) {
        f.x *= k;
        f.u *= k;
        return f;
    }
};

struct AreaWork {
    const AreaModel* area;
    StateSpace gen;
    StateSpace gov;
    StateSpace turb;
    int gen_off = -1;
    int gov_off = -1;
    int turb_off = -1;
    int ctrl_off = -1;
    int delta_off = -1;
};

StateSpace realize_governor(const AreaModel& a) {
    if (a.kind == AreaKind::Thermal) {
        return to_state_space(governor_tf(a.governor));
    }
    const auto& h = std::get<HydroTurbineParams>(a.turbine);
    return to_state_space(hydro_governor_tf(a.governor, h, h.compensation));
}

StateSpace realize_turbine(const AreaModel& a) {
    if (a.kind == AreaKind::Thermal) {
        return to_state_space(thermal_turbine_tf(std::get<ThermalTurbineParams>(a.turbine)));
    }
    return to_state_space(hydro_turbine_tf(std::get<HydroTurbineParams>(a.turbine)));
}

void validate_system(const MultiAreaSystem& sys) {
    if (sys.areas.empty()) {
        throw std::invalid_argument("assemble: system needs at least one area");
    }
    std::set<std::string> ids;
    for (const auto& a : sys.areas) {
        if (a.id.empty()) throw std::invalid_argument("assemble: area id must be non-empty");
        if (!ids.insert(a.id).second) {
            throw std::invalid_argument("assemble: duplicate area id '" + a.id + "'");
        }
        const bool thermal_kind = a.kind == AreaKind::Thermal;
        const bool thermal_turb = std::holds_alternative<ThermalTurbineParams>(a.turbine);
        if (thermal_kind != thermal_turb) {
            throw std::invalid_argument("assemble: area '" + a.id +
                                        "' kind does not match its turbine parameters");
        }
        if (a.controller && a.controller->Kp == 0.0 && a.controller->Ki == 0.0) {
            throw ZeroControllerError("assemble: area '" + a.id +
                                      "' controller has Kp = Ki = 0");
        }
        if (a.effective_bias() <= 0.0) {
            throw std::invalid_argument("assemble: area '" + a.id + "' bias must be > 0");
        }
    }
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& t : sys.ties) {
        if (t.from == t.to) {
            throw std::invalid_argument("assemble: tie endpoints must differ");
        }
        if (!ids.count(t.from)) throw UnknownAreaRef("tie references unknown area '" + t.from + "'");
        if (!ids.count(t.to)) throw UnknownAreaRef("tie references unknown area '" + t.to + "'");
        if (!(t.T > 0.0)) throw std::invalid_argument("assemble: tie coefficient T must be > 0");
        auto key = std::minmax(t.from, t.to);
        if (!pairs.insert(key).second) {
            throw std::invalid_argument("assemble: duplicate tie between '" + t.from +
                                        "' and '" + t.to + "'");
        }
    }
}

} // namespace

int SystemModel::input_index(const std::string& name) const {
    auto it = std::find(input_names.begin(), input_names.end(), name);
    return it == input_names.end() ? -1 : static_cast<int>(it - input_names.begin());
}

int SystemModel::output_index(const std::string& name) const {
    auto it = std::find(output_names.begin(), output_names.end(), name);
    return it == output_names.end() ? -1 : static_cast<int>(it - output_names.begin());
}

SystemModel assemble_single_area(const AreaModel& area) {
    return assemble_multi_area(MultiAreaSystem{{area}, {}});
}

SystemModel assemble_multi_area(const MultiAreaSystem& sys) {
    validate_system(sys);

    const int na = static_cast<int>(sys.areas.size());
    const bool single = na == 1;

    std::vector<AreaWork> work;
    work.reserve(static_cast<std::size_t>(na));
    std::vector<std::string> state_names;

    int n = 0;
    for (int i = 0; i < na; ++i) {
        const AreaModel& a = sys.areas[static_cast<std::size_t>(i)];
        AreaWork w{&a, to_state_space(generator_tf(a.generator)), realize_governor(a),
                   realize_turbine(a)};

        w.gen_off = n;
        n += w.gen.order();
        state_names.push_back(a.id + ".gen");
        w.gov_off = n;
        for (int k = 0; k < w.gov.order(); ++k) {
            state_names.push_back(a.id + ".gov" + std::to_string(k));
        }
        n += w.gov.order();
        w.turb_off = n;
        for (int k = 0; k < w.turb.order(); ++k) {
            state_names.push_back(a.id + ".turb" + std::to_string(k));
        }
        n += w.turb.order();
        if (a.controller) {
            w.ctrl_off = n++;
            state_names.push_back(a.id + ".ctrl");
        }
        work.push_back(std::move(w));
    }
    // rotor-angle states only where a tie needs them
    for (int i = 0; i < na; ++i) {
        const std::string& id = sys.areas[static_cast<std::size_t>(i)].id;
        const bool incident = std::any_of(sys.ties.begin(), sys.ties.end(),
                                          [&](const TieLine& t) {
                                              return t.from == id || t.to == id;
                                          });
        if (incident) {
            work[static_cast<std::size_t>(i)].delta_off = n++;
            state_names.push_back(id + ".delta");
        }
    }

    const int m = 2 * na;
    std::vector<std::string> input_names;
    for (const auto& a : sys.areas) input_names.push_back("dPL_" + a.id);
    for (const auto& a : sys.areas) input_names.push_back("dPref_" + a.id);

    auto state = [&](int idx) {
        LinForm f(n, m);
        f.x(idx) = 1.0;
        return f;
    };
    auto input = [&](int idx) {
        LinForm f(n, m);
        f.u(idx) = 1.0;
        return f;
    };
    // output of a SISO block given its state offset and scalar input signal
    auto block_output = [&](const StateSpace& blk, int off, const LinForm& in) {
        LinForm f(n, m);
        for (int k = 0; k < blk.order(); ++k) f.x(off + k) = blk.C(0, k);
        f += blk.D(0, 0) * in;
        return f;
    };

    // per-area frequency deviation
    std::vector<LinForm> df;
    df.reserve(static_cast<std::size_t>(na));
    for (const auto& w : work) {
        df.push_back(block_output(w.gen, w.gen_off, LinForm(n, m)));
    }

    auto area_index = [&](const std::string& id) {
        for (int i = 0; i < na; ++i) {
            if (sys.areas[static_cast<std::size_t>(i)].id == id) return i;
        }
        return -1;
    };

    // tie flows and per-area net export
    std::vector<LinForm> flows;
    std::vector<LinForm> tie_net(static_cast<std::size_t>(na), LinForm(n, m));
    for (const auto& t : sys.ties) {
        const int i = area_index(t.from);
        const int j = area_index(t.to);
        LinForm flow = t.T * (state(work[static_cast<std::size_t>(i)].delta_off) -
                              state(work[static_cast<std::size_t>(j)].delta_off));
        tie_net[static_cast<std::size_t>(i)] += flow;
        tie_net[static_cast<std::size_t>(j)] -= flow;
        flows.push_back(std::move(flow));
    }

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, m);

    // derivative rows of a block fed by a scalar input signal
    auto wire_block = [&](const StateSpace& blk, int off, const LinForm& in) {
        A.block(off, off, blk.order(), blk.order()) = blk.A;
        for (int r = 0; r < blk.order(); ++r) {
            A.row(off + r) += blk.B(r, 0) * in.x;
            B.row(off + r) += blk.B(r, 0) * in.u;
        }
    };

    std::vector<LinForm> ace_sig;
    std::vector<LinForm> dpv_sig;
    std::vector<LinForm> dpm_sig;
    for (int i = 0; i < na; ++i) {
        const AreaWork& w = work[static_cast<std::size_t>(i)];
        const AreaModel& a = *w.area;
        const std::size_t ui = static_cast<std::size_t>(i);

        LinForm ace_i = tie_net[ui] + a.effective_bias() * df[ui];
        LinForm err = single ? LinForm(n, m) - df[ui] : LinForm(n, m) - ace_i;

        LinForm ctrl_out(n, m);
        if (a.controller) {
            ctrl_out = a.controller->Kp * err + a.controller->Ki * state(w.ctrl_off);
            A.row(w.ctrl_off) += err.x;
            B.row(w.ctrl_off) += err.u;
        }

        LinForm u_gov = input(na + i) + ctrl_out - (1.0 / a.governor.R) * df[ui];
        LinForm dpv = block_output(w.gov, w.gov_off, u_gov);
        LinForm dpm = block_output(w.turb, w.turb_off, dpv);
        LinForm gen_in = dpm - input(i) - tie_net[ui];

        wire_block(w.gen, w.gen_off, gen_in);
        wire_block(w.gov, w.gov_off, u_gov);
        wire_block(w.turb, w.turb_off, dpv);
        if (w.delta_off >= 0) {
            A.row(w.delta_off) += (2.0 * std::numbers::pi) * df[ui].x;
        }

        ace_sig.push_back(std::move(ace_i));
        dpv_sig.push_back(std::move(dpv));
        dpm_sig.push_back(std::move(dpm));
    }

    // outputs: df per area, dPtie per tie, dPm / dPv / ace per area
    std::vector<std::string> output_names;
    std::vector<const LinForm*> rows;
    for (int i = 0; i < na; ++i) {
        output_names.push_back("df_" + sys.areas[static_cast<std::size_t>(i)].id);
        rows.push_back(&df[static_cast<std::size_t>(i)]);
    }
    for (std::size_t t = 0; t < sys.ties.size(); ++t) {
        output_names.push_back("dPtie_" + sys.ties[t].from + "_" + sys.ties[t].to);
        rows.push_back(&flows[t]);
    }
    for (int i = 0; i < na; ++i) {
        output_names.push_back("dPm_" + sys.areas[static_cast<std::size_t>(i)].id);
        rows.push_back(&dpm_sig[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < na; ++i) {
        output_names.push_back("dPv_" + sys.areas[static_cast<std::size_t>(i)].id);
        rows.push_back(&dpv_sig[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < na; ++i) {
        output_names.push_back("ace_" + sys.areas[static_cast<std::size_t>(i)].id);
        rows.push_back(&ace_sig[static_cast<std::size_t>(i)]);
    }

    const int p = static_cast<int>(rows.size());
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(p, n);
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(p, m);
    for (int r = 0; r < p; ++r) {
        C.row(r) = rows[static_cast<std::size_t>(r)]->x;
        D.row(r) = rows[static_cast<std::size_t>(r)]->u;
    }

    std::vector<std::string> area_ids;
    for (const auto& a : sys.areas) area_ids.push_back(a.id);

    return SystemModel{StateSpace(std::move(A), std::move(B), std::move(C), std::move(D)),
                       std::move(input_names),
                       std::move(output_names),
                       std::move(state_names),
                       std::move(area_ids),
                       sys.ties};
}

bool tie_antisymmetry_check(const SystemModel& model, const SimResult& trajectory) {
    if (model.ties.empty()) return true;

    std::vector<const std::vector<double>*> flow(model.ties.size(), nullptr);
    double max_flow = 0.0;
    for (std::size_t t = 0; t < model.ties.size(); ++t) {
        const std::string name = "dPtie_" + model.ties[t].from + "_" + model.ties[t].to;
        const int idx = trajectory.index_of(name);
        if (idx < 0) return false;
        flow[t] = &trajectory.series[static_cast<std::size_t>(idx)];
        for (double v : *flow[t]) max_flow = std::max(max_flow, std::fabs(v));
    }

    const double tol = 1e-12 * std::max(1.0, max_flow);
    for (std::size_t k = 0; k < trajectory.time.size(); ++k) {
        // per-area net injections; each tie contributes +flow to `from` and
        // -flow to `to`, so the grand total must cancel
        double total = 0.0;
        for (std::size_t i = 0; i < model.area_ids.size(); ++i) {
            double net = 0.0;
            for (std::size_t t = 0; t < model.ties.size(); ++t) {
                if (model.ties[t].from == model.area_ids[i]) net += (*flow[t])[k];
                if (model.ties[t].to == model.area_ids[i]) net -= (*flow[t])[k];
            }
            total += net;
        }
        if (std::fabs(total) > tol) return false;
    }
    return true;
}

} // namespace lfc

#include "lfc/csv.hpp"
#include "lfc/errors.hpp"
#include "lfc/run.hpp"
#include "lfc/scenario_parse.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitDiverged = 2;
constexpr int kExitIo = 3;

std::vector<std::string> split_csl(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const std::string item = s.substr(start, comma - start);
        if (!item.empty()) out.push_back(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int cmd_run(const std::string& path, const std::string& out_dir, const std::string& plots) {
    const lfc::Scenario scenario = lfc::parse_scenario(path);
    const lfc::ResultBundle bundle =
        lfc::run_scenario(scenario, out_dir, split_csl(plots));
    std::printf("wrote %s\n", bundle.csv.string().c_str());
    std::printf("wrote %s\n", bundle.metrics.string().c_str());
    for (const auto& p : bundle.plots) std::printf("wrote %s\n", p.string().c_str());
    if (bundle.diverged) {
        std::fprintf(stderr, "run diverged at t = %s s; partial trajectory written\n",
                     lfc::format_double(bundle.result.diverged_at).c_str());
        return kExitDiverged;
    }
    // frequency columns are pu of base frequency; show the Hz reading too
    for (std::size_t i = 0; i < bundle.result.names.size(); ++i) {
        const std::string& name = bundle.result.names[i];
        if (name.rfind("df_", 0) != 0) continue;
        const lfc::ResponseMetrics& m = bundle.result.metrics[i];
        std::printf("%-14s peak %+.5f pu (%+.4f Hz) at %.2f s, final %+.3e pu%s\n",
                    name.c_str(), m.peak_deviation,
                    m.peak_deviation * scenario.base_frequency, m.peak_time,
                    m.steady_state,
                    m.settled ? "" : " (not settled)");
    }
    return kExitOk;
}

int cmd_tune(const std::string& path, const std::string& out_dir) {
    const lfc::Scenario scenario = lfc::parse_scenario(path);
    if (!scenario.tuning) {
        std::fprintf(stderr, "%s: no [tuning] section\n", path.c_str());
        return kExitInvalid;
    }
    const lfc::TuneResult best = lfc::tune_gains(scenario, *scenario.tuning);
    const char* kind = scenario.tuning->kind == lfc::CostKind::ISE ? "ISE" : "ITAE";
    std::string text = "# tuned gains (" + std::string(kind) + " over " +
                       lfc::format_double(scenario.tuning->horizon) + " s = " +
                       lfc::format_double(best.score) + ")\n" +
                       "Kp = " + lfc::format_double(best.gains.Kp) + "\n" +
                       "Ki = " + lfc::format_double(best.gains.Ki) + "\n";
    std::fputs(text.c_str(), stdout);
    if (!out_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) throw lfc::IoError("cannot create output directory '" + out_dir + "'");
        const auto file = std::filesystem::path(out_dir) / (scenario.name + "_tuning.txt");
        std::FILE* f = std::fopen(file.string().c_str(), "wb");
        if (!f) throw lfc::IoError("cannot open '" + file.string() + "' for writing");
        std::fputs(text.c_str(), f);
        std::fclose(f);
        std::printf("wrote %s\n", file.string().c_str());
    }
    return kExitOk;
}

int cmd_probe(const std::string& path, int refinements) {
    const lfc::Scenario scenario = lfc::parse_scenario(path);
    const lfc::SystemModel model = lfc::assemble_multi_area(scenario.system);
    const lfc::ProbeReport rep =
        lfc::convergence_probe(model, scenario.disturbances, scenario.sim, refinements);
    for (std::size_t j = 0; j < rep.diffs.size(); ++j) {
        std::printf("dt %-12s vs dt %-12s  max diff %s\n",
                    lfc::format_double(rep.dts[j]).c_str(),
                    lfc::format_double(rep.dts[j + 1]).c_str(),
                    lfc::format_double(rep.diffs[j]).c_str());
    }
    if (rep.exact) {
        std::printf("differences at rounding level: trajectories are grid-independent\n");
        return kExitOk;
    }
    bool order_ok = !rep.ratios.empty();
    for (double r : rep.ratios) {
        std::printf("refinement ratio %s (order-4 scheme expects ~16)\n",
                    lfc::format_double(r).c_str());
        if (r < 12.0 || r > 20.0) order_ok = false;
    }
    std::printf("solver order check: %s\n", order_ok ? "ok" : "OUT OF RANGE");
    return kExitOk;
}

int cmd_validate(const std::string& path) {
    const lfc::Scenario scenario = lfc::parse_scenario(path);
    // assembling proves the cross-references, not just the per-field bounds
    (void)lfc::assemble_multi_area(scenario.system);
    std::printf("%s: ok (%zu area(s), %zu tie(s), %zu disturbance(s))\n", path.c_str(),
                scenario.system.areas.size(), scenario.system.ties.size(),
                scenario.disturbances.size());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"load-frequency control simulator for single- and multi-area power systems"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_dir = "out";
    std::string tune_out;
    std::string plot_signals;
    int refinements = 3;

    auto* run = app.add_subcommand("run", "simulate a scenario and write CSV/metrics");
    run->add_option("scenario", scenario_path, "scenario file")->required();
    run->add_option("--out", out_dir, "output directory (default: out)");
    run->add_option("--plot", plot_signals, "comma-separated signals to chart as SVG");

    auto* tune = app.add_subcommand("tune", "grid-search controller gains");
    tune->add_option("scenario", scenario_path, "scenario file with a [tuning] section")
        ->required();
    tune->add_option("--out", tune_out, "also write the result under this directory");

    auto* probe = app.add_subcommand("probe", "convergence self-check via dt halving");
    probe->add_option("scenario", scenario_path, "scenario file")->required();
    probe->add_option("--refinements", refinements, "number of dt halvings (default: 3)")
        ->check(CLI::Range(1, 8));

    auto* validate = app.add_subcommand("validate", "parse and validate a scenario");
    validate->add_option("scenario", scenario_path, "scenario file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (run->parsed()) return cmd_run(scenario_path, out_dir, plot_signals);
        if (tune->parsed()) return cmd_tune(scenario_path, tune_out);
        if (probe->parsed()) return cmd_probe(scenario_path, refinements);
        return cmd_validate(scenario_path);
    } catch (const lfc::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitIo;
    } catch (const lfc::DivergenceError& e) {
        std::fprintf(stderr, "divergence: %s\n", e.what());
        return kExitDiverged;
    } catch (const lfc::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalid;
    }
}

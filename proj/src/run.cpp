#include "lfc/run.hpp"

#include "lfc/csv.hpp"
#include "lfc/errors.hpp"
#include "lfc/plot.hpp"

#include <fstream>
#include <system_error>

namespace lfc {

ResultBundle run_scenario(const Scenario& scenario, const std::filesystem::path& out_dir,
                          const std::vector<std::string>& plot_signals) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + out_dir.string() +
                      "': " + ec.message());
    }

    const SystemModel model = assemble_multi_area(scenario.system);

    ResultBundle bundle;
    bundle.result = integrate_flagged(model, scenario.disturbances, scenario.sim);
    bundle.diverged = bundle.result.diverged;

    bundle.csv = out_dir / (scenario.name + ".csv");
    emit_csv(bundle.result, bundle.csv.string());

    bundle.metrics = out_dir / (scenario.name + "_metrics.txt");
    {
        std::ofstream out(bundle.metrics, std::ios::binary);
        if (!out) throw IoError("cannot open '" + bundle.metrics.string() + "' for writing");
        out << format_metrics(bundle.result);
        out.flush();
        if (!out) throw IoError("failed writing '" + bundle.metrics.string() + "'");
    }

    if (!plot_signals.empty()) {
        const auto path = out_dir / (scenario.name + "_plot.svg");
        emit_plot(bundle.result, plot_signals, path.string());
        bundle.plots.push_back(path);
    }
    return bundle;
}

} // namespace lfc

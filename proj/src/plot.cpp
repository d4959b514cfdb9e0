#include "lfc/plot.hpp"

#include "lfc/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace lfc {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v, int precision, std::chars_format format) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, format, precision);
    return std::string(buf, res.ptr);
}

std::string coord(double v) { return fmt(v, 2, std::chars_format::fixed); }
std::string label(double v) {
    // snap rounding residue so tick labels read 0.2, not 0.20000000000000001
    if (std::fabs(v) < 1e-12) v = 0.0;
    return fmt(v, 6, std::chars_format::general);
}

double nice_step(double range, int target_ticks) {
    const double raw = range / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double mult : {1.0, 2.0, 5.0}) {
        if (raw <= mult * mag) return mult * mag;
    }
    return 10.0 * mag;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

void emit_plot(const SimResult& result, const std::vector<std::string>& signals,
               const std::string& path) {
    if (signals.empty()) {
        throw UnknownSignalError("plot: no signals requested");
    }
    std::vector<int> idx;
    for (const auto& name : signals) {
        const int i = result.index_of(name);
        if (i < 0) throw UnknownSignalError("plot: unknown signal '" + name + "'");
        idx.push_back(i);
    }
    if (result.time.empty()) {
        throw UnknownSignalError("plot: result holds no samples");
    }

    double x0 = result.time.front(), x1 = result.time.back();
    if (x0 == x1) x1 = x0 + 1.0;
    double y0 = 0.0, y1 = 0.0;
    bool first = true;
    for (int i : idx) {
        for (double v : result.series[static_cast<std::size_t>(i)]) {
            y0 = first ? v : std::min(y0, v);
            y1 = first ? v : std::max(y1, v);
            first = false;
        }
    }
    if (y0 == y1) {
        y0 -= 1.0;
        y1 += 1.0;
    } else {
        const double pad = 0.05 * (y1 - y0);
        y0 -= pad;
        y1 += pad;
    }

    const double width = 880, height = 520;
    const double left = 80, right = 24, top = 24, bottom = 56;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    auto px = [&](double t) { return left + (t - x0) / (x1 - x0) * plot_w; };
    auto py = [&](double v) { return top + (y1 - v) / (y1 - y0) * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";

    // grid and tick labels
    const double xstep = nice_step(x1 - x0, 6);
    const double ystep = nice_step(y1 - y0, 6);
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
    for (double t = std::ceil(x0 / xstep) * xstep; t <= x1 + 1e-9 * xstep; t += xstep) {
        const std::string x = coord(px(t));
        svg << "<line x1=\"" << x << "\" y1=\"" << coord(top) << "\" x2=\"" << x
            << "\" y2=\"" << coord(top + plot_h) << "\" stroke=\"#e0e0e0\"/>\n";
        svg << "<text x=\"" << x << "\" y=\"" << coord(top + plot_h + 18)
            << "\" text-anchor=\"middle\">" << label(t) << "</text>\n";
    }
    for (double v = std::ceil(y0 / ystep) * ystep; v <= y1 + 1e-9 * ystep; v += ystep) {
        const std::string y = coord(py(v));
        svg << "<line x1=\"" << coord(left) << "\" y1=\"" << y << "\" x2=\""
            << coord(left + plot_w) << "\" y2=\"" << y << "\" stroke=\"#e0e0e0\"/>\n";
        svg << "<text x=\"" << coord(left - 8) << "\" y=\"" << y
            << "\" text-anchor=\"end\" dominant-baseline=\"middle\">" << label(v)
            << "</text>\n";
    }
    svg << "<text x=\"" << coord(left + plot_w / 2) << "\" y=\"" << coord(height - 12)
        << "\" text-anchor=\"middle\">time [s]</text>\n";
    svg << "<text x=\"18\" y=\"" << coord(top + plot_h / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << coord(top + plot_h / 2)
        << ")\">deviation [pu]</text>\n";
    svg << "</g>\n";

    svg << "<rect x=\"" << coord(left) << "\" y=\"" << coord(top) << "\" width=\""
        << coord(plot_w) << "\" height=\"" << coord(plot_h)
        << "\" fill=\"none\" stroke=\"#333333\"/>\n";

    for (std::size_t s = 0; s < idx.size(); ++s) {
        const auto& data = result.series[static_cast<std::size_t>(idx[s])];
        svg << "<polyline fill=\"none\" stroke=\"" << kPalette[s % 8]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < data.size(); ++k) {
            if (k) svg << ' ';
            svg << coord(px(result.time[k])) << ',' << coord(py(data[k]));
        }
        svg << "\"/>\n";
    }

    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
    for (std::size_t s = 0; s < idx.size(); ++s) {
        const double ly = top + 16 + 18 * static_cast<double>(s);
        svg << "<line x1=\"" << coord(left + plot_w - 150) << "\" y1=\"" << coord(ly)
            << "\" x2=\"" << coord(left + plot_w - 126) << "\" y2=\"" << coord(ly)
            << "\" stroke=\"" << kPalette[s % 8] << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << coord(left + plot_w - 120) << "\" y=\"" << coord(ly + 4)
            << "\">" << xml_escape(signals[s]) << "</text>\n";
    }
    svg << "</g>\n</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << svg.str();
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

} // namespace lfc

#include "lfc/csv.hpp"

#include "lfc/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lfc {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void emit_csv(const SimResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");

    out << "time";
    for (const auto& name : result.names) out << ',' << name;
    out << '\n';
    for (std::size_t k = 0; k < result.time.size(); ++k) {
        out << format_double(result.time[k]);
        for (const auto& s : result.series) out << ',' << format_double(s[k]);
        out << '\n';
    }
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

CsvData read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");

    CsvData data;
    std::string line;
    if (!std::getline(in, line)) throw IoError("'" + path + "' is empty");
    {
        std::istringstream header(line);
        std::string field;
        while (std::getline(header, field, ',')) data.names.push_back(field);
    }
    data.columns.resize(data.names.size());

    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t col = 0;
        const char* ptr = line.data();
        const char* end = line.data() + line.size();
        while (ptr <= end) {
            const char* field_end = ptr;
            while (field_end < end && *field_end != ',') ++field_end;
            double v = 0.0;
            const auto res = std::from_chars(ptr, field_end, v);
            if (res.ec != std::errc{} || res.ptr != field_end || col >= data.columns.size()) {
                throw IoError("'" + path + "' line " + std::to_string(lineno) +
                              ": malformed numeric row");
            }
            data.columns[col++].push_back(v);
            if (field_end == end) break;
            ptr = field_end + 1;
        }
        if (col != data.columns.size()) {
            throw IoError("'" + path + "' line " + std::to_string(lineno) +
                          ": wrong field count");
        }
    }
    return data;
}

std::string format_metrics(const SimResult& result) {
    std::ostringstream out;
    out << "diverged = " << (result.diverged ? "true" : "false") << '\n';
    if (result.diverged) {
        out << "diverged_at = " << format_double(result.diverged_at) << '\n';
        return out.str();
    }
    for (std::size_t i = 0; i < result.names.size(); ++i) {
        const ResponseMetrics& m = result.metrics[i];
        out << '\n';
        out << "[signal " << result.names[i] << "]\n";
        out << "peak_deviation = " << format_double(m.peak_deviation) << '\n';
        out << "peak_time = " << format_double(m.peak_time) << '\n';
        out << "settling_time = " << format_double(m.settling_time) << '\n';
        out << "settled = " << (m.settled ? "true" : "false") << '\n';
        out << "steady_state = " << format_double(m.steady_state) << '\n';
    }
    return out.str();
}

} // namespace lfc

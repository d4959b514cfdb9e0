#include "lfc/scenario_parse.hpp"

#include "lfc/errors.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace lfc {

namespace {

struct RawValue {
    std::string text;
    int line = 0;
};

struct RawBlock {
    std::string section;
    int line = 0;
    std::map<std::string, RawValue> kv;
};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool is_list_section(const std::string& name) {
    return name == "areas" || name == "ties" || name == "disturbances";
}

bool is_single_section(const std::string& name) {
    return name == "sim" || name == "tuning";
}

std::vector<RawBlock> tokenize(const std::string& text, const std::string& file) {
    std::vector<RawBlock> blocks;
    std::set<std::string> singles_seen;
    RawBlock* current = nullptr;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;

        if (line.front() == '[') {
            const bool list = line.size() > 1 && line[1] == '[';
            const std::string close = list ? "]]" : "]";
            if (line.substr(line.size() - close.size()) != close) {
                throw ParseError(file, lineno, "malformed section header '" + line + "'");
            }
            const std::string name =
                trim(line.substr(list ? 2 : 1, line.size() - 2 * (list ? 2 : 1)));
            if (name.empty()) throw ParseError(file, lineno, "empty section name");
            if (list && !is_list_section(name)) {
                throw ParseError(file, lineno, "unknown list section '[[" + name + "]]'");
            }
            if (!list && !is_single_section(name)) {
                throw ParseError(file, lineno,
                                 is_list_section(name)
                                     ? "section '" + name + "' is a list; use [[" + name + "]]"
                                     : "unknown section '[" + name + "]'");
            }
            if (!list && !singles_seen.insert(name).second) {
                throw ParseError(file, lineno, "duplicate section '[" + name + "]'");
            }
            blocks.push_back(RawBlock{name, lineno, {}});
            current = &blocks.back();
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError(file, lineno, "expected 'key = value' or a section header");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(file, lineno, "empty key");
        if (value.empty()) throw ParseError(file, lineno, "empty value for key '" + key + "'");
        if (!current) {
            throw ParseError(file, lineno, "key '" + key + "' appears before any section");
        }
        if (!current->kv.emplace(key, RawValue{value, lineno}).second) {
            throw ParseError(file, lineno, "duplicate key '" + key + "' in section '" +
                                               current->section + "'");
        }
    }
    return blocks;
}

/// Typed access to one block with unknown-key detection and per-key source
/// locations for diagnostics.
class BlockReader {
public:
    BlockReader(const RawBlock& block, const std::string& file)
        : block_(block), file_(file) {}

    bool has(const std::string& key) const { return block_.kv.count(key) > 0; }

    int line_of(const std::string& key) const {
        auto it = block_.kv.find(key);
        return it == block_.kv.end() ? block_.line : it->second.line;
    }
    int header_line() const { return block_.line; }
    const std::string& section() const { return block_.section; }

    double number(const std::string& key) {
        const RawValue& rv = require(key);
        errno = 0;
        char* end = nullptr;
        const double v = std::strtod(rv.text.c_str(), &end);
        if (end == rv.text.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
            fail(rv.line, "value of '" + key + "' is not a finite number: '" + rv.text + "'");
        }
        return v;
    }

    double number_or(const std::string& key, double fallback) {
        return has(key) ? number(key) : fallback;
    }

    long integer(const std::string& key) {
        const RawValue& rv = require(key);
        errno = 0;
        char* end = nullptr;
        const long v = std::strtol(rv.text.c_str(), &end, 10);
        if (end == rv.text.c_str() || *end != '\0' || errno == ERANGE) {
            fail(rv.line, "value of '" + key + "' is not an integer: '" + rv.text + "'");
        }
        return v;
    }

    std::uint64_t unsigned_integer(const std::string& key) {
        const RawValue& rv = require(key);
        errno = 0;
        char* end = nullptr;
        const unsigned long long v = std::strtoull(rv.text.c_str(), &end, 10);
        if (end == rv.text.c_str() || *end != '\0' || errno == ERANGE ||
            rv.text.front() == '-') {
            fail(rv.line, "value of '" + key + "' is not an unsigned integer: '" + rv.text + "'");
        }
        return v;
    }

    std::string word(const std::string& key) { return require(key).text; }

    std::string word_or(const std::string& key, const std::string& fallback) {
        return has(key) ? word(key) : fallback;
    }

    /// Enumerated value; `allowed` lists the legal spellings.
    std::string choice(const std::string& key, std::initializer_list<const char*> allowed) {
        const RawValue& rv = require(key);
        for (const char* a : allowed) {
            if (rv.text == a) return rv.text;
        }
        std::string opts;
        for (const char* a : allowed) {
            if (!opts.empty()) opts += " | ";
            opts += a;
        }
        fail(rv.line, "value of '" + key + "' must be one of: " + opts);
    }

    std::string choice_or(const std::string& key, std::initializer_list<const char*> allowed,
                          const std::string& fallback) {
        return has(key) ? choice(key, allowed) : fallback;
    }

    [[noreturn]] void fail(int line, const std::string& detail) const {
        throw ValidationError(file_, line, block_.section, detail);
    }

    void check(bool ok, const std::string& key, const std::string& detail) const {
        if (!ok) fail(line_of(key), detail);
    }

    /// Every key must have been consumed by a typed getter.
    void finish() const {
        for (const auto& [key, rv] : block_.kv) {
            if (!used_.count(key)) {
                fail(rv.line, "unknown key '" + key + "'");
            }
        }
    }

private:
    const RawValue& require(const std::string& key) {
        auto it = block_.kv.find(key);
        if (it == block_.kv.end()) {
            fail(block_.line, "missing required key '" + key + "'");
        }
        used_.insert(key);
        return it->second;
    }

    const RawBlock& block_;
    const std::string& file_;
    std::set<std::string> used_;
};

AreaModel read_area(BlockReader& r) {
    AreaModel area;
    area.id = r.word("id");
    const std::string kind = r.choice("kind", {"thermal", "hydro"});
    area.kind = kind == "thermal" ? AreaKind::Thermal : AreaKind::Hydro;

    area.generator.H = r.number("H");
    area.generator.D = r.number("D");
    r.check(area.generator.H > 0.0, "H", "inertia constant H must be > 0");
    r.check(area.generator.D >= 0.0, "D", "load damping D must be >= 0");

    area.governor.tau_g = r.number("tau_g");
    area.governor.R = r.number("R");
    r.check(area.governor.tau_g > 0.0, "tau_g", "governor time constant tau_g must be > 0");
    r.check(area.governor.R > 0.0, "R", "speed regulation (droop) R must be > 0");

    if (area.kind == AreaKind::Thermal) {
        ThermalTurbineParams t{r.number("tau_t")};
        r.check(t.tau_t > 0.0, "tau_t", "turbine time constant tau_t must be > 0");
        area.turbine = t;
    } else {
        HydroTurbineParams h;
        h.T_w = r.number("T_w");
        r.check(h.T_w > 0.0, "T_w", "water starting time T_w must be > 0");
        h.compensation = r.choice_or("compensation", {"on", "off"}, "on") == "on";
        if (r.has("T_r")) {
            h.T_r = r.number("T_r");
        } else if (h.compensation) {
            h.T_r = 5.0;
        }
        if (r.has("R_t")) {
            h.R_t = r.number("R_t");
        } else if (h.compensation) {
            h.R_t = 0.38;
        }
        if (h.T_r) r.check(*h.T_r > 0.0, "T_r", "reset time T_r must be > 0");
        if (h.compensation) {
            r.check(*h.R_t > area.governor.R, "R_t",
                    "temporary droop R_t must exceed permanent droop R");
        } else if (h.R_t) {
            r.check(*h.R_t > 0.0, "R_t", "temporary droop R_t must be > 0");
        }
        area.turbine = h;
    }

    const std::string ctrl = r.choice_or("controller", {"pi", "none"}, "none");
    if (ctrl == "pi") {
        PIGains g{r.number_or("Kp", 0.0), r.number_or("Ki", 0.0)};
        r.check(g.Kp >= 0.0, "Kp", "Kp must be >= 0");
        r.check(g.Ki >= 0.0, "Ki", "Ki must be >= 0");
        r.check(g.Kp > 0.0 || g.Ki > 0.0, "controller",
                "pi controller needs Kp > 0 or Ki > 0");
        area.controller = g;
    }

    if (r.has("bias")) {
        area.bias = r.number("bias");
        r.check(*area.bias > 0.0, "bias", "frequency bias B must be > 0");
    }
    r.finish();
    return area;
}

TieLine read_tie(BlockReader& r) {
    TieLine tie{r.word("from"), r.word("to"), r.number("T")};
    r.check(tie.from != tie.to, "to", "tie endpoints must differ");
    r.check(tie.T > 0.0, "T", "synchronizing coefficient T must be > 0");
    r.finish();
    return tie;
}

Disturbance read_disturbance(BlockReader& r, double dt) {
    Disturbance d;
    d.target = r.word("target");
    const std::string shape = r.choice("shape", {"step", "ramp", "noise"});
    if (shape == "step") {
        StepShape s{r.number("t0"), r.number("magnitude")};
        r.check(s.t0 >= 0.0, "t0", "t0 must be >= 0");
        d.shape = s;
    } else if (shape == "ramp") {
        RampShape s{r.number("t0"), r.number("t1"), r.number("magnitude")};
        r.check(s.t0 >= 0.0, "t0", "t0 must be >= 0");
        r.check(s.t1 > s.t0, "t1", "ramp needs t1 > t0");
        d.shape = s;
    } else {
        NoiseShape s;
        s.t0 = r.number("t0");
        s.amplitude = r.number("amplitude");
        s.seed = r.unsigned_integer("seed");
        s.sample_interval = r.number("sample_interval");
        r.check(s.t0 >= 0.0, "t0", "t0 must be >= 0");
        r.check(s.amplitude >= 0.0, "amplitude", "amplitude must be >= 0");
        r.check(s.sample_interval >= dt, "sample_interval",
                "noise sample_interval must be >= the sim dt");
        d.shape = s;
    }
    r.finish();
    return d;
}

TuningCriterion read_tuning(BlockReader& r) {
    TuningCriterion c;
    c.kind = r.choice("criterion", {"ISE", "ITAE"}) == "ISE" ? CostKind::ISE
                                                             : CostKind::ITAE;
    c.horizon = r.number_or("horizon", 20.0);
    r.check(c.horizon >= 1.0, "horizon", "tuning horizon must be >= 1 s");
    c.kp = GainGrid{r.number("Kp_min"), r.number("Kp_max"), r.number_or("Kp_step", 1.0)};
    c.ki = GainGrid{r.number("Ki_min"), r.number("Ki_max"), r.number_or("Ki_step", 1.0)};
    r.check(c.kp.min >= 0.0, "Kp_min", "Kp grid must be >= 0");
    r.check(c.ki.min >= 0.0, "Ki_min", "Ki grid must be >= 0");
    r.check(c.kp.max >= c.kp.min, "Kp_max", "Kp_max must be >= Kp_min");
    r.check(c.ki.max >= c.ki.min, "Ki_max", "Ki_max must be >= Ki_min");
    r.check(c.kp.step > 0.0, "Kp_step", "Kp_step must be > 0");
    r.check(c.ki.step > 0.0, "Ki_step", "Ki_step must be > 0");
    r.finish();
    return c;
}

} // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& display_name) {
    const std::vector<RawBlock> blocks = tokenize(text, display_name);

    Scenario sc;
    sc.name = std::filesystem::path(display_name).stem().string();
    if (sc.name.empty()) sc.name = "scenario";

    const RawBlock* sim_block = nullptr;
    for (const auto& b : blocks) {
        if (b.section == "sim") sim_block = &b;
    }
    if (!sim_block) {
        throw ValidationError(display_name, 1, "sim", "missing required [sim] section");
    }
    {
        BlockReader r(*sim_block, display_name);
        sc.sim.dt = r.number("dt");
        sc.sim.t_end = r.number("t_end");
        const long stride = r.has("record_stride") ? r.integer("record_stride") : 1;
        sc.base_frequency = r.number_or("base_frequency", 50.0);
        r.check(sc.sim.dt > 0.0 && sc.sim.dt <= 0.1, "dt", "dt must be in (0, 0.1]");
        r.check(sc.sim.t_end >= 1.0, "t_end", "t_end must be >= 1 s");
        r.check(stride >= 1, "record_stride", "record_stride must be >= 1");
        r.check(sc.base_frequency == 50.0 || sc.base_frequency == 60.0, "base_frequency",
                "base_frequency must be 50 or 60 Hz");
        sc.sim.record_stride = static_cast<int>(stride);
        r.finish();
    }

    std::set<std::string> ids;
    std::set<std::pair<std::string, std::string>> tie_pairs;
    for (const auto& b : blocks) {
        if (b.section != "areas") continue;
        BlockReader r(b, display_name);
        AreaModel area = read_area(r);
        if (!ids.insert(area.id).second) {
            r.fail(r.line_of("id"), "duplicate area id '" + area.id + "'");
        }
        sc.system.areas.push_back(std::move(area));
    }
    for (const auto& b : blocks) {
        if (b.section == "sim" || b.section == "areas") continue;
        BlockReader r(b, display_name);
        if (b.section == "ties") {
            TieLine tie = read_tie(r);
            if (!ids.count(tie.from)) {
                r.fail(r.line_of("from"), "unknown area '" + tie.from + "'");
            }
            if (!ids.count(tie.to)) {
                r.fail(r.line_of("to"), "unknown area '" + tie.to + "'");
            }
            auto key = std::minmax(tie.from, tie.to);
            if (!tie_pairs.insert(key).second) {
                r.fail(r.header_line(), "duplicate tie between '" + tie.from + "' and '" +
                                            tie.to + "'");
            }
            sc.system.ties.push_back(std::move(tie));
        } else if (b.section == "disturbances") {
            Disturbance d = read_disturbance(r, sc.sim.dt);
            if (!ids.count(d.target)) {
                r.fail(r.line_of("target"), "unknown area '" + d.target + "'");
            }
            sc.disturbances.push_back(std::move(d));
        } else if (b.section == "tuning") {
            sc.tuning = read_tuning(r);
        }
    }

    if (sc.system.areas.empty()) {
        throw ValidationError(display_name, 1, "areas", "scenario needs at least one [[areas]] entry");
    }
    return sc;
}

Scenario parse_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open scenario file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading scenario file '" + path + "'");
    }
    return parse_scenario_text(buf.str(), path);
}

} // namespace lfc

#pragma once

// Text input parsing (demand anchors, policy tables, run configuration).

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "globus/defaults.hpp"
#include "globus/engine.hpp"
#include "globus/scenario.hpp"

namespace globus::io {

/// 1 m2 = 10.7639 ft2.
inline constexpr double kSquareFeetPerSquareMetre = 10.7639;

inline constexpr const char* kDataDirEnv = "GLOBUS_DATA_DIR";

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed for " + path.string());
}

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

/// Shortest text that parses back to the same double.
inline std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

struct CsvRow {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

/// Comma-separated text with a one-line header. Blank lines and lines
/// starting with '#' are ignored; fields are whitespace-trimmed.
struct CsvTable {
    std::string source;
    std::size_t header_line = 0;
    std::vector<std::string> header;
    std::vector<CsvRow> rows;

    std::optional<std::size_t> column(std::string_view name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        return std::nullopt;
    }

    std::size_t require(std::string_view name) const {
        if (auto c = column(name)) return *c;
        throw ParseError(source, header_line, "missing column '" + std::string(name) + "'");
    }
};

inline CsvTable parse_csv(std::string_view text, std::string source) {
    CsvTable t;
    t.source = std::move(source);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            fields.push_back(trim(std::string_view(line).substr(
                start, comma == std::string::npos ? std::string::npos : comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (t.header.empty()) {
            t.header = std::move(fields);
            t.header_line = line_no;
            continue;
        }
        if (fields.size() != t.header.size())
            throw ParseError(t.source, line_no,
                             "expected " + std::to_string(t.header.size()) + " fields, got " +
                                 std::to_string(fields.size()));
        t.rows.push_back({line_no, std::move(fields)});
    }
    if (t.header.empty()) throw ParseError(t.source, 0, "no header line");
    return t;
}

inline double parse_number(std::string_view s, const std::string& source, std::size_t line,
                           std::string_view column) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != end || !std::isfinite(v))
        throw ParseError(source, line, "column '" + std::string(column) + "': not a number: '" +
                                           std::string(s) + "'");
    return v;
}

inline Year parse_year_field(std::string_view s, const std::string& source, std::size_t line,
                             std::string_view column) {
    int v = 0;
    const auto* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != end)
        throw ParseError(source, line, "column '" + std::string(column) + "': not a year: '" +
                                           std::string(s) + "'");
    if (v < kMinYear || v > kMaxYear)
        throw ParseError(source, line, "year " + std::to_string(v) + " outside [1900, 2100]");
    return v;
}

inline EconomyId parse_economy_field(const std::string& s, const std::string& source, std::size_t line) {
    if (s.empty()) throw ParseError(source, line, "empty economy code");
    return EconomyId(s);
}

inline BuildingType parse_type_field(const std::string& s, const std::string& source, std::size_t line) {
    if (auto t = parse_building_type(s)) return *t;
    throw ParseError(source, line, "unknown building type '" + s + "'");
}

// ---------------------------------------------------------------------------
// Demand

struct DemandAnchors {
    std::map<EconomyId, std::map<Year, double>> population;
    std::map<std::pair<EconomyId, BuildingType>, std::map<Year, double>> per_capita;
};

inline DemandAnchors parse_demand_anchors(std::string_view population_text,
                                          const std::string& population_source,
                                          std::string_view floorspace_text,
                                          const std::string& floorspace_source) {
    DemandAnchors a;
    const auto pop = parse_csv(population_text, population_source);
    const auto pe = pop.require("economy"), py = pop.require("year"), pv = pop.require("population");
    for (const auto& r : pop.rows) {
        const auto eco = parse_economy_field(r.fields[pe], pop.source, r.line);
        const auto year = parse_year_field(r.fields[py], pop.source, r.line, "year");
        const double v = parse_number(r.fields[pv], pop.source, r.line, "population");
        if (v < 0.0) throw ParseError(pop.source, r.line, "negative population");
        if (!a.population[eco].emplace(year, v).second)
            throw ParseError(pop.source, r.line, "duplicate row for " + eco.code() + " " + std::to_string(year));
    }

    const auto fs = parse_csv(floorspace_text, floorspace_source);
    const auto fe = fs.require("economy"), ft = fs.require("building_type"), fy = fs.require("year"),
               fv = fs.require("value");
    const auto fu = fs.column("unit");
    for (const auto& r : fs.rows) {
        const auto eco = parse_economy_field(r.fields[fe], fs.source, r.line);
        const auto type = parse_type_field(r.fields[ft], fs.source, r.line);
        const auto year = parse_year_field(r.fields[fy], fs.source, r.line, "year");
        double v = parse_number(r.fields[fv], fs.source, r.line, "value");
        if (v < 0.0) throw ParseError(fs.source, r.line, "negative per-capita floorspace");
        const std::string unit = fu ? detail::lower(r.fields[*fu]) : std::string("m2");
        if (unit == "ft2" || unit == "sqft")
            v /= kSquareFeetPerSquareMetre;
        else if (!(unit.empty() || unit == "m2"))
            throw ParseError(fs.source, r.line, "unknown unit '" + unit + "' (expected m2 or ft2)");
        if (!a.per_capita[{eco, type}].emplace(year, v).second)
            throw ParseError(fs.source, r.line, "duplicate row for " + eco.code() + " " +
                                                    std::string(to_string(type)) + " " + std::to_string(year));
    }
    for (const auto& [key, series] : a.per_capita)
        if (!a.population.count(key.first))
            throw ConfigurationError(floorspace_source + ": economy " + key.first.code() +
                                     " has no population series in " + population_source);
    return a;
}

/// Interpolate every track to annual values, optionally extrapolating to `extend_to`.
inline DemandSeries densify(const DemandAnchors& anchors, std::optional<Year> extend_to = std::nullopt) {
    DemandSeries out;
    for (const auto& [key, pcf] : anchors.per_capita) {
        const auto& pop = anchors.population.at(key.first);
        const Year from = std::max(pop.begin()->first, pcf.begin()->first);
        Year to = std::max(pop.rbegin()->first, pcf.rbegin()->first);
        if (extend_to) to = std::max(to, *extend_to);
        DemandSeries::Track track;
        track.population = interpolate_endpoint_series(pop, from, to);
        track.per_capita = interpolate_endpoint_series(pcf, from, to);
        out.set(key.first, key.second, std::move(track));
    }
    return out;
}

inline DemandSeries parse_demand(std::string_view population_text, const std::string& population_source,
                                 std::string_view floorspace_text, const std::string& floorspace_source,
                                 std::optional<Year> extend_to = std::nullopt) {
    return densify(parse_demand_anchors(population_text, population_source, floorspace_text,
                                        floorspace_source),
                   extend_to);
}

inline DemandSeries load_demand(const std::filesystem::path& population_file,
                                const std::filesystem::path& floorspace_file,
                                std::optional<Year> extend_to = std::nullopt) {
    return parse_demand(read_file(population_file), population_file.string(), read_file(floorspace_file),
                        floorspace_file.string(), extend_to);
}

// ---------------------------------------------------------------------------
// Policy tables

namespace detail {

inline double parse_rate(std::string field, const std::string& source, std::size_t line,
                         std::string_view column) {
    if (!field.empty() && field.back() == '%') field.pop_back();
    const double pct = parse_number(trim(field), source, line, column);
    if (pct < 0.0 || pct > 100.0)
        throw ParseError(source, line, "column '" + std::string(column) + "': rate " + field +
                                           "% outside [0, 100]%");
    return pct / 100.0;
}

inline std::optional<RenovationRamp> parse_ramp(const std::string& lo, const std::string& hi,
                                                const std::string& shape, Year start, Year end,
                                                const std::string& source, std::size_t line,
                                                std::string_view which) {
    if (lo.empty() && hi.empty()) return std::nullopt;
    if (lo.empty() || hi.empty())
        throw ParseError(source, line, std::string(which) + " renovation needs both min and max rates");
    const double a = parse_rate(lo, source, line, std::string(which) + "_rate_min");
    const double b = parse_rate(hi, source, line, std::string(which) + "_rate_max");
    if (a > b) throw ParseError(source, line, std::string(which) + " renovation min rate exceeds max");
    auto kind = RenovationRamp::Shape::Linear;
    double step = 0.0;
    const auto s = globus::detail::lower(shape);
    if (s.rfind("annual:", 0) == 0) {
        kind = RenovationRamp::Shape::AnnualIncrement;
        step = parse_rate(s.substr(7), source, line, "ramp_shape");
    } else if (!(s.empty() || s == "linear")) {
        throw ParseError(source, line, "unknown ramp shape '" + shape + "'");
    }
    try {
        return make_ramp(start, end, a, b, kind, step);
    } catch (const InvalidParameter& e) {
        throw ParseError(source, line, e.what());
    }
}

} // namespace detail

inline ParameterTable parse_policy_table(std::string_view text, const std::string& source) {
    const auto csv = parse_csv(text, source);
    const auto c_s = csv.require("scenario"), c_e = csv.require("economy"), c_t = csv.require("building_type"),
               c_vf = csv.require("vintage_from"), c_vt = csv.require("vintage_to"),
               c_avg = csv.require("average_lifetime"), c_init = csv.require("initial_lifetime"),
               c_cyc = csv.require("renovation_cycle"), c_f1 = csv.require("first_rate_min"),
               c_f2 = csv.require("first_rate_max"), c_s1 = csv.require("second_rate_min"),
               c_s2 = csv.require("second_rate_max");
    const auto c_shape = csv.column("ramp_shape"), c_rs = csv.column("ramp_start"), c_re = csv.column("ramp_end");

    ParameterTable table;
    table.source = source;
    for (const auto& r : csv.rows) {
        const auto& f = r.fields;
        PolicyRow row;
        row.line = r.line;
        const auto scen = parse_scenario(f[c_s]);
        if (!scen) throw ParseError(source, r.line, "unknown scenario '" + f[c_s] + "'");
        row.scenario = *scen;
        row.economy = parse_economy_field(f[c_e], source, r.line);
        row.building_type = parse_type_field(f[c_t], source, r.line);
        if (!f[c_vf].empty()) row.vintage_from = parse_year_field(f[c_vf], source, r.line, "vintage_from");
        if (!f[c_vt].empty()) row.vintage_to = parse_year_field(f[c_vt], source, r.line, "vintage_to");
        if (row.vintage_from > row.vintage_to) throw ParseError(source, r.line, "empty vintage range");
        row.average_lifetime = parse_number(f[c_avg], source, r.line, "average_lifetime");
        if (row.average_lifetime <= 0.0) throw ParseError(source, r.line, "average_lifetime must be > 0");
        row.initial_lifetime = f[c_init].empty()
                                   ? row.average_lifetime
                                   : parse_number(f[c_init], source, r.line, "initial_lifetime");
        if (row.initial_lifetime <= 0.0) throw ParseError(source, r.line, "initial_lifetime must be > 0");
        if (!f[c_cyc].empty()) {
            row.renovation_cycle = parse_number(f[c_cyc], source, r.line, "renovation_cycle");
            if (*row.renovation_cycle <= 0.0) throw ParseError(source, r.line, "renovation_cycle must be > 0");
        }
        const Year rs = c_rs && !f[*c_rs].empty() ? parse_year_field(f[*c_rs], source, r.line, "ramp_start")
                                                  : kDefaultRampStart;
        const Year re = c_re && !f[*c_re].empty() ? parse_year_field(f[*c_re], source, r.line, "ramp_end")
                                                  : kDefaultRampEnd;
        const std::string shape = c_shape ? f[*c_shape] : std::string{};
        row.first_renovation = detail::parse_ramp(f[c_f1], f[c_f2], shape, rs, re, source, r.line, "first");
        // The annual increment applies to the first renovation only.
        row.second_renovation = detail::parse_ramp(f[c_s1], f[c_s2], "linear", rs, re, source, r.line, "second");
        if (row.scenario == ScenarioKind::NR && (row.first_renovation || row.second_renovation))
            throw ParseError(source, r.line, "NR rows cannot carry renovation rates");
        if (row.second_renovation && !row.first_renovation)
            throw ParseError(source, r.line, "second renovation without a first renovation");
        if (row.first_renovation && !row.renovation_cycle)
            throw ParseError(source, r.line, "renovation rates without a renovation cycle");
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline ParameterTable load_policy_table(const std::filesystem::path& file) {
    return parse_policy_table(read_file(file), file.string());
}

// ---------------------------------------------------------------------------
// Run configuration

struct RunConfig {
    std::vector<EconomyId> economies; // empty: every economy in the demand data
    std::vector<BuildingType> building_types{kBuildingTypes.begin(), kBuildingTypes.end()};
    std::vector<ScenarioKind> scenarios{kScenarios.begin(), kScenarios.end()};
    Year start_year = 2000;
    Year end_year = 2070;
    std::string population_file;
    std::string floorspace_file;
    std::string policy_file;
    SeedStrategy seed_strategy = SeedStrategy::Uniform;
    bool truncate_cdf_at_zero = false;
    double default_lifetime = 50.0;
    std::string output_dir = "globus-out";

    void validate() const {
        if (!(start_year < end_year)) throw ConfigurationError("start_year must precede end_year");
        check_year(start_year, "start_year");
        check_year(end_year, "end_year");
        if (building_types.empty()) throw ConfigurationError("building_types must be non-empty");
        if (scenarios.empty()) throw ConfigurationError("scenarios must be non-empty");
        if (!(default_lifetime > 0.0)) throw ConfigurationError("default_lifetime must be > 0");
    }
};

namespace detail {
inline std::vector<std::string> split_list(std::string_view v) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= v.size()) {
        const auto comma = v.find(',', start);
        auto item = trim(v.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (!item.empty()) out.push_back(std::move(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline bool parse_bool(const std::string& v, const std::string& source, std::size_t line) {
    const auto s = globus::detail::lower(v);
    if (s == "true" || s == "yes" || s == "1") return true;
    if (s == "false" || s == "no" || s == "0") return false;
    throw ParseError(source, line, "not a boolean: '" + v + "'");
}
} // namespace detail

/// Flat `key = value` document; '#' starts a comment line.
inline RunConfig parse_run_config(std::string_view text, const std::string& source) {
    RunConfig cfg;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto l = trim(raw);
        if (l.empty() || l.front() == '#') continue;
        const auto eq = l.find('=');
        if (eq == std::string::npos) throw ParseError(source, line, "expected key = value");
        const auto key = trim(std::string_view(l).substr(0, eq));
        const auto value = trim(std::string_view(l).substr(eq + 1));
        if (key == "economies") {
            cfg.economies.clear();
            for (auto& e : detail::split_list(value)) cfg.economies.emplace_back(e);
        } else if (key == "building_types") {
            cfg.building_types.clear();
            for (auto& t : detail::split_list(value)) cfg.building_types.push_back(parse_type_field(t, source, line));
        } else if (key == "scenarios") {
            cfg.scenarios.clear();
            for (auto& s : detail::split_list(value)) {
                const auto k = parse_scenario(s);
                if (!k) throw ParseError(source, line, "unknown scenario '" + s + "'");
                cfg.scenarios.push_back(*k);
            }
        } else if (key == "start_year") {
            cfg.start_year = parse_year_field(value, source, line, key);
        } else if (key == "end_year") {
            cfg.end_year = parse_year_field(value, source, line, key);
        } else if (key == "population_file") {
            cfg.population_file = value;
        } else if (key == "floorspace_file") {
            cfg.floorspace_file = value;
        } else if (key == "policy_file") {
            cfg.policy_file = value;
        } else if (key == "seed_strategy") {
            const auto s = globus::detail::lower(value);
            if (s == "uniform") cfg.seed_strategy = SeedStrategy::Uniform;
            else if (s == "single-vintage" || s == "single_vintage") cfg.seed_strategy = SeedStrategy::SingleVintage;
            else throw ParseError(source, line, "unknown seed_strategy '" + value + "'");
        } else if (key == "truncate_cdf_at_zero") {
            cfg.truncate_cdf_at_zero = detail::parse_bool(value, source, line);
        } else if (key == "default_lifetime") {
            cfg.default_lifetime = parse_number(value, source, line, key);
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else {
            throw ParseError(source, line, "unknown key '" + key + "'");
        }
    }
    try {
        cfg.validate();
    } catch (const Error& e) {
        throw ParseError(source, 0, e.what());
    }
    return cfg;
}

inline RunConfig load_run_config(const std::filesystem::path& file) {
    return parse_run_config(read_file(file), file.string());
}

// ---------------------------------------------------------------------------
// Input resolution

struct RunInputs {
    DemandSeries demand;
    ParameterTable policies;
};

namespace detail {
struct Source {
    std::string text;
    std::string name;
};

inline Source resolve_source(const std::string& configured, const char* file_name, std::string_view builtin) {
    if (!configured.empty()) return {read_file(configured), configured};
    if (const char* dir = std::getenv(kDataDirEnv); dir && *dir) {
        const auto path = std::filesystem::path(dir) / file_name;
        return {read_file(path), path.string()};
    }
    return {std::string(builtin), std::string("<builtin>/") + file_name};
}
} // namespace detail

/// Files named in the config win; otherwise `$GLOBUS_DATA_DIR/<name>.csv`;
/// otherwise the built-in tables.
inline RunInputs load_inputs(const RunConfig& cfg) {
    const auto pop = detail::resolve_source(cfg.population_file, "population.csv", defaults::kPopulationCsv);
    const auto fs = detail::resolve_source(cfg.floorspace_file, "floorspace.csv", defaults::kFloorspaceCsv);
    const auto pol = detail::resolve_source(cfg.policy_file, "policies.csv", defaults::kPolicyCsv);
    return {parse_demand(pop.text, pop.name, fs.text, fs.name, cfg.end_year),
            parse_policy_table(pol.text, pol.name)};
}

} // namespace globus::io

#pragma once

// Result export/import, run manifests and plot-data files.

#include <openssl/evp.h>

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "globus/io.hpp"
#include "globus/metrics.hpp"
#include "globus/runner.hpp"

namespace globus::io {

enum class Format { Csv, Json };

inline std::optional<Format> parse_format(std::string_view s) {
    const auto l = globus::detail::lower(s);
    if (l == "csv") return Format::Csv;
    if (l == "json") return Format::Json;
    return std::nullopt;
}

inline std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xF]);
    }
    return out;
}

inline constexpr std::string_view kResultColumns =
    "economy,building_type,scenario,year,stock_m2,DB,RB,DRB,NC,renovated_stock_m2,in_service_m2,surplus_m2";

inline std::string results_to_csv(const ResultSet& set) {
    std::string out(kResultColumns);
    out += '\n';
    for (const auto& r : set.results) {
        const auto& k = r.key();
        const std::string prefix = k.economy.code() + "," + std::string(to_string(k.building_type)) + "," +
                                   std::string(to_string(k.scenario)) + ",";
        for (const auto& row : r.ledger.rows) {
            out += prefix + std::to_string(row.year);
            for (double v : {row.scenario_stock(), row.demolished, row.renovated, row.demolished_renovated,
                             row.new_construction, row.renovated_stock, row.stock_total, row.surplus})
                out += "," + format_number(v);
            out += '\n';
        }
    }
    return out;
}

inline nlohmann::json results_to_json(const ResultSet& set) {
    auto rows = nlohmann::json::array();
    for (const auto& r : set.results) {
        const auto& k = r.key();
        for (const auto& row : r.ledger.rows)
            rows.push_back({{"economy", k.economy.code()},
                            {"building_type", to_string(k.building_type)},
                            {"scenario", to_string(k.scenario)},
                            {"year", row.year},
                            {"stock_m2", row.scenario_stock()},
                            {"DB", row.demolished},
                            {"RB", row.renovated},
                            {"DRB", row.demolished_renovated},
                            {"NC", row.new_construction},
                            {"renovated_stock_m2", row.renovated_stock},
                            {"in_service_m2", row.stock_total},
                            {"surplus_m2", row.surplus}});
    }
    return rows;
}

namespace detail {
// Appends a row, starting a new ledger whenever the tuple changes.
inline void append_row(ResultSet& set, const TupleKey& key, const LedgerRow& row, const std::string& source,
                       std::size_t line) {
    if (set.results.empty() || set.results.back().key() != key) {
        if (set.find(key.economy, key.building_type, key.scenario))
            throw ParseError(source, line, "rows for " + describe(key) + " are not contiguous");
        set.results.push_back({StockLedger{key, {}, {}}});
    }
    auto& rows = set.results.back().ledger.rows;
    if (!rows.empty() && row.year != rows.back().year + 1)
        throw ParseError(source, line, "non-consecutive year " + std::to_string(row.year));
    rows.push_back(row);
}

inline TupleKey parse_key(const std::string& e, const std::string& t, const std::string& s,
                          const std::string& source, std::size_t line) {
    const auto scen = parse_scenario(s);
    if (!scen) throw ParseError(source, line, "unknown scenario '" + s + "'");
    return {parse_economy_field(e, source, line), parse_type_field(t, source, line), *scen};
}
} // namespace detail

inline ResultSet parse_results_csv(std::string_view text, const std::string& source) {
    const auto csv = parse_csv(text, source);
    const auto ce = csv.require("economy"), ct = csv.require("building_type"), cs = csv.require("scenario"),
               cy = csv.require("year"), cdb = csv.require("DB"), crb = csv.require("RB"),
               cdrb = csv.require("DRB"), cnc = csv.require("NC"), cr = csv.require("renovated_stock_m2"),
               ctot = csv.require("in_service_m2"), csur = csv.require("surplus_m2");
    ResultSet set;
    for (const auto& r : csv.rows) {
        const auto& f = r.fields;
        LedgerRow row;
        row.year = parse_year_field(f[cy], source, r.line, "year");
        row.demolished = parse_number(f[cdb], source, r.line, "DB");
        row.renovated = parse_number(f[crb], source, r.line, "RB");
        row.demolished_renovated = parse_number(f[cdrb], source, r.line, "DRB");
        row.new_construction = parse_number(f[cnc], source, r.line, "NC");
        row.renovated_stock = parse_number(f[cr], source, r.line, "renovated_stock_m2");
        row.stock_total = parse_number(f[ctot], source, r.line, "in_service_m2");
        row.surplus = parse_number(f[csur], source, r.line, "surplus_m2");
        detail::append_row(set, detail::parse_key(f[ce], f[ct], f[cs], source, r.line), row, source, r.line);
    }
    return set;
}

inline ResultSet parse_results_json(std::string_view text, const std::string& source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source, 0, e.what());
    }
    if (!doc.is_array()) throw ParseError(source, 0, "expected a JSON array of rows");
    ResultSet set;
    std::size_t index = 0;
    for (const auto& j : doc) {
        ++index;
        try {
            LedgerRow row;
            row.year = j.at("year").get<int>();
            row.demolished = j.at("DB").get<double>();
            row.renovated = j.at("RB").get<double>();
            row.demolished_renovated = j.at("DRB").get<double>();
            row.new_construction = j.at("NC").get<double>();
            row.renovated_stock = j.at("renovated_stock_m2").get<double>();
            row.stock_total = j.at("in_service_m2").get<double>();
            row.surplus = j.at("surplus_m2").get<double>();
            const auto key = detail::parse_key(j.at("economy").get<std::string>(),
                                               j.at("building_type").get<std::string>(),
                                               j.at("scenario").get<std::string>(), source, index);
            detail::append_row(set, key, row, source, index);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(source, index, std::string("row ") + e.what());
        }
    }
    return set;
}

inline ResultSet import_results(const std::filesystem::path& file) {
    const auto text = read_file(file);
    if (file.extension() == ".json") return parse_results_json(text, file.string());
    return parse_results_csv(text, file.string());
}

inline nlohmann::json config_to_json(const RunConfig& cfg) {
    nlohmann::json j;
    auto eco = nlohmann::json::array();
    for (const auto& e : cfg.economies) eco.push_back(e.code());
    auto types = nlohmann::json::array();
    for (auto t : cfg.building_types) types.push_back(to_string(t));
    auto scen = nlohmann::json::array();
    for (auto s : cfg.scenarios) scen.push_back(to_string(s));
    j["economies"] = eco;
    j["building_types"] = types;
    j["scenarios"] = scen;
    j["start_year"] = cfg.start_year;
    j["end_year"] = cfg.end_year;
    j["population_file"] = cfg.population_file;
    j["floorspace_file"] = cfg.floorspace_file;
    j["policy_file"] = cfg.policy_file;
    j["seed_strategy"] = cfg.seed_strategy == SeedStrategy::Uniform ? "uniform" : "single-vintage";
    j["truncate_cdf_at_zero"] = cfg.truncate_cdf_at_zero;
    j["default_lifetime"] = cfg.default_lifetime;
    return j;
}

/// Canonical text of every value that influences a run. File names are
/// excluded so that identical data from different paths hash the same.
inline std::string canonical_inputs(const RunConfig& cfg, const RunInputs& in) {
    auto cj = config_to_json(cfg);
    cj.erase("population_file");
    cj.erase("floorspace_file");
    cj.erase("policy_file");
    std::string out = "config " + cj.dump() + "\n";
    for (const auto& eco : in.demand.economies())
        for (auto t : kBuildingTypes) {
            if (!in.demand.has(eco, t)) continue;
            const auto& tr = in.demand.track(eco, t);
            out += "demand " + eco.code() + " " + std::string(to_string(t)) + "\n";
            for (const auto& [y, v] : tr.population) out += std::to_string(y) + " " + format_number(v) + "\n";
            for (const auto& [y, v] : tr.per_capita) out += std::to_string(y) + " " + format_number(v) + "\n";
        }
    auto ramp = [](const std::optional<RenovationRamp>& r) {
        if (!r) return std::string("-");
        return std::to_string(r->start_year) + ":" + std::to_string(r->end_year) + ":" +
               format_number(r->start_rate) + ":" + format_number(r->end_rate) + ":" +
               (r->shape == RenovationRamp::Shape::Linear ? "lin" : "inc") + ":" + format_number(r->step);
    };
    for (const auto& r : in.policies.rows)
        out += "policy " + std::string(to_string(r.scenario)) + " " + r.economy.code() + " " +
               std::string(to_string(r.building_type)) + " " + std::to_string(r.vintage_from) + " " +
               std::to_string(r.vintage_to) + " " + format_number(r.average_lifetime) + " " +
               format_number(r.initial_lifetime) + " " +
               (r.renovation_cycle ? format_number(*r.renovation_cycle) : "-") + " " +
               ramp(r.first_renovation) + " " + ramp(r.second_renovation) + "\n";
    return out;
}

inline std::string input_hash(const RunConfig& cfg, const RunInputs& in) {
    return sha256_hex(canonical_inputs(cfg, in));
}

struct ExportOptions {
    Format format = Format::Csv;
    bool plot_data = false;
};

/// Per-year NR/BAU/TEP stock side by side, one line per economy and type.
inline std::string stock_comparison_csv(const ResultSet& set) {
    std::string out = "economy,building_type,year,NR,BAU,TEP\n";
    std::set<std::pair<EconomyId, BuildingType>> seen;
    for (const auto& r : set.results) {
        const auto pair = std::make_pair(r.key().economy, r.key().building_type);
        if (!seen.insert(pair).second) continue;
        for (const auto& row : r.ledger.rows) {
            out += pair.first.code() + "," + std::string(to_string(pair.second)) + "," + std::to_string(row.year);
            for (auto s : kScenarios) {
                out += ",";
                if (const auto* x = set.find(pair.first, pair.second, s); x && x->ledger.covers(row.year))
                    out += format_number(x->ledger.at(row.year).scenario_stock());
            }
            out += "\n";
        }
    }
    return out;
}

inline std::string per_capita_csv(const ResultSet& set, const DemandSeries& demand) {
    std::string out = "economy,building_type,year,per_capita_m2\n";
    std::set<std::pair<EconomyId, BuildingType>> seen;
    for (const auto& r : set.results) {
        const auto pair = std::make_pair(r.key().economy, r.key().building_type);
        if (!seen.insert(pair).second || !demand.has(pair.first, pair.second)) continue;
        for (const auto& row : r.ledger.rows)
            out += pair.first.code() + "," + std::string(to_string(pair.second)) + "," + std::to_string(row.year) +
                   "," + format_number(demand.track(pair.first, pair.second).per_capita.at(row.year)) + "\n";
    }
    return out;
}

/// Writes results.{csv,json}, manifest.json and optionally plot data.
/// Returns the paths written.
inline std::vector<std::filesystem::path> export_results(const ResultSet& set, const std::filesystem::path& dir,
                                                         const RunConfig& cfg, const RunInputs& inputs,
                                                         ExportOptions options = {}) {
    if (set.results.empty()) throw InvalidParameter("export_results: nothing to export");
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    std::vector<std::filesystem::path> written;
    const bool json = options.format == Format::Json;
    const std::string body = json ? results_to_json(set).dump(1) + "\n" : results_to_csv(set);
    const auto results_path = dir / (json ? "results.json" : "results.csv");
    write_file(results_path, body);
    written.push_back(results_path);

    if (options.plot_data) {
        const auto s1 = dir / "per_capita_floorspace.csv";
        write_file(s1, per_capita_csv(set, inputs.demand));
        written.push_back(s1);
        const auto s2 = dir / "scenario_stock.csv";
        write_file(s2, stock_comparison_csv(set));
        written.push_back(s2);
    }

    nlohmann::json manifest;
    manifest["tool"] = "globus";
    manifest["config"] = config_to_json(cfg);
    manifest["input_sha256"] = input_hash(cfg, inputs);
    manifest["results_file"] = results_path.filename().string();
    manifest["results_sha256"] = sha256_hex(body);
    auto notes = nlohmann::json::array();
    for (const auto& n : set.notes) notes.push_back(n);
    manifest["notes"] = notes;
    const auto manifest_path = dir / "manifest.json";
    write_file(manifest_path, manifest.dump(2) + "\n");
    written.push_back(manifest_path);
    return written;
}

} // namespace globus::io

#pragma once

// Command-line front end: run, compare, validate, oracle.

#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "globus/export.hpp"
#include "globus/metrics.hpp"
#include "globus/runner.hpp"
#include "globus/survival.hpp"

namespace globus::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kIoFailure = 2 };

namespace detail {

struct Filters {
    std::string config;
    std::vector<std::string> scenarios;
    std::vector<std::string> economies;
    std::vector<std::string> types;
    std::optional<int> from;
    std::optional<int> to;
    std::string out;
    std::string format = "csv";
};

inline void add_filters(CLI::App* app, Filters& f, bool with_scenario) {
    app->add_option("--config", f.config, "Run configuration file (key = value)");
    if (with_scenario) app->add_option("--scenario", f.scenarios, "Scenario(s): NR, BAU, TEP");
    app->add_option("--economy", f.economies, "Economy code(s)");
    app->add_option("--type", f.types, "Building type(s): residential, non-residential");
    app->add_option("--from", f.from, "First simulated year");
    app->add_option("--to", f.to, "Last simulated year");
    app->add_option("--out", f.out, "Output directory");
    app->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

inline io::RunConfig make_config(const Filters& f) {
    io::RunConfig cfg = f.config.empty() ? io::RunConfig{} : io::load_run_config(f.config);
    if (!f.scenarios.empty()) {
        cfg.scenarios.clear();
        for (const auto& s : f.scenarios) {
            const auto k = parse_scenario(s);
            if (!k) throw ConfigurationError("unknown scenario '" + s + "'");
            cfg.scenarios.push_back(*k);
        }
    }
    if (!f.economies.empty()) {
        cfg.economies.clear();
        for (const auto& e : f.economies) cfg.economies.emplace_back(e);
    }
    if (!f.types.empty()) {
        cfg.building_types.clear();
        for (const auto& t : f.types) {
            const auto k = parse_building_type(t);
            if (!k) throw ConfigurationError("unknown building type '" + t + "'");
            cfg.building_types.push_back(*k);
        }
    }
    if (f.from) cfg.start_year = *f.from;
    if (f.to) cfg.end_year = *f.to;
    if (!f.out.empty()) cfg.output_dir = f.out;
    cfg.validate();
    return cfg;
}

inline std::string pct(double v) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << v * 100.0 << "%";
    return s.str();
}

inline std::string ramp_summary(const std::optional<RenovationRamp>& r) {
    if (!r) return "none";
    std::string s = pct(r->start_rate) + "->" + pct(r->end_rate) + " " + std::to_string(r->start_year) + "-" +
                    std::to_string(r->end_year);
    if (r->shape == RenovationRamp::Shape::AnnualIncrement) s += " (+" + pct(r->step) + "/yr)";
    return s;
}

inline int cmd_run(const Filters& f, std::ostream& out) {
    const auto cfg = make_config(f);
    const auto inputs = io::load_inputs(cfg);
    const auto results = run_scenarios(cfg, inputs);
    io::ExportOptions opts;
    opts.format = *io::parse_format(f.format);
    opts.plot_data = true;
    for (const auto& p : io::export_results(results, cfg.output_dir, cfg, inputs, opts))
        out << "wrote " << p.string() << "\n";
    for (const auto& n : results.notes) out << "note: " << n << "\n";
    return kOk;
}

inline int cmd_compare(const Filters& f, const std::string& baseline, const std::string& variant,
                       std::optional<int> only_year, std::ostream& out,
                       std::ostream& err) {
    const auto b = parse_scenario(baseline);
    const auto v = parse_scenario(variant);
    if (!b || !v) throw ConfigurationError("compare: unknown scenario '" + (b ? variant : baseline) + "'");
    auto cfg = make_config(f);
    cfg.scenarios = {*b};
    if (*v != *b) cfg.scenarios.push_back(*v);
    const auto inputs = io::load_inputs(cfg);
    const auto results = run_scenarios(cfg, inputs);

    std::vector<ScenarioDelta> deltas;
    for (const auto& eco : selected_economies(cfg, inputs))
        for (auto t : cfg.building_types) {
            const auto* rb = results.find(eco, t, *b);
            const auto* rv = results.find(eco, t, *v);
            if (!rb || !rv) continue;
            for (Year y = cfg.start_year; y <= cfg.end_year; ++y)
                if (!only_year || *only_year == y) deltas.push_back(scenario_delta(*rb, *rv, y));
        }

    std::string body;
    if (f.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& d : deltas)
            arr.push_back({{"economy", d.economy.code()},
                           {"building_type", to_string(d.building_type)},
                           {"year", d.year},
                           {"baseline", to_string(d.baseline)},
                           {"variant", to_string(d.variant)},
                           {"baseline_stock_m2", d.baseline_stock},
                           {"variant_stock_m2", d.variant_stock},
                           {"absolute_m2", d.absolute},
                           {"relative", d.relative ? nlohmann::json(*d.relative) : nlohmann::json(nullptr)}});
        body = arr.dump(1) + "\n";
    } else {
        body = "economy,building_type,year,baseline,variant,baseline_stock_m2,variant_stock_m2,absolute_m2,relative\n";
        for (const auto& d : deltas)
            body += d.economy.code() + "," + std::string(to_string(d.building_type)) + "," +
                    std::to_string(d.year) + "," + std::string(to_string(d.baseline)) + "," +
                    std::string(to_string(d.variant)) + "," + io::format_number(d.baseline_stock) + "," +
                    io::format_number(d.variant_stock) + "," + io::format_number(d.absolute) + "," +
                    (d.relative ? io::format_number(*d.relative) : std::string("NA")) + "\n";
    }
    if (!f.out.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(f.out, ec);
        if (ec) throw IoError("cannot create " + f.out + ": " + ec.message());
        io::write_file(std::filesystem::path(f.out) / (f.format == "json" ? "deltas.json" : "deltas.csv"), body);
    }
    out << body;
    for (const auto& d : deltas)
        if (d.year == cfg.end_year && d.relative)
            err << d.economy.code() << " " << to_string(d.building_type) << " " << d.year << ": "
                      << to_string(d.variant) << " vs " << to_string(d.baseline) << " "
                      << pct(-*d.relative) << "\n";
    return kOk;
}

inline int cmd_validate(const Filters& f, std::ostream& out) {
    const auto cfg = make_config(f);
    const auto inputs = io::load_inputs(cfg);
    const auto with_policies = inputs.policies.policy_economies();
    for (const auto& eco : selected_economies(cfg, inputs))
        for (auto t : cfg.building_types) {
            if (!inputs.demand.has(eco, t))
                throw ConfigurationError("no demand data for " + eco.code() + " " + std::string(to_string(t)));
            demand_at(inputs.demand, eco, t, cfg.start_year);
            demand_at(inputs.demand, eco, t, cfg.end_year);
            for (auto s : cfg.scenarios) {
                if (s != ScenarioKind::NR && !with_policies.count(eco)) continue;
                const auto p = build_policy(s, eco, t, inputs.policies, cfg.default_lifetime);
                out << to_string(s) << " " << eco.code() << " " << to_string(t) << ": lifetime initial/average";
                for (const auto& seg : p.construction_lifetimes) {
                    out << " " << io::format_number(seg.lifetime.mean) << "/"
                        << io::format_number(seg.average_lifetime);
                    if (seg.from != kMinYear || seg.to != kMaxYear)
                        out << "[" << (seg.from == kMinYear ? std::string() : std::to_string(seg.from)) << ".."
                            << (seg.to == kMaxYear ? std::string() : std::to_string(seg.to)) << "]";
                }
                out << "; cycle " << (p.renovation_cycle ? io::format_number(*p.renovation_cycle) : "-")
                    << "; first " << ramp_summary(p.first_renovation) << "; second "
                    << ramp_summary(p.second_renovation) << "\n";
            }
        }
    out << "policy-bearing economies: " << with_policies.size() << " (";
    bool first = true;
    for (const auto& e : with_policies) {
        out << (first ? "" : ", ") << e.code();
        first = false;
    }
    out << ")\nOK\n";
    return kOk;
}

inline int cmd_oracle(double mean, std::size_t samples, std::uint64_t seed, double tolerance, std::ostream& out) {
    const auto dist = make_default_lifetime(mean);
    const auto mc = monte_carlo_survival(dist, samples, seed);
    double worst = 0.0;
    for (double age : {mean - dist.std_dev, mean, mean + dist.std_dev}) {
        const double analytic = lifetime_cdf(age, dist, true);
        const double empirical = mc(age);
        worst = std::max(worst, std::abs(analytic - empirical));
        out << "T=" << io::format_number(age) << " analytic=" << io::format_number(analytic)
            << " monte_carlo=" << io::format_number(empirical) << "\n";
    }
    out << "max deviation " << io::format_number(worst) << " (tolerance " << io::format_number(tolerance)
        << ")\n";
    return worst < tolerance ? kOk : kValidationFailure;
}

} // namespace detail

/// Returns the process exit code: 0 success, 1 validation failure or bad
/// usage, 2 I/O failure.
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
    CLI::App app{"Cohort-based building stock turnover simulator"};
    app.require_subcommand(1);

    detail::Filters run_f, cmp_f, val_f;
    auto* run = app.add_subcommand("run", "Simulate the configured scenarios and export results");
    detail::add_filters(run, run_f, true);

    auto* cmp = app.add_subcommand("compare", "Stock deltas between two scenarios");
    std::string baseline, variant;
    std::optional<int> only_year;
    cmp->add_option("baseline", baseline, "Baseline scenario")->required();
    cmp->add_option("variant", variant, "Variant scenario")->required();
    cmp->add_option("--year", only_year, "Only report this year");
    detail::add_filters(cmp, cmp_f, false);

    auto* val = app.add_subcommand("validate", "Check inputs and print policy summaries");
    detail::add_filters(val, val_f, true);

    auto* orc = app.add_subcommand("oracle", "Monte-Carlo cross-check of the lifetime CDF");
    double mean = 50.0, tolerance = 0.002;
    std::size_t samples = 1'000'000;
    std::uint64_t seed = 20240501;
    orc->add_option("--mean", mean, "Mean lifetime (years)");
    orc->add_option("--samples", samples, "Number of samples");
    orc->add_option("--seed", seed, "RNG seed");
    orc->add_option("--tolerance", tolerance, "Maximum allowed deviation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kValidationFailure;
    }

    try {
        if (run->parsed()) return detail::cmd_run(run_f, out);
        if (cmp->parsed()) return detail::cmd_compare(cmp_f, baseline, variant, only_year, out, err);
        if (val->parsed()) return detail::cmd_validate(val_f, out);
        if (orc->parsed()) return detail::cmd_oracle(mean, samples, seed, tolerance, out);
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return kIoFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
    return kValidationFailure;
}

} // namespace globus::cli

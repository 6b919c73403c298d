#pragma once

// Runs every configured (economy, building type, scenario) tuple.

#include <future>
#include <string>
#include <vector>

#include "globus/engine.hpp"
#include "globus/io.hpp"

namespace globus {

struct ResultSet {
    std::vector<SimulationResult> results;
    std::vector<std::string> notes; // tuples skipped and why

    const SimulationResult* find(const EconomyId& e, BuildingType t, ScenarioKind s) const {
        for (const auto& r : results)
            if (r.key() == TupleKey{e, t, s}) return &r;
        return nullptr;
    }
    const SimulationResult& at(const EconomyId& e, BuildingType t, ScenarioKind s) const {
        if (const auto* r = find(e, t, s)) return *r;
        throw ConfigurationError("no result for " + describe(TupleKey{e, t, s}));
    }
    bool operator==(const ResultSet& o) const {
        if (results.size() != o.results.size()) return false;
        for (std::size_t i = 0; i < results.size(); ++i)
            if (results[i].ledger.key != o.results[i].ledger.key ||
                results[i].ledger.rows != o.results[i].ledger.rows)
                return false;
        return true;
    }
};

inline std::vector<EconomyId> selected_economies(const io::RunConfig& cfg, const io::RunInputs& in) {
    if (!cfg.economies.empty()) return cfg.economies;
    const auto all = in.demand.economies();
    return {all.begin(), all.end()};
}

/// Tuples run independently (in parallel); results come back in
/// economy / type / scenario order. BAU and TEP are skipped for economies
/// without policy rows.
inline ResultSet run_scenarios(const io::RunConfig& cfg, const io::RunInputs& in) {
    cfg.validate();
    EngineOptions options;
    options.seed = cfg.seed_strategy;
    options.truncate_cdf_at_zero = cfg.truncate_cdf_at_zero;
    const auto with_policies = in.policies.policy_economies();

    ResultSet out;
    std::vector<std::future<SimulationResult>> jobs;
    for (const auto& eco : selected_economies(cfg, in)) {
        for (auto type : cfg.building_types) {
            if (!in.demand.has(eco, type))
                throw ConfigurationError("no demand data for " + eco.code() + " " + std::string(to_string(type)));
            for (auto scen : cfg.scenarios) {
                if (scen != ScenarioKind::NR && !with_policies.count(eco)) {
                    out.notes.push_back(describe(TupleKey{eco, type, scen}) + " skipped: NR-only economy");
                    continue;
                }
                ScenarioConfig sc{build_policy(scen, eco, type, in.policies, cfg.default_lifetime), options};
                jobs.push_back(std::async(std::launch::async, [sc = std::move(sc), &in, &cfg] {
                    return run_simulation(sc, in.demand, cfg.start_year, cfg.end_year);
                }));
            }
        }
    }
    for (auto& j : jobs) out.results.push_back(j.get());
    return out;
}

} // namespace globus

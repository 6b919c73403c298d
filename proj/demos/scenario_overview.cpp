// Runs the built-in data for all scenarios and prints 2070 stock by
// economy plus the NR -> TEP decline.

#include <cstdio>

#include "globus/globus.hpp"

int main() {
    using namespace globus;
    io::RunConfig cfg;
    const auto inputs = io::load_inputs(cfg);
    const auto results = run_scenarios(cfg, inputs);

    std::printf("%-6s %-16s %12s %12s %12s %8s %8s\n", "econ", "type", "NR 2070", "BAU 2070", "TEP 2070",
                "BAU-%", "TEP-%");
    for (const auto& eco : inputs.policies.policy_economies())
        for (auto t : kBuildingTypes) {
            const auto& nr = results.at(eco, t, ScenarioKind::NR);
            const auto& bau = results.at(eco, t, ScenarioKind::BAU);
            const auto& tep = results.at(eco, t, ScenarioKind::TEP);
            const auto db = scenario_delta(nr, bau, 2070);
            const auto dt = scenario_delta(nr, tep, 2070);
            std::printf("%-6s %-16s %12.4g %12.4g %12.4g %7.1f%% %7.1f%%\n", eco.code().c_str(),
                        std::string(to_string(t)).c_str(), db.baseline_stock, db.variant_stock, dt.variant_stock,
                        100.0 * db.relative.value_or(0.0), 100.0 * dt.relative.value_or(0.0));
        }

    // Aggregate over the policy-bearing economies.
    for (auto s : kScenarios) {
        double y2021 = 0.0, y2070 = 0.0;
        for (const auto& eco : inputs.policies.policy_economies())
            for (auto t : kBuildingTypes) {
                const auto& r = results.at(eco, t, s);
                y2021 += r.ledger.at(2021).scenario_stock();
                y2070 += r.ledger.at(2070).scenario_stock();
            }
        std::printf("%-4s aggregate 2021 %.4g  2070 %.4g  change %+.1f%%\n", std::string(to_string(s)).c_str(),
                    y2021, y2070, 100.0 * (y2070 / y2021 - 1.0));
    }

    // Embodied carbon with a flat illustrative intensity.
    constexpr double kIntensity = 300.0; // kgCO2/m2
    for (auto s : {ScenarioKind::NR, ScenarioKind::TEP}) {
        double total = 0.0;
        for (auto t : kBuildingTypes)
            total += embodied_carbon(new_construction_series(results.at(EconomyId("CN"), t, s)), kIntensity)
                         .cumulative();
        std::printf("CN embodied carbon 2000-2070 %s @%g kg/m2: %.1f MtCO2\n", std::string(to_string(s)).c_str(),
                    kIntensity, total);
    }
    return 0;
}

#pragma once

// Scenario deltas, avoided construction and embodied carbon.

#include <map>
#include <optional>

#include "globus/engine.hpp"

namespace globus {

struct ScenarioDelta {
    EconomyId economy;
    BuildingType building_type = BuildingType::Residential;
    Year year = 0;
    ScenarioKind baseline = ScenarioKind::NR;
    ScenarioKind variant = ScenarioKind::NR;
    double baseline_stock = 0.0;
    double variant_stock = 0.0;
    double absolute = 0.0;          // baseline - variant, m2
    std::optional<double> relative; // absolute / baseline; empty when baseline is 0
};

namespace detail {
inline void require_same_tuple(const SimulationResult& a, const SimulationResult& b) {
    if (a.key().economy != b.key().economy || a.key().building_type != b.key().building_type)
        throw InvalidComparison("cannot compare " + describe(a.key()) + " with " + describe(b.key()));
}
} // namespace detail

inline ScenarioDelta scenario_delta(const SimulationResult& baseline, const SimulationResult& variant,
                                    Year year) {
    detail::require_same_tuple(baseline, variant);
    if (!baseline.ledger.covers(year) || !variant.ledger.covers(year))
        throw InvalidComparison("year " + std::to_string(year) + " not covered by both results");
    ScenarioDelta d;
    d.economy = baseline.key().economy;
    d.building_type = baseline.key().building_type;
    d.year = year;
    d.baseline = baseline.key().scenario;
    d.variant = variant.key().scenario;
    d.baseline_stock = baseline.ledger.at(year).scenario_stock();
    d.variant_stock = variant.ledger.at(year).scenario_stock();
    d.absolute = d.baseline_stock - d.variant_stock;
    if (d.baseline_stock > 0.0) d.relative = d.absolute / d.baseline_stock;
    return d;
}

/// NC_NR - NC_scenario per year.
///
/// Cumulatively this equals the scenario's net renovated stock
/// sum(RB - DRB) plus sum(DB_NR - DB_scenario); the second term appears
/// because construction avoided earlier no longer demolishes later.
inline std::map<Year, double> avoided_construction(const SimulationResult& nr,
                                                   const SimulationResult& scenario) {
    detail::require_same_tuple(nr, scenario);
    if (nr.ledger.empty() || scenario.ledger.empty() ||
        nr.ledger.first_year() != scenario.ledger.first_year() ||
        nr.ledger.last_year() != scenario.ledger.last_year())
        throw InvalidComparison("avoided_construction: results cover different spans");
    std::map<Year, double> out;
    for (std::size_t i = 0; i < nr.ledger.rows.size(); ++i)
        out.emplace(nr.ledger.rows[i].year,
                    nr.ledger.rows[i].new_construction - scenario.ledger.rows[i].new_construction);
    return out;
}

inline std::map<Year, double> new_construction_series(const SimulationResult& r) {
    std::map<Year, double> out;
    for (const auto& row : r.ledger.rows) out.emplace(row.year, row.new_construction);
    return out;
}

inline constexpr double kKgToMt = 1e-9;

struct EmbodiedCarbonSeries {
    std::map<Year, double> emissions; // MtCO2
    std::map<Year, double> intensity; // kgCO2 / m2

    double cumulative() const {
        double s = 0.0;
        for (const auto& [y, v] : emissions) s += v;
        return s;
    }
};

/// New construction (m2) times intensity (kgCO2/m2), reported in MtCO2.
inline EmbodiedCarbonSeries embodied_carbon(const std::map<Year, double>& new_construction,
                                            const std::map<Year, double>& intensity) {
    EmbodiedCarbonSeries out;
    for (const auto& [y, v] : intensity)
        if (!(v >= 0.0)) throw InvalidParameter("embodied carbon intensity must be >= 0 in " + std::to_string(y));
    for (const auto& [y, nc] : new_construction) {
        const double k = detail::lookup(intensity, y, "embodied carbon intensity");
        out.intensity.emplace(y, k);
        out.emissions.emplace(y, nc * k * kKgToMt);
    }
    return out;
}

/// Same intensity in every year.
inline EmbodiedCarbonSeries embodied_carbon(const std::map<Year, double>& new_construction,
                                            double intensity) {
    std::map<Year, double> k;
    for (const auto& [y, v] : new_construction) k.emplace(y, intensity);
    return embodied_carbon(new_construction, k);
}

} // namespace globus

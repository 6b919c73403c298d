#pragma once

// Yearly cohort turnover: vintage demolition, renovation of would-be
// demolitions, demolition of renovated floorspace and demand-closing new
// construction.

#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "globus/core.hpp"
#include "globus/scenario.hpp"
#include "globus/survival.hpp"

namespace globus {

enum class SeedStrategy {
    Uniform,       // initial stock spread evenly over the mean-lifetime years before start
    SingleVintage, // initial stock built entirely in the start year
};

struct EngineOptions {
    SeedStrategy seed = SeedStrategy::Uniform;
    bool truncate_cdf_at_zero = false;
    /// When set, every cohort uses this table regardless of its lifetime.
    std::optional<HazardTable> fixed_hazards;
};

/// Lazily built hazard tables keyed by lifetime distribution.
class HazardCache {
public:
    explicit HazardCache(EngineOptions options = {}) : options_(std::move(options)) {}

    const HazardTable& operator()(const LifetimeDistribution& dist) {
        if (options_.fixed_hazards) return *options_.fixed_hazards;
        auto it = tables_.find(dist);
        if (it == tables_.end())
            it = tables_.emplace(dist, std::make_shared<const HazardTable>(
                                           build_hazard_table(dist, options_.truncate_cdf_at_zero)))
                     .first;
        return *it->second;
    }

    const EngineOptions& options() const noexcept { return options_; }

private:
    EngineOptions options_;
    std::map<LifetimeDistribution, std::shared_ptr<const HazardTable>> tables_;
};

/// Floorspace of `cohort` demolished in `year`: floorspace * hazard(age).
inline double demolish_vintage(const Cohort& cohort, Year year, const HazardTable& table) {
    if (year < cohort.vintage)
        throw InvalidParameter("demolish_vintage: year " + std::to_string(year) +
                               " precedes vintage " + std::to_string(cohort.vintage));
    if (!(cohort.floorspace >= 0.0)) throw InvalidParameter("demolish_vintage: negative floorspace");
    return cohort.floorspace * table.hazard(year - cohort.vintage);
}

/// DB: demolition summed over new-build vintages up to `year`. Renovated
/// cohorts are skipped.
template <class HazardLookup>
double total_demolition(std::span<const Cohort> cohorts, Year year, HazardLookup&& hazards) {
    double total = 0.0;
    for (const auto& c : cohorts)
        if (!c.renovated() && c.vintage <= year) total += demolish_vintage(c, year, hazards(c.lifetime));
    return total;
}

/// RB = rate * DB.
inline double renovate(double demolished, double rate) {
    if (!(rate >= 0.0 && rate <= 1.0))
        throw InvalidParameter("renovation rate must be in [0, 1], got " + std::to_string(rate));
    if (!(demolished >= 0.0)) throw InvalidParameter("renovate: demolished floorspace must be >= 0");
    return rate * demolished;
}

/// DRB: demolition of renovated cohorts, ages counted from the renovation
/// year. New-build cohorts are skipped.
template <class HazardLookup>
double demolish_renovated(std::span<const Cohort> cohorts, Year year, HazardLookup&& hazards) {
    double total = 0.0;
    for (const auto& c : cohorts)
        if (c.renovated() && c.vintage <= year) total += demolish_vintage(c, year, hazards(c.lifetime));
    return total;
}

struct EngineState {
    StockLedger ledger;
    Year current_year = 0;
    HazardCache hazards;
};

/// State at `start` holding `initial_stock` and a zero-flow ledger row.
inline EngineState seed_state(const ScenarioPolicy& policy, double initial_stock, Year start,
                              const EngineOptions& options = {}) {
    check_year(start, "start year");
    if (!(initial_stock >= 0.0)) throw InvalidParameter("initial stock must be >= 0");
    EngineState state{StockLedger{policy.key(), {}, {}}, start, HazardCache(options)};
    auto& cohorts = state.ledger.cohorts;
    if (initial_stock > 0.0) {
        if (options.seed == SeedStrategy::SingleVintage) {
            cohorts.push_back(make_new_build(start, initial_stock, policy.construction_lifetime(start)));
        } else {
            const double mean = policy.construction_lifetime(start - 1).mean;
            const int years = std::max(1, static_cast<int>(std::lround(mean)));
            const double share = initial_stock / years;
            for (Year v = start - years; v < start; ++v)
                cohorts.push_back(make_new_build(v, share, policy.construction_lifetime(v)));
        }
    }
    LedgerRow row;
    row.year = start;
    row.stock_total = cohort_total(cohorts);
    state.ledger.rows.push_back(row);
    return state;
}

/// Advance one year towards a target stock of `demand` m2.
///
/// Order: demolish new-build vintages (DB) and renovated ones (DRB); renovate
/// a share of DB, plus a second-renovation share of generation-1 DRB; then
/// build NC = max(0, demand - remaining stock). Stock above demand is kept
/// and reported as surplus.
inline void step_year(EngineState& state, double demand, const ScenarioPolicy& policy) {
    if (!(demand >= 0.0) || !std::isfinite(demand))
        throw InvalidParameter("demand must be finite and >= 0");
    const Year year = state.current_year + 1;
    auto& cohorts = state.ledger.cohorts;

    double db = 0.0;
    double drb = 0.0;
    double drb_first_generation = 0.0;
    for (auto& c : cohorts) {
        const double removed = demolish_vintage(c, year, state.hazards(c.lifetime));
        c.floorspace -= removed;
        if (c.generation == 0) {
            db += removed;
        } else {
            drb += removed;
            if (c.generation == 1) drb_first_generation += removed;
        }
    }
    std::erase_if(cohorts, [](const Cohort& c) { return c.floorspace <= 0.0; });

    const double rb_first = renovate(db, policy.first_rate(year));
    const double rb_second = renovate(drb_first_generation, policy.second_rate(year));
    if (rb_first > 0.0)
        cohorts.push_back(make_renovated(year, rb_first, policy.renovation_lifetime(), 1));
    if (rb_second > 0.0)
        cohorts.push_back(make_renovated(year, rb_second, policy.renovation_lifetime(), 2));

    const double after_flows = cohort_total(cohorts);
    const double nc = std::max(0.0, demand - after_flows);
    if (nc > 0.0) cohorts.push_back(make_new_build(year, nc, policy.construction_lifetime(year)));

    LedgerRow row;
    row.year = year;
    row.demolished = db;
    row.renovated = rb_first + rb_second;
    row.demolished_renovated = drb;
    row.new_construction = nc;
    row.surplus = std::max(0.0, after_flows - demand);
    for (const auto& c : cohorts) {
        row.stock_total += c.floorspace;
        if (c.renovated()) row.renovated_stock += c.floorspace;
    }
    state.ledger.rows.push_back(row);
    state.current_year = year;
}

struct ScenarioConfig {
    ScenarioPolicy policy;
    EngineOptions options;
};

struct SimulationResult {
    StockLedger ledger;

    const TupleKey& key() const noexcept { return ledger.key; }
    /// Years in which demand fell below the stock that survived demolition.
    std::vector<Year> surplus_years() const {
        std::vector<Year> out;
        for (const auto& r : ledger.rows)
            if (r.surplus > 0.0) out.push_back(r.year);
        return out;
    }
};

/// Seed the stock at `start` to meet demand, then step through `end`.
inline SimulationResult run_simulation(const ScenarioConfig& config, const DemandSeries& demand,
                                       Year start, Year end) {
    check_year(start, "start year");
    check_year(end, "end year");
    if (!(start < end)) throw InvalidParameter("simulation start must precede end");
    const auto& p = config.policy;

    std::vector<double> targets;
    targets.reserve(static_cast<std::size_t>(end - start + 1));
    for (Year y = start; y <= end; ++y) targets.push_back(demand_at(demand, p.economy, p.building_type, y));

    EngineState state = seed_state(p, targets.front(), start, config.options);
    for (std::size_t i = 1; i < targets.size(); ++i) step_year(state, targets[i], p);
    return {std::move(state.ledger)};
}

} // namespace globus

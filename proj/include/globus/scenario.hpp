#pragma once

// Scenario policies (renovation ramps, lifetime schedules) and exogenous
// floorspace demand.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "globus/core.hpp"

namespace globus {

inline constexpr Year kDefaultRampStart = 2021;
inline constexpr Year kDefaultRampEnd = 2070;

/// Renovation rate schedule between two years.
struct RenovationRamp {
    enum class Shape { Linear, AnnualIncrement };

    Year start_year = kDefaultRampStart;
    Year end_year = kDefaultRampEnd;
    double start_rate = 0.0;
    double end_rate = 0.0;
    Shape shape = Shape::Linear;
    double step = 0.0; // per year, AnnualIncrement only

    /// Renovation is applied by the engine from `start_year` onwards.
    bool active(Year y) const noexcept { return y >= start_year; }
    bool operator==(const RenovationRamp&) const = default;
};

inline RenovationRamp make_ramp(Year start_year, Year end_year, double start_rate, double end_rate,
                                RenovationRamp::Shape shape = RenovationRamp::Shape::Linear,
                                double step = 0.0) {
    if (!(start_year < end_year))
        throw InvalidParameter("ramp start year must precede end year");
    if (!(start_rate >= 0.0 && start_rate <= end_rate && end_rate <= 1.0))
        throw InvalidParameter("ramp rates must satisfy 0 <= start <= end <= 1, got " +
                               std::to_string(start_rate) + ".." + std::to_string(end_rate));
    if (shape == RenovationRamp::Shape::AnnualIncrement && !(step >= 0.0))
        throw InvalidParameter("ramp annual increment must be >= 0");
    return {start_year, end_year, start_rate, end_rate, shape, step};
}

/// Rate in `year`, always within [start_rate, end_rate].
inline double rate_at(const RenovationRamp& ramp, Year year) {
    double r = ramp.start_rate;
    if (ramp.shape == RenovationRamp::Shape::Linear) {
        const double f = static_cast<double>(year - ramp.start_year) /
                         static_cast<double>(ramp.end_year - ramp.start_year);
        r = ramp.start_rate + (ramp.end_rate - ramp.start_rate) * f;
    } else {
        r = ramp.start_rate + ramp.step * static_cast<double>(year - ramp.start_year);
    }
    return std::clamp(r, ramp.start_rate, ramp.end_rate);
}

/// Lifetimes for vintages in [from, to].
///
/// `lifetime` governs when new floorspace first reaches demolition (the
/// initial lifetime); `average_lifetime` is the total service life including
/// renovation cycles and is informational.
struct LifetimeSegment {
    Year from = kMinYear;
    Year to = kMaxYear;
    LifetimeDistribution lifetime;
    double average_lifetime = 0.0;
};

/// One row of a policy parameter table.
struct PolicyRow {
    ScenarioKind scenario = ScenarioKind::BAU;
    EconomyId economy;
    BuildingType building_type = BuildingType::Residential;
    Year vintage_from = kMinYear;
    Year vintage_to = kMaxYear;
    double average_lifetime = 0.0;
    double initial_lifetime = 0.0; // age of first demolition exposure
    std::optional<double> renovation_cycle;
    std::optional<RenovationRamp> first_renovation;
    std::optional<RenovationRamp> second_renovation;
    std::size_t line = 0;
};

struct ParameterTable {
    std::string source;
    std::vector<PolicyRow> rows;

    std::vector<const PolicyRow*> find(ScenarioKind s, const EconomyId& e, BuildingType t) const {
        std::vector<const PolicyRow*> out;
        for (const auto& r : rows)
            if (r.scenario == s && r.economy == e && r.building_type == t) out.push_back(&r);
        std::sort(out.begin(), out.end(),
                  [](const PolicyRow* a, const PolicyRow* b) { return a->vintage_from < b->vintage_from; });
        return out;
    }

    /// Economies with at least one row for a non-NR scenario.
    std::set<EconomyId> policy_economies() const {
        std::set<EconomyId> out;
        for (const auto& r : rows)
            if (r.scenario != ScenarioKind::NR) out.insert(r.economy);
        return out;
    }
};

struct ScenarioPolicy {
    ScenarioKind scenario = ScenarioKind::NR;
    EconomyId economy;
    BuildingType building_type = BuildingType::Residential;
    std::vector<LifetimeSegment> construction_lifetimes; // sorted, non-overlapping
    std::optional<double> renovation_cycle;
    std::optional<RenovationRamp> first_renovation;
    std::optional<RenovationRamp> second_renovation;

    TupleKey key() const { return {economy, building_type, scenario}; }

    LifetimeDistribution construction_lifetime(Year vintage) const {
        for (const auto& seg : construction_lifetimes)
            if (vintage >= seg.from && vintage <= seg.to) return seg.lifetime;
        if (construction_lifetimes.empty())
            throw ConfigurationError("policy " + describe(key()) + " has no construction lifetime");
        // Vintages outside the schedule take the nearest segment.
        return vintage < construction_lifetimes.front().from ? construction_lifetimes.front().lifetime
                                                             : construction_lifetimes.back().lifetime;
    }

    LifetimeDistribution renovation_lifetime() const {
        if (!renovation_cycle)
            throw ConfigurationError("policy " + describe(key()) + " has no renovation cycle");
        return make_default_lifetime(*renovation_cycle);
    }

    double first_rate(Year y) const {
        return first_renovation && first_renovation->active(y) ? rate_at(*first_renovation, y) : 0.0;
    }
    double second_rate(Year y) const {
        return second_renovation && second_renovation->active(y) ? rate_at(*second_renovation, y) : 0.0;
    }
    bool renovates() const noexcept { return first_renovation.has_value(); }
};

inline void validate_policy(const ScenarioPolicy& p) {
    if (p.scenario == ScenarioKind::NR && (p.first_renovation || p.second_renovation))
        throw ConfigurationError("NR policy " + describe(p.key()) + " must not renovate");
    if (p.second_renovation && !p.first_renovation)
        throw ConfigurationError("policy " + describe(p.key()) +
                                 " has a second renovation without a first");
    if (p.first_renovation && !p.renovation_cycle)
        throw ConfigurationError("policy " + describe(p.key()) + " renovates without a renovation cycle");
    if (p.construction_lifetimes.empty())
        throw ConfigurationError("policy " + describe(p.key()) + " has no construction lifetime");
}

/// Assemble the policy for one tuple from a parameter table.
///
/// New-build floorspace is exposed to demolition on the row's initial
/// lifetime; renovation then extends service by the renovation cycle.
/// NR takes its lifetimes from the tuple's BAU rows (falling back to TEP rows)
/// and never renovates. When no row exists at all, NR uses
/// `fallback_lifetime` if given; every other miss is a configuration error.
inline ScenarioPolicy build_policy(ScenarioKind scenario, const EconomyId& economy, BuildingType type,
                                   const ParameterTable& params,
                                   std::optional<double> fallback_lifetime = std::nullopt) {
    ScenarioPolicy p;
    p.scenario = scenario;
    p.economy = economy;
    p.building_type = type;

    auto rows = params.find(scenario, economy, type);
    if (scenario == ScenarioKind::NR) {
        if (rows.empty()) rows = params.find(ScenarioKind::BAU, economy, type);
        if (rows.empty()) rows = params.find(ScenarioKind::TEP, economy, type);
    }
    if (rows.empty()) {
        if (scenario == ScenarioKind::NR && fallback_lifetime) {
            p.construction_lifetimes.push_back(
                {kMinYear, kMaxYear, make_default_lifetime(*fallback_lifetime), *fallback_lifetime});
            validate_policy(p);
            return p;
        }
        throw ConfigurationError("no policy row for " +
                                 describe(TupleKey{economy, type, scenario}) + " in " + params.source);
    }

    for (const auto* r : rows)
        p.construction_lifetimes.push_back(
            {r->vintage_from, r->vintage_to, make_default_lifetime(r->initial_lifetime), r->average_lifetime});
    for (std::size_t i = 1; i < p.construction_lifetimes.size(); ++i)
        if (p.construction_lifetimes[i].from <= p.construction_lifetimes[i - 1].to)
            throw ConfigurationError("overlapping vintage ranges for " + describe(p.key()));

    if (scenario != ScenarioKind::NR) {
        // Renovation fields are per tuple; take them from the row that sets them.
        for (const auto* r : rows) {
            if (r->renovation_cycle) p.renovation_cycle = r->renovation_cycle;
            if (r->first_renovation) p.first_renovation = r->first_renovation;
            if (r->second_renovation) p.second_renovation = r->second_renovation;
        }
    }
    validate_policy(p);
    return p;
}

/// Fill annual values over [from, to] from sparse anchors.
///
/// Linear between anchors. Past the last anchor the series grows at the
/// compound annual rate of the last two anchors. Years before the first
/// anchor are a data gap.
inline std::map<Year, double> interpolate_endpoint_series(const std::map<Year, double>& anchors,
                                                          Year from, Year to) {
    if (anchors.size() < 2)
        throw ConfigurationError("interpolation needs at least 2 anchors, got " +
                                 std::to_string(anchors.size()));
    if (from > to) throw InvalidParameter("interpolation span is empty");
    if (from < anchors.begin()->first)
        throw DataGap("no anchor at or before " + std::to_string(from), from);

    const auto last = std::prev(anchors.end());
    const auto before_last = std::prev(last);
    std::map<Year, double> out;
    for (Year y = from; y <= to; ++y) {
        if (auto it = anchors.find(y); it != anchors.end()) {
            out.emplace(y, it->second);
            continue;
        }
        if (y > last->first) {
            const double v0 = before_last->second;
            const double v1 = last->second;
            const double span = static_cast<double>(last->first - before_last->first);
            const double growth = v0 > 0.0 ? std::pow(v1 / v0, 1.0 / span) : 1.0;
            out.emplace(y, v1 * std::pow(growth, static_cast<double>(y - last->first)));
            continue;
        }
        const auto hi = anchors.upper_bound(y);
        const auto lo = std::prev(hi);
        const double f = static_cast<double>(y - lo->first) / static_cast<double>(hi->first - lo->first);
        out.emplace(y, lo->second + (hi->second - lo->second) * f);
    }
    return out;
}

/// Dense population and per-capita floorspace trajectories.
class DemandSeries {
public:
    struct Track {
        std::map<Year, double> population;   // persons
        std::map<Year, double> per_capita;   // m2 / person
    };

    void set(const EconomyId& economy, BuildingType type, Track track) {
        for (const auto* m : {&track.population, &track.per_capita})
            for (const auto& [y, v] : *m)
                if (!(v >= 0.0) || !std::isfinite(v))
                    throw InvalidParameter("demand input for " + economy.code() + " in " +
                                           std::to_string(y) + " must be finite and >= 0");
        tracks_[{economy, type}] = std::move(track);
    }

    bool has(const EconomyId& economy, BuildingType type) const {
        return tracks_.count({economy, type}) > 0;
    }

    const Track& track(const EconomyId& economy, BuildingType type) const {
        const auto it = tracks_.find({economy, type});
        if (it == tracks_.end())
            throw ConfigurationError("no demand series for " + economy.code() + " " +
                                     std::string(to_string(type)));
        return it->second;
    }

    std::set<EconomyId> economies() const {
        std::set<EconomyId> out;
        for (const auto& [k, v] : tracks_) out.insert(k.first);
        return out;
    }

    bool operator==(const DemandSeries&) const = default;

private:
    std::map<std::pair<EconomyId, BuildingType>, Track> tracks_;
};

namespace detail {
inline double lookup(const std::map<Year, double>& m, Year y, const std::string& what) {
    const auto it = m.find(y);
    if (it == m.end()) throw DataGap(what + " has no value for year " + std::to_string(y), y);
    return it->second;
}
} // namespace detail

/// Floorspace demand: population times per-capita floorspace.
inline double demand_at(const DemandSeries& series, const EconomyId& economy, BuildingType type,
                        Year year) {
    const auto& t = series.track(economy, type);
    const std::string tag = economy.code() + " " + std::string(to_string(type));
    return detail::lookup(t.population, year, "population of " + tag) *
           detail::lookup(t.per_capita, year, "per-capita floorspace of " + tag);
}

} // namespace globus

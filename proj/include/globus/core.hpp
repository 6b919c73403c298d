#pragma once

// Domain types shared by the survival, scenario, engine and metrics layers.

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "globus/error.hpp"

namespace globus {

using Year = int;

inline constexpr Year kMinYear = 1900;
inline constexpr Year kMaxYear = 2100;

inline void check_year(Year y, std::string_view what = "year") {
    if (y < kMinYear || y > kMaxYear)
        throw InvalidParameter(std::string(what) + " " + std::to_string(y) + " outside [" +
                               std::to_string(kMinYear) + ", " + std::to_string(kMaxYear) + "]");
}

/// Short economy code such as "CN", "US" or "EU27".
class EconomyId {
public:
    EconomyId() = default;
    explicit EconomyId(std::string code) : code_(std::move(code)) {
        if (code_.empty()) throw InvalidParameter("economy code must be non-empty");
    }
    const std::string& code() const noexcept { return code_; }
    auto operator<=>(const EconomyId&) const = default;

private:
    std::string code_;
};

enum class BuildingType { Residential, NonResidential };
inline constexpr std::array<BuildingType, 2> kBuildingTypes{BuildingType::Residential,
                                                            BuildingType::NonResidential};

enum class ScenarioKind { NR, BAU, TEP };
inline constexpr std::array<ScenarioKind, 3> kScenarios{ScenarioKind::NR, ScenarioKind::BAU,
                                                        ScenarioKind::TEP};

namespace detail {
inline std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}
} // namespace detail

inline std::string_view to_string(BuildingType t) {
    return t == BuildingType::Residential ? "residential" : "non-residential";
}

inline std::string_view to_string(ScenarioKind s) {
    switch (s) {
    case ScenarioKind::NR: return "NR";
    case ScenarioKind::BAU: return "BAU";
    case ScenarioKind::TEP: return "TEP";
    }
    return "?";
}

inline std::optional<BuildingType> parse_building_type(std::string_view text) {
    const auto s = detail::lower(text);
    if (s == "residential" || s == "res") return BuildingType::Residential;
    if (s == "non-residential" || s == "nonresidential" || s == "non_residential" || s == "nonres")
        return BuildingType::NonResidential;
    return std::nullopt;
}

inline std::optional<ScenarioKind> parse_scenario(std::string_view text) {
    const auto s = detail::lower(text);
    if (s == "nr") return ScenarioKind::NR;
    if (s == "bau") return ScenarioKind::BAU;
    if (s == "tep") return ScenarioKind::TEP;
    return std::nullopt;
}

/// Normal lifetime distribution in years.
struct LifetimeDistribution {
    double mean = 0.0;
    double std_dev = 0.0;

    auto operator<=>(const LifetimeDistribution&) const = default;
};

inline LifetimeDistribution make_lifetime(double mean, double std_dev) {
    if (!(mean > 0.0) || !std::isfinite(mean))
        throw InvalidParameter("lifetime mean must be positive, got " + std::to_string(mean));
    if (!(std_dev > 0.0) || !std::isfinite(std_dev))
        throw InvalidParameter("lifetime std_dev must be positive, got " + std::to_string(std_dev));
    return {mean, std_dev};
}

/// Standard deviation fixed at one third of the mean.
inline LifetimeDistribution make_default_lifetime(double mean) {
    if (!(mean > 0.0) || !std::isfinite(mean))
        throw InvalidParameter("lifetime mean must be positive, got " + std::to_string(mean));
    return {mean, mean / 3.0};
}

inline constexpr int kMaxRenovationGeneration = 2;

/// Floorspace built (generation 0) or renovated (generation 1, 2) in one year.
struct Cohort {
    Year vintage = 0;
    double floorspace = 0.0; // m2
    LifetimeDistribution lifetime;
    int generation = 0;

    bool renovated() const noexcept { return generation > 0; }
    Year age_at(Year year) const noexcept { return year - vintage; }
};

inline Cohort make_new_build(Year vintage, double floorspace, LifetimeDistribution lifetime) {
    if (!(floorspace >= 0.0)) throw InvalidParameter("cohort floorspace must be >= 0");
    return {vintage, floorspace, lifetime, 0};
}

inline Cohort make_renovated(Year vintage, double floorspace, LifetimeDistribution lifetime,
                             int generation) {
    if (!(floorspace >= 0.0)) throw InvalidParameter("cohort floorspace must be >= 0");
    if (generation < 1 || generation > kMaxRenovationGeneration)
        throw InvalidParameter("renovation generation must be 1 or 2, got " +
                               std::to_string(generation));
    return {vintage, floorspace, lifetime, generation};
}

struct TupleKey {
    EconomyId economy;
    BuildingType building_type = BuildingType::Residential;
    ScenarioKind scenario = ScenarioKind::NR;

    auto operator<=>(const TupleKey&) const = default;
};

inline std::string describe(const TupleKey& k) {
    return "(" + std::string(to_string(k.scenario)) + ", " + k.economy.code() + ", " +
           std::string(to_string(k.building_type)) + ")";
}

/// Annual accounting of one (economy, type, scenario) run. All quantities in m2.
///
/// `stock_total` is the floorspace physically in service (sum of all cohorts,
/// including renovated ones). The reported scenario stock subtracts the net
/// surviving renovated floorspace, so that
///   scenario_stock(t) == NR stock(t) - sum_{tau<=t} (RB - DRB).
struct LedgerRow {
    Year year = 0;
    double stock_total = 0.0;
    double demolished = 0.0;           // DB
    double renovated = 0.0;            // RB, first and second renovations
    double demolished_renovated = 0.0; // DRB, gross
    double new_construction = 0.0;     // NC
    double renovated_stock = 0.0;      // surviving renovated floorspace
    double surplus = 0.0;              // stock above demand that could not be retired

    double scenario_stock() const noexcept { return stock_total - renovated_stock; }
    bool operator==(const LedgerRow&) const = default;
};

struct StockLedger {
    TupleKey key;
    std::vector<LedgerRow> rows;  // consecutive years
    std::vector<Cohort> cohorts;  // state after the last row

    bool empty() const noexcept { return rows.empty(); }
    Year first_year() const { return rows.front().year; }
    Year last_year() const { return rows.back().year; }
    bool covers(Year y) const noexcept {
        return !rows.empty() && y >= rows.front().year && y <= rows.back().year;
    }
    const LedgerRow& at(Year y) const {
        if (!covers(y))
            throw DataGap("ledger " + describe(key) + " has no row for year " + std::to_string(y), y);
        return rows[static_cast<std::size_t>(y - rows.front().year)];
    }
};

inline double cohort_total(const std::vector<Cohort>& cohorts) {
    double s = 0.0;
    for (const auto& c : cohorts) s += c.floorspace;
    return s;
}

inline double relative_residual(double lhs, double rhs) {
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return std::abs(lhs - rhs) / scale;
}

/// Largest relative violation of
///   stock_t = stock_{t-1} - DB_t - DRB_t + RB_t + NC_t
/// over all consecutive rows.
inline double max_balance_residual(const StockLedger& ledger) {
    double worst = 0.0;
    for (std::size_t i = 1; i < ledger.rows.size(); ++i) {
        const auto& p = ledger.rows[i - 1];
        const auto& r = ledger.rows[i];
        const double expected = p.stock_total - r.demolished - r.demolished_renovated + r.renovated +
                                r.new_construction;
        worst = std::max(worst, relative_residual(r.stock_total, expected));
    }
    return worst;
}

} // namespace globus

#pragma once

// Reference values and independent re-implementations used to check the
// library. Nothing here calls into the engine.

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "globus/globus.hpp"

namespace oracle {

// Normal CDF values at mean 50, sd 50/3, evaluated with 40-digit arithmetic.
inline constexpr double kPhiMinus3 = 0.001349898031630094526651814767594977;
inline constexpr double kPhiPlus3 = 0.998650101968369905473348185232405;
inline constexpr double kCdfAt1 = 0.001641061234156997273340272682288943;
inline constexpr double kCdfAt25 = 0.06680720126885806600449404097988608;
inline constexpr double kCdfAt35 = 0.18406012534675948855419780088141;
inline constexpr double kCdfAt75 = 0.9331927987311419339955059590201139;
inline constexpr double kHazardAt1 = 0.0002915567744428315444401470440533;
inline constexpr double kHazardAt50 = 0.04565980110428013060793055036293822640;

// 74 -> 74.8 over one year, extrapolated two more years at the same rate.
inline constexpr double kCagrTwoYears = 76.42603944485024694920008410403770730684;

// Simpson quadrature of the normal density from mean - 12 sd to x.
inline long double normal_cdf_quadrature(long double x, long double mu, long double sd, int steps = 20000) {
    const long double a = mu - 12.0L * sd;
    if (x <= a) return 0.0L;
    const long double h = (x - a) / steps;
    auto pdf = [&](long double t) {
        const long double z = (t - mu) / sd;
        return std::exp(-0.5L * z * z) / (sd * std::sqrt(2.0L * 3.14159265358979323846264338327950288L));
    };
    long double s = pdf(a) + pdf(x);
    for (int i = 1; i < steps; ++i) s += pdf(a + i * h) * (i % 2 ? 4.0L : 2.0L);
    return s * h / 3.0L;
}

// The 3-year synthetic ledger: 100 m2 built in 2000, flat demand of 100,
// hazards {0.1, 0.2, 1.0} by age for every cohort, alpha = 0.5 from 2001,
// no second renovation. Worked by hand.
struct HandRow {
    int year;
    double db, drb, rb, nc, stock, renovated_stock;
};

inline const std::vector<HandRow>& hand_ledger() {
    static const std::vector<HandRow> rows{
        {2001, 10.0, 0.0, 5.0, 5.0, 100.0, 5.0},
        {2002, 18.5, 0.5, 9.25, 9.75, 100.0, 13.75},
        {2003, 73.875, 1.825, 36.9375, 38.7625, 100.0, 48.8625},
    };
    return rows;
}

inline const std::vector<HandRow>& hand_ledger_no_renovation() {
    static const std::vector<HandRow> rows{
        {2001, 10.0, 0.0, 0.0, 10.0, 100.0, 0.0},
        {2002, 19.0, 0.0, 0.0, 19.0, 100.0, 0.0},
        {2003, 75.7, 0.0, 0.0, 75.7, 100.0, 0.0},
    };
    return rows;
}

// Per-vintage recomputation: each cohort's surviving share is read directly
// off the lifetime CDF, (1 - P(age)) / (1 - P(0)), instead of compounding
// annual hazards.
struct BruteRow {
    int year = 0;
    long double stock = 0, db = 0, drb = 0, rb = 0, nc = 0, renovated_stock = 0;
};

struct BruteCohort {
    int vintage;
    long double initial;
    long double mean;
    int generation;
};

inline long double plain_cdf(long double t, long double mean) {
    const long double sd = mean / 3.0L;
    return 0.5L * std::erfc(-(t - mean) / (sd * std::sqrt(2.0L)));
}

inline long double surviving_share(int age, long double mean) {
    const int horizon = static_cast<int>(std::ceil(static_cast<double>(mean + 5.0L * mean / 3.0L)));
    if (age >= horizon) return 0.0L;
    return (1.0L - plain_cdf(age, mean)) / (1.0L - plain_cdf(0, mean));
}

struct BrutePolicy {
    long double lifetime = 50;
    long double cycle = 30;
    std::function<long double(int)> first_rate = [](int) { return 0.0L; };
    std::function<long double(int)> second_rate = [](int) { return 0.0L; };
};

inline std::vector<BruteRow> brute_force_run(const BrutePolicy& p, const std::vector<long double>& demand,
                                             int start) {
    std::vector<BruteCohort> cohorts{{start, demand.front(), p.lifetime, 0}};
    auto alive = [](const BruteCohort& c, int year) {
        return c.initial * surviving_share(year - c.vintage, c.mean);
    };
    std::vector<BruteRow> rows{{start, demand.front(), 0, 0, 0, 0, 0}};
    for (std::size_t i = 1; i < demand.size(); ++i) {
        const int year = start + static_cast<int>(i);
        BruteRow r;
        r.year = year;
        long double drb1 = 0;
        for (const auto& c : cohorts) {
            const long double removed = alive(c, year - 1) - alive(c, year);
            if (c.generation == 0) r.db += removed;
            else r.drb += removed;
            if (c.generation == 1) drb1 += removed;
        }
        const long double rb1 = p.first_rate(year) * r.db;
        const long double rb2 = p.second_rate(year) * drb1;
        r.rb = rb1 + rb2;
        if (rb1 > 0) cohorts.push_back({year, rb1, p.cycle, 1});
        if (rb2 > 0) cohorts.push_back({year, rb2, p.cycle, 2});
        long double total = 0;
        for (const auto& c : cohorts) total += alive(c, year);
        r.nc = std::max(0.0L, demand[i] - total);
        if (r.nc > 0) cohorts.push_back({year, r.nc, p.lifetime, 0});
        for (const auto& c : cohorts) {
            r.stock += alive(c, year);
            if (c.generation > 0) r.renovated_stock += alive(c, year);
        }
        rows.push_back(r);
    }
    return rows;
}

// Random demand path: a multiplicative walk with drift in [-2%, +4%] a year.
inline std::vector<double> random_demand(std::mt19937_64& rng, int years, double base = 1e8) {
    std::uniform_real_distribution<double> drift(-0.02, 0.04);
    std::uniform_real_distribution<double> noise(-0.01, 0.01);
    const double d = drift(rng);
    std::vector<double> out{base};
    for (int i = 1; i < years; ++i) out.push_back(std::max(0.0, out.back() * (1.0 + d + noise(rng))));
    return out;
}

inline globus::DemandSeries flat_series(const globus::EconomyId& e, globus::BuildingType t,
                                        const std::vector<double>& demand, int start) {
    globus::DemandSeries::Track track;
    for (std::size_t i = 0; i < demand.size(); ++i) {
        track.population[start + static_cast<int>(i)] = 1.0;
        track.per_capita[start + static_cast<int>(i)] = demand[i];
    }
    globus::DemandSeries s;
    s.set(e, t, std::move(track));
    return s;
}

} // namespace oracle

namespace oracle {

inline globus::ScenarioPolicy make_policy(globus::ScenarioKind kind, double lifetime, double cycle,
                                          std::optional<globus::RenovationRamp> first = std::nullopt,
                                          std::optional<globus::RenovationRamp> second = std::nullopt,
                                          const char* economy = "XX") {
    globus::ScenarioPolicy p;
    p.scenario = kind;
    p.economy = globus::EconomyId(economy);
    p.building_type = globus::BuildingType::Residential;
    p.construction_lifetimes.push_back(
        {globus::kMinYear, globus::kMaxYear, globus::make_default_lifetime(lifetime), lifetime});
    if (kind != globus::ScenarioKind::NR) {
        p.renovation_cycle = cycle;
        p.first_renovation = first;
        p.second_renovation = second;
    }
    globus::validate_policy(p);
    return p;
}

// A BAU/TEP pair on one tuple whose TEP ramps dominate the BAU ramps in
// every year, plus a random demand path.
struct RandomCase {
    globus::ScenarioPolicy nr, bau, tep;
    std::vector<double> demand;
    int start = 2000;
};

inline RandomCase random_case(std::mt19937_64& rng, int start = 2000, int end = 2070) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto between = [&](double lo, double hi) { return lo + (hi - lo) * u(rng); };
    const double lifetime = between(20.0, 120.0);
    const double cycle = between(15.0, 60.0);
    const int ramp_start = std::uniform_int_distribution<int>(start + 1, 2040)(rng);
    const int ramp_end = std::uniform_int_distribution<int>(ramp_start + 1, end + 10)(rng);

    const double b0 = between(0.0, 0.5), b1 = between(b0, 1.0);
    const double t0 = between(b0, 1.0), t1 = between(std::max(b1, t0), 1.0);
    const auto bau1 = globus::make_ramp(ramp_start, ramp_end, b0, b1);
    const auto tep1 = globus::make_ramp(ramp_start, ramp_end, t0, t1);
    std::optional<globus::RenovationRamp> bau2, tep2;
    if (u(rng) < 0.5) {
        const double s0 = between(0.0, 0.3), s1 = between(s0, 0.8);
        const double v0 = between(s0, 0.8), v1 = between(std::max(s1, v0), 1.0);
        bau2 = globus::make_ramp(ramp_start, ramp_end, s0, s1);
        tep2 = globus::make_ramp(ramp_start, ramp_end, v0, v1);
    }

    RandomCase c;
    c.start = start;
    c.nr = make_policy(globus::ScenarioKind::NR, lifetime, cycle);
    c.bau = make_policy(globus::ScenarioKind::BAU, lifetime, cycle, bau1, bau2);
    c.tep = make_policy(globus::ScenarioKind::TEP, lifetime, cycle, tep1, tep2);
    c.demand = random_demand(rng, end - start + 1, between(1e6, 1e10));
    return c;
}

} // namespace oracle

#include <gtest/gtest.h>

#include <random>

#include "globus/engine.hpp"
#include "oracles.hpp"

using namespace globus;

namespace {

EngineOptions hand_options() {
    EngineOptions o;
    o.seed = SeedStrategy::SingleVintage;
    o.fixed_hazards = HazardTable::from_hazards({0.1, 0.2, 1.0});
    return o;
}

StockLedger run_hand(const ScenarioPolicy& p) {
    auto state = seed_state(p, 100.0, 2000, hand_options());
    for (int i = 0; i < 3; ++i) step_year(state, 100.0, p);
    return state.ledger;
}

void expect_rows(const StockLedger& l, const std::vector<oracle::HandRow>& expected) {
    ASSERT_EQ(l.rows.size(), expected.size() + 1);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto& r = l.rows[i + 1];
        const auto& e = expected[i];
        EXPECT_EQ(r.year, e.year);
        EXPECT_NEAR(r.demolished, e.db, 1e-12) << e.year;
        EXPECT_NEAR(r.demolished_renovated, e.drb, 1e-12) << e.year;
        EXPECT_NEAR(r.renovated, e.rb, 1e-12) << e.year;
        EXPECT_NEAR(r.new_construction, e.nc, 1e-12) << e.year;
        EXPECT_NEAR(r.stock_total, e.stock, 1e-12) << e.year;
        EXPECT_NEAR(r.renovated_stock, e.renovated_stock, 1e-12) << e.year;
    }
}

SimulationResult run(const ScenarioPolicy& p, const std::vector<double>& demand, int start,
                     SeedStrategy seed = SeedStrategy::SingleVintage) {
    EngineOptions o;
    o.seed = seed;
    const auto series = oracle::flat_series(p.economy, p.building_type, demand, start);
    return run_simulation({p, o}, series, start, start + static_cast<int>(demand.size()) - 1);
}

} // namespace

TEST(Engine, HandLedgerWithRenovation) {
    const auto p = oracle::make_policy(ScenarioKind::TEP, 50, 10, make_ramp(2001, 2070, 0.5, 0.5));
    expect_rows(run_hand(p), oracle::hand_ledger());
}

TEST(Engine, HandLedgerWithoutRenovation) {
    const auto p = oracle::make_policy(ScenarioKind::NR, 50, 10);
    expect_rows(run_hand(p), oracle::hand_ledger_no_renovation());
}

TEST(Engine, VintageDemolitionPrimitive) {
    const auto table = HazardTable::from_hazards({0.1, 0.2, 1.0});
    const auto c = make_new_build(2000, 40.0, make_default_lifetime(50));
    EXPECT_DOUBLE_EQ(demolish_vintage(c, 2000, table), 0.0);
    EXPECT_DOUBLE_EQ(demolish_vintage(c, 2002, table), 8.0);
    EXPECT_DOUBLE_EQ(demolish_vintage(c, 2010, table), 40.0);
    EXPECT_THROW(demolish_vintage(c, 1999, table), InvalidParameter);
    EXPECT_THROW(renovate(10.0, 1.5), InvalidParameter);
    EXPECT_DOUBLE_EQ(renovate(10.0, 0.25), 2.5);
}

TEST(Engine, DemolitionSumsSplitByProvenance) {
    const auto lt = make_default_lifetime(50);
    const auto table = HazardTable::from_hazards({0.5, 0.5, 1.0});
    std::vector<Cohort> cohorts{make_new_build(2000, 10.0, lt), make_renovated(2000, 6.0, lt, 1),
                                make_new_build(2005, 8.0, lt)};
    auto lookup = [&](const LifetimeDistribution&) -> const HazardTable& { return table; };
    EXPECT_DOUBLE_EQ(total_demolition(std::span<const Cohort>(cohorts), 2001, lookup), 5.0);
    EXPECT_DOUBLE_EQ(demolish_renovated(std::span<const Cohort>(cohorts), 2001, lookup), 3.0);
}

TEST(Engine, MatchesPerVintageRecomputation) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = oracle::random_case(rng, 2000, 2060);
        for (const auto* p : {&c.nr, &c.bau, &c.tep}) {
            const auto result = run(*p, c.demand, c.start);
            oracle::BrutePolicy bp;
            bp.lifetime = p->construction_lifetime(2000).mean;
            bp.cycle = p->renovation_cycle.value_or(30.0);
            bp.first_rate = [p](int y) { return static_cast<long double>(p->first_rate(y)); };
            bp.second_rate = [p](int y) { return static_cast<long double>(p->second_rate(y)); };
            std::vector<long double> d(c.demand.begin(), c.demand.end());
            const auto brute = oracle::brute_force_run(bp, d, c.start);
            ASSERT_EQ(brute.size(), result.ledger.rows.size());
            const double scale = *std::max_element(c.demand.begin(), c.demand.end());
            for (std::size_t i = 0; i < brute.size(); ++i) {
                const auto& r = result.ledger.rows[i];
                const auto& b = brute[i];
                const double tol = 1e-9 * scale;
                ASSERT_NEAR(r.stock_total, static_cast<double>(b.stock), tol) << trial << " " << r.year;
                ASSERT_NEAR(r.demolished, static_cast<double>(b.db), tol) << trial << " " << r.year;
                ASSERT_NEAR(r.demolished_renovated, static_cast<double>(b.drb), tol) << trial << " " << r.year;
                ASSERT_NEAR(r.renovated, static_cast<double>(b.rb), tol) << trial << " " << r.year;
                ASSERT_NEAR(r.new_construction, static_cast<double>(b.nc), tol) << trial << " " << r.year;
                ASSERT_NEAR(r.renovated_stock, static_cast<double>(b.renovated_stock), tol) << trial << " " << r.year;
            }
        }
    }
}

TEST(EngineProperty, StockBalanceHoldsEveryYear) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto c = oracle::random_case(rng);
        const auto seed = trial % 2 ? SeedStrategy::Uniform : SeedStrategy::SingleVintage;
        for (const auto* p : {&c.nr, &c.bau, &c.tep}) {
            const auto r = run(*p, c.demand, c.start, seed);
            ASSERT_LT(max_balance_residual(r.ledger), 1e-12) << trial;
            ASSERT_NEAR(cohort_total(r.ledger.cohorts), r.ledger.rows.back().stock_total,
                        1e-12 * r.ledger.rows.back().stock_total);
            for (const auto& row : r.ledger.rows) {
                ASSERT_GE(row.demolished, 0.0);
                ASSERT_GE(row.demolished_renovated, 0.0);
                ASSERT_GE(row.renovated, 0.0);
                ASSERT_GE(row.new_construction, 0.0);
                ASSERT_GE(row.renovated_stock, 0.0);
                ASSERT_LE(row.renovated, row.demolished + row.demolished_renovated + 1e-9 * row.stock_total);
            }
        }
    }
}

TEST(EngineProperty, StockMeetsDemandOrRecordsSurplus) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = oracle::random_case(rng);
        const auto r = run(c.tep, c.demand, c.start);
        for (std::size_t i = 0; i < c.demand.size(); ++i) {
            const auto& row = r.ledger.rows[i];
            if (row.surplus > 0.0) {
                EXPECT_EQ(row.new_construction, 0.0);
                EXPECT_NEAR(row.stock_total, c.demand[i] + row.surplus, 1e-9 * c.demand[i]);
            } else {
                EXPECT_NEAR(row.stock_total, c.demand[i], 1e-9 * c.demand[i]);
            }
        }
    }
}

TEST(EngineProperty, ReportedStockSubtractsNetRenovation) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        auto c = oracle::random_case(rng);
        for (std::size_t i = 1; i < c.demand.size(); ++i) c.demand[i] = c.demand[i - 1] * 1.01;
        const auto nr = run(c.nr, c.demand, c.start);
        const auto tep = run(c.tep, c.demand, c.start);
        double net = 0.0;
        for (std::size_t i = 0; i < c.demand.size(); ++i) {
            const auto& row = tep.ledger.rows[i];
            net += row.renovated - row.demolished_renovated;
            ASSERT_EQ(row.surplus, 0.0);
            ASSERT_NEAR(row.scenario_stock(), nr.ledger.rows[i].scenario_stock() - net, 1e-9 * c.demand[i]);
        }
    }
}

TEST(EngineProperty, NoRenovationMeansIdenticalToNr) {
    const auto nr = oracle::make_policy(ScenarioKind::NR, 60, 30);
    const auto zero = oracle::make_policy(ScenarioKind::BAU, 60, 30, make_ramp(2021, 2070, 0.0, 0.0));
    std::mt19937_64 rng(3);
    const auto demand = oracle::random_demand(rng, 71);
    const auto a = run(nr, demand, 2000, SeedStrategy::Uniform);
    const auto b = run(zero, demand, 2000, SeedStrategy::Uniform);
    EXPECT_EQ(a.ledger.rows, b.ledger.rows);
}

TEST(Engine, UniformSeedSpreadsOverLifetime) {
    const auto p = oracle::make_policy(ScenarioKind::NR, 40, 30);
    const auto s = seed_state(p, 400.0, 2000);
    ASSERT_EQ(s.ledger.cohorts.size(), 40u);
    EXPECT_EQ(s.ledger.cohorts.front().vintage, 1960);
    EXPECT_EQ(s.ledger.cohorts.back().vintage, 1999);
    EXPECT_DOUBLE_EQ(s.ledger.cohorts.front().floorspace, 10.0);
    EXPECT_DOUBLE_EQ(s.ledger.rows.front().stock_total, 400.0);
}

TEST(Engine, Deterministic) {
    std::mt19937_64 rng(99);
    const auto c = oracle::random_case(rng);
    EXPECT_EQ(run(c.tep, c.demand, 2000).ledger.rows, run(c.tep, c.demand, 2000).ledger.rows);
}

TEST(Engine, SurplusWhenDemandCollapses) {
    const auto p = oracle::make_policy(ScenarioKind::NR, 50, 30);
    const auto r = run(p, {100.0, 100.0, 10.0, 10.0}, 2000, SeedStrategy::Uniform);
    EXPECT_EQ(r.surplus_years().front(), 2002);
    EXPECT_EQ(r.ledger.at(2002).new_construction, 0.0);
}

TEST(Engine, DemandGapIsReported) {
    const auto p = oracle::make_policy(ScenarioKind::NR, 50, 30);
    const auto series = oracle::flat_series(p.economy, p.building_type, {1.0, 1.0, 1.0}, 2000);
    try {
        run_simulation({p, {}}, series, 2000, 2005);
        FAIL();
    } catch (const DataGap& e) {
        EXPECT_EQ(e.year(), 2003);
    }
    EXPECT_THROW(run_simulation({p, {}}, series, 2002, 2001), InvalidParameter);
}

TEST(Engine, RejectsBadDemand) {
    const auto p = oracle::make_policy(ScenarioKind::NR, 50, 30);
    auto s = seed_state(p, 10.0, 2000);
    EXPECT_THROW(step_year(s, -1.0, p), InvalidParameter);
    EXPECT_THROW(step_year(s, NAN, p), InvalidParameter);
}

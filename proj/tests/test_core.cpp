#include <gtest/gtest.h>

#include "globus/core.hpp"

using namespace globus;

TEST(Core, YearRange) {
    EXPECT_NO_THROW(check_year(1900));
    EXPECT_NO_THROW(check_year(2100));
    EXPECT_THROW(check_year(1899), InvalidParameter);
    EXPECT_THROW(check_year(2101), InvalidParameter);
}

TEST(Core, EconomyIdRejectsEmpty) {
    EXPECT_THROW(EconomyId(""), InvalidParameter);
    EXPECT_EQ(EconomyId("KR").code(), "KR");
    EXPECT_LT(EconomyId("CN"), EconomyId("US"));
}

TEST(Core, EnumRoundTrip) {
    for (auto t : kBuildingTypes) EXPECT_EQ(parse_building_type(to_string(t)), t);
    for (auto s : kScenarios) EXPECT_EQ(parse_scenario(to_string(s)), s);
    EXPECT_EQ(parse_building_type("NonRes"), BuildingType::NonResidential);
    EXPECT_EQ(parse_scenario("tep"), ScenarioKind::TEP);
    EXPECT_FALSE(parse_building_type("industrial"));
    EXPECT_FALSE(parse_scenario("SSP2"));
}

TEST(Core, DefaultLifetimeIsOneThirdSpread) {
    const auto d = make_default_lifetime(75.0);
    EXPECT_DOUBLE_EQ(d.mean, 75.0);
    EXPECT_DOUBLE_EQ(d.std_dev, 25.0);
    EXPECT_THROW(make_default_lifetime(0.0), InvalidParameter);
    EXPECT_THROW(make_default_lifetime(-5.0), InvalidParameter);
    EXPECT_THROW(make_lifetime(50.0, 0.0), InvalidParameter);
    EXPECT_THROW(make_lifetime(NAN, 1.0), InvalidParameter);
}

TEST(Core, CohortConstruction) {
    const auto lt = make_default_lifetime(50);
    EXPECT_FALSE(make_new_build(2000, 1.0, lt).renovated());
    EXPECT_TRUE(make_renovated(2030, 1.0, lt, 2).renovated());
    EXPECT_THROW(make_renovated(2030, 1.0, lt, 0), InvalidParameter);
    EXPECT_THROW(make_renovated(2030, 1.0, lt, 3), InvalidParameter);
    EXPECT_THROW(make_new_build(2000, -1.0, lt), InvalidParameter);
    EXPECT_EQ(make_new_build(2000, 1.0, lt).age_at(2021), 21);
}

TEST(Core, LedgerLookupAndGap) {
    StockLedger l{{EconomyId("US"), BuildingType::Residential, ScenarioKind::TEP}, {}, {}};
    l.rows.push_back({2000, 10.0});
    l.rows.push_back({2001, 11.0});
    EXPECT_EQ(l.at(2001).stock_total, 11.0);
    try {
        l.at(2002);
        FAIL();
    } catch (const DataGap& e) {
        EXPECT_EQ(e.year(), 2002);
        EXPECT_NE(std::string(e.what()).find("(TEP, US, residential)"), std::string::npos);
    }
}

TEST(Core, BalanceResidualDetectsBreaks) {
    StockLedger l;
    LedgerRow a{2000, 100.0};
    LedgerRow b{2001, 105.0, 10.0, 4.0, 1.0, 12.0, 3.0};
    l.rows = {a, b};
    EXPECT_EQ(max_balance_residual(l), 0.0);
    l.rows[1].new_construction = 13.0;
    EXPECT_NEAR(max_balance_residual(l), 1.0 / 106.0, 1e-15);
}

TEST(Core, ReportedStockExcludesRenovated) {
    LedgerRow r{2030, 100.0, 0, 0, 0, 0, 12.5};
    EXPECT_DOUBLE_EQ(r.scenario_stock(), 87.5);
}

#include <gtest/gtest.h>

#include "cio/error.hpp"
#include "cio/scenario_io.hpp"

using namespace cio;

namespace {

constexpr const char* kAug = R"({
  "label": "Aug", "index_spread": 0.0361, "recovery": 0.4, "n_names": 50,
  "rho_grid": [0.8, 0.95], "zero_rate": 0.04, "index_maturity": 5.75,
  "option_expiry": 0.75, "strikes": [0.03, 0.0325],
  "bid_ask": {"300": 11, "325": 12.5}
})";

}  // namespace

TEST(ScenarioIo, ParsesAllFields) {
    const MarketScenario s = parse_scenario(kAug);
    EXPECT_EQ(s.label, "Aug");
    EXPECT_EQ(s.index_spread, 0.0361);
    EXPECT_EQ(s.n_names, 50);
    EXPECT_EQ(s.rho_grid.size(), 2u);
    EXPECT_EQ(s.index_maturity, 5.75);
    EXPECT_EQ(*s.bid_ask_for(0.0325), 12.5);
}

TEST(ScenarioIo, RoundTrip) {
    const MarketScenario s = parse_scenario(kAug);
    const MarketScenario again = parse_scenario(scenario_to_json(s));
    EXPECT_EQ(again.label, s.label);
    EXPECT_EQ(again.strikes, s.strikes);
    EXPECT_EQ(again.rho_grid, s.rho_grid);
    EXPECT_EQ(again.bid_ask_bps, s.bid_ask_bps);
}

TEST(ScenarioIo, MalformedInputsAreInputErrors) {
    EXPECT_THROW(parse_scenario(""), InputError);
    EXPECT_THROW(parse_scenario("[1,2]"), InputError);
    EXPECT_THROW(parse_scenario(R"({"label": "x"})"), InputError);
    EXPECT_THROW(parse_scenario(R"({"label": "x", "index_spread": "wide", "recovery": 0.4,
        "n_names": 5, "rho_grid": [0.5], "zero_rate": 0.0, "index_maturity": 5,
        "option_expiry": 1, "strikes": [0.01]})"),
                 InputError);
    EXPECT_THROW(parse_scenario(R"({"label": "x", "index_spread": 0.01, "recovery": 0.4,
        "n_names": 5, "rho_grid": [0.5], "zero_rate": 0.0, "index_maturity": 5,
        "option_expiry": 1, "strikes": [0.01], "bid_ask": {"abc": 1}})"),
                 InputError);
    EXPECT_THROW(load_scenario("/nonexistent/scenario.json"), InputError);
}

TEST(ScenarioIo, ShippedScenariosLoad) {
    for (const char* name : {"march21.json", "aug14.json", "dec06.json"}) {
        const auto s = load_scenario(std::string(CIO_SCENARIO_DIR) + "/" + name);
        EXPECT_EQ(s.n_names, 50) << name;
        EXPECT_EQ(s.strikes.size(), 5u) << name;
        EXPECT_EQ(s.rho_grid.size(), 4u) << name;
    }
}

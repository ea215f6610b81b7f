#include "cio/scenario_model.hpp"

namespace cio {

ScenarioModel build_model(const MarketScenario& scenario) {
    validate(scenario);
    DiscountCurve curve(scenario.zero_rate);
    Schedule spot = build_schedule(0.0, scenario.index_maturity, kIndexFrequency);
    Schedule forward = build_schedule(scenario.option_expiry, scenario.index_maturity, kIndexFrequency);
    HazardCurve hazard =
        calibrate_flat_intensity(scenario.index_spread, scenario.recovery, spot, curve);

    const IndexLegs spot_legs = value_index_legs(hazard, curve, spot, scenario.recovery);
    const IndexLegs forward_legs = value_index_legs(hazard, curve, forward, scenario.recovery);
    const double p = hazard.default_probability(scenario.option_expiry);

    return ScenarioModel{
        .scenario = scenario,
        .curve = curve,
        .spot_schedule = std::move(spot),
        .forward_schedule = std::move(forward),
        .hazard = std::move(hazard),
        .spot_legs = spot_legs,
        .forward_legs = forward_legs,
        .default_prob = p,
    };
}

CopulaParams ScenarioModel::copula(double rho) const {
    return CopulaParams{.rho = rho, .n_names = scenario.n_names, .default_prob = default_prob};
}

ArmageddonAdjustment ScenarioModel::adjustment(double rho) const {
    return make_armageddon_adjustment(forward_legs, armageddon_prob(copula(rho)),
                                      scenario.recovery, curve);
}

OptionSpec ScenarioModel::option(double strike, Side side, double vol) const {
    return OptionSpec{.strike = strike,
                      .expiry = scenario.option_expiry,
                      .maturity = scenario.index_maturity,
                      .side = side,
                      .vol = vol};
}

}  // namespace cio

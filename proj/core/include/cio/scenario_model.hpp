/// @file scenario_model.hpp
/// @brief Calibrated market state for one scenario: curves, spot and forward
///        legs, and per-correlation armageddon adjustments.

#pragma once

#include "cio/copula.hpp"
#include "cio/curves.hpp"
#include "cio/hazard.hpp"
#include "cio/index_legs.hpp"
#include "cio/pricing.hpp"

namespace cio {

struct ScenarioModel {
    MarketScenario scenario;
    DiscountCurve curve;
    Schedule spot_schedule;
    Schedule forward_schedule;
    HazardCurve hazard;
    IndexLegs spot_legs;
    IndexLegs forward_legs;
    double default_prob = 0.0;  ///< single-name default probability by option expiry

    CopulaParams copula(double rho) const;
    /// q_arm from the copula and the derived FEP / spread adjustment.
    ArmageddonAdjustment adjustment(double rho) const;
    OptionSpec option(double strike, Side side, double vol) const;
};

/// Calibrates the flat intensity to the spot quote on [0, T_M] and values the
/// forward legs on [T_A, T_M]. Throws CalibrationError / InputError.
ScenarioModel build_model(const MarketScenario& scenario);

}  // namespace cio

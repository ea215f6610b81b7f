#include "cio/curves.hpp"

#include <cmath>

#include "cio/error.hpp"

namespace cio {

DiscountCurve::DiscountCurve(double zero_rate) : zero_rate_(zero_rate) {
    detail::require(std::isfinite(zero_rate), "DiscountCurve: zero rate must be finite");
}

double DiscountCurve::discount(double t) const {
    detail::require(t >= 0.0, "discount: negative maturity");
    if (t == 0.0) return 1.0;
    return std::exp(-zero_rate_ * t);
}

Schedule build_schedule(double start, double maturity, int frequency) {
    detail::require(frequency == 1 || frequency == 2 || frequency == 4 || frequency == 12,
                    "build_schedule: frequency must be 1, 2, 4 or 12");
    detail::require(start >= 0.0, "build_schedule: negative start");
    detail::require(maturity > start, "build_schedule: non-positive tenor");

    const double periods = (maturity - start) * frequency;
    const auto n = static_cast<std::size_t>(std::llround(periods));
    detail::require(n > 0 && std::abs(periods - static_cast<double>(n)) < 1e-9,
                    "build_schedule: tenor is not a whole number of periods");

    Schedule s;
    s.start = start;
    s.maturity = maturity;
    s.payment_times.reserve(n);
    s.accruals.assign(n, 1.0 / frequency);
    for (std::size_t j = 1; j < n; ++j)
        s.payment_times.push_back(start + static_cast<double>(j) / frequency);
    s.payment_times.push_back(maturity);
    return s;
}

std::optional<double> MarketScenario::bid_ask_for(double strike) const {
    const double k_bps = strike * 1e4;
    for (const auto& [k, threshold] : bid_ask_bps)
        if (std::abs(k - k_bps) < 1e-6) return threshold;
    return std::nullopt;
}

void validate(const MarketScenario& s) {
    using detail::require;
    require(std::isfinite(s.index_spread) && s.index_spread >= 0.0,
            "scenario: index_spread must be non-negative");
    require(s.recovery >= 0.0 && s.recovery < 1.0, "scenario: recovery must lie in [0,1)");
    require(s.n_names > 0, "scenario: n_names must be positive");
    require(!s.rho_grid.empty(), "scenario: rho_grid is empty");
    for (double rho : s.rho_grid)
        require(rho >= 0.0 && rho <= 1.0, "scenario: rho outside [0,1]");
    require(std::isfinite(s.zero_rate), "scenario: zero_rate must be finite");
    require(s.option_expiry > 0.0, "scenario: option_expiry must be positive");
    require(s.option_expiry < s.index_maturity,
            "scenario: option_expiry must precede index_maturity");
    require(!s.strikes.empty(), "scenario: strikes list is empty");
    for (double k : s.strikes)
        require(k > 0.0, "scenario: strikes must be positive");
}

}  // namespace cio

/// @file curves.hpp
/// @brief Discounting, premium schedules and market scenario data.

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cio {

/// Deterministic default-free discount curve P(0,T).
///
/// Flat continuously-compounded zero rate. Times are year fractions from the
/// valuation date, which is always t = 0.
class DiscountCurve {
public:
    explicit DiscountCurve(double zero_rate);

    /// P(0,T) = exp(-r T). Throws InputError for T < 0.
    double discount(double t) const;

    double zero_rate() const noexcept { return zero_rate_; }

private:
    double zero_rate_;
};

/// Premium payment grid T_{A+1} < ... < T_M with accruals alpha_j.
struct Schedule {
    double start = 0.0;
    double maturity = 0.0;
    std::vector<double> payment_times;
    std::vector<double> accruals;

    std::size_t size() const noexcept { return payment_times.size(); }
    /// Start of period j (T_{j-1}); period 0 starts at `start`.
    double period_start(std::size_t j) const { return j == 0 ? start : payment_times[j - 1]; }
};

/// Equally spaced schedule with alpha_j = 1/frequency.
/// `frequency` must be one of 1, 2, 4, 12 and the tenor must be a whole number
/// of periods (to within 1e-9 of a period).
Schedule build_schedule(double start, double maturity, int frequency);

/// One trading day's inputs. Spreads, rates and strikes are decimals.
struct MarketScenario {
    std::string label;
    double index_spread = 0.0;
    double recovery = 0.4;
    int n_names = 0;
    std::vector<double> rho_grid;
    double zero_rate = 0.0;
    double index_maturity = 0.0;  ///< absolute maturity T_M of the underlying index
    double option_expiry = 0.0;   ///< T_A
    std::vector<double> strikes;
    /// Optional bid-ask thresholds in bps keyed by strike in bps.
    std::map<double, double> bid_ask_bps;

    /// Threshold for a strike given in decimal units, if quoted.
    std::optional<double> bid_ask_for(double strike) const;
};

/// Throws InputError describing the first violated constraint.
/// A zero spread is accepted here; calibration rejects it.
void validate(const MarketScenario& s);

/// Quarterly premium frequency used for all index legs.
inline constexpr int kIndexFrequency = 4;

}  // namespace cio

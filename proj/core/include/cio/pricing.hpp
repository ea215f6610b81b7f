/// @file pricing.hpp
/// @brief Black kernel, market and arbitrage-free credit index option formulas,
///        implied volatility inversion.
///
/// Payer options ("puts" in the JPM quotation convention) buy protection at
/// strike K; receivers ("calls") sell it. All prices are per unit notional.

#pragma once

#include <string_view>

#include "cio/copula.hpp"
#include "cio/curves.hpp"
#include "cio/index_legs.hpp"

namespace cio {

enum class Side { payer, receiver };

Side parse_side(std::string_view text);
std::string_view to_string(Side side);

struct OptionSpec {
    double strike = 0.0;
    double expiry = 0.0;    ///< T_A
    double maturity = 0.0;  ///< T_M of the underlying index
    Side side = Side::payer;
    double vol = 0.0;       ///< lognormal spread volatility
};

void validate(const OptionSpec& spec);

/// Components of the arbitrage-free price at t = 0.
struct PriceBreakdown {
    double black_term = 0.0;       ///< annuity * Black on the adjusted spread
    double armageddon_term = 0.0;  ///< (1-R) P(0,T_A) q_arm, payer only
    double realized_term = 0.0;    ///< armageddon already happened: always 0 at inception
    double total = 0.0;
};

/// Undiscounted Black call S N(d1) - K N(d2) with total deviation v = sigma sqrt(T).
double black(double forward, double strike, double stddev);

/// K N(-d2) - S N(-d1).
double black_put(double forward, double strike, double stddev);

/// annuity * Black(S~, K, sigma sqrt(T_A)) on the loss-adjusted spread.
double price_market(const IndexLegs& legs, const OptionSpec& spec);

/// Black on the arbitrage-free spread plus, for payers, the armageddon payout.
/// A receiver is knocked out by armageddon (its exercise value there is
/// -(1-R) < 0), so it carries no armageddon term.
PriceBreakdown price_noarb(const IndexLegs& legs, const ArmageddonAdjustment& adj,
                           const OptionSpec& spec, const DiscountCurve& curve, double recovery);

inline constexpr double kMinImpliedVol = 1e-4;
inline constexpr double kMaxImpliedVol = 5.0;

/// Volatility in (1e-4, 5] for which price_market reproduces `target_price`
/// to 1e-10 absolute. `spec.vol` is ignored. Throws InversionError if the
/// target lies outside the prices attainable on that range.
double implied_vol(const IndexLegs& legs, const OptionSpec& spec, double target_price);

/// Same inversion against the total of price_noarb.
double implied_vol(const IndexLegs& legs, const ArmageddonAdjustment& adj, const OptionSpec& spec,
                   const DiscountCurve& curve, double recovery, double target_price);

}  // namespace cio

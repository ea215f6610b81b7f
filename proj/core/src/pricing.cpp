#include "cio/pricing.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "cio/error.hpp"
#include "cio/normal.hpp"

namespace cio {

Side parse_side(std::string_view text) {
    if (text == "payer" || text == "put") return Side::payer;
    if (text == "receiver" || text == "call") return Side::receiver;
    throw InputError("unknown option side '" + std::string(text) + "'");
}

std::string_view to_string(Side side) {
    return side == Side::payer ? "payer" : "receiver";
}

void validate(const OptionSpec& spec) {
    detail::require(spec.strike > 0.0, "option: strike must be positive");
    detail::require(spec.vol >= 0.0 && std::isfinite(spec.vol), "option: negative volatility");
    detail::require(spec.expiry > 0.0 && spec.expiry < spec.maturity,
                    "option: need 0 < expiry < maturity");
}

namespace {

void check_black_inputs(double forward, double strike, double stddev) {
    detail::require(forward > 0.0 && strike > 0.0, "black: forward and strike must be positive");
    detail::require(stddev >= 0.0, "black: negative standard deviation");
}

}  // namespace

double black(double forward, double strike, double stddev) {
    check_black_inputs(forward, strike, stddev);
    if (stddev == 0.0) return std::max(forward - strike, 0.0);
    const double d1 = (std::log(forward / strike) + 0.5 * stddev * stddev) / stddev;
    const double d2 = d1 - stddev;
    return forward * norm_cdf(d1) - strike * norm_cdf(d2);
}

double black_put(double forward, double strike, double stddev) {
    check_black_inputs(forward, strike, stddev);
    if (stddev == 0.0) return std::max(strike - forward, 0.0);
    const double d1 = (std::log(forward / strike) + 0.5 * stddev * stddev) / stddev;
    const double d2 = d1 - stddev;
    return strike * norm_cdf(-d2) - forward * norm_cdf(-d1);
}

namespace {

double black_side(Side side, double forward, double strike, double stddev) {
    return side == Side::payer ? black(forward, strike, stddev) : black_put(forward, strike, stddev);
}

double invert(const std::function<double(double)>& price, double target) {
    if (!std::isfinite(target)) throw InversionError("implied vol: target is not finite");
    auto f = [&](double vol) { return price(vol) - target; };
    const double f_lo = f(kMinImpliedVol);
    const double f_hi = f(kMaxImpliedVol);
    if (f_lo > 0.0 || f_hi < 0.0)
        throw InversionError("implied vol: target " + std::to_string(target) +
                             " outside attainable range [" + std::to_string(f_lo + target) + ", " +
                             std::to_string(f_hi + target) + "]");
    if (f_lo == 0.0) return kMinImpliedVol;
    if (f_hi == 0.0) return kMaxImpliedVol;

    std::uintmax_t max_iter = 200;
    const auto [a, b] = boost::math::tools::toms748_solve(
        f, kMinImpliedVol, kMaxImpliedVol, f_lo, f_hi,
        boost::math::tools::eps_tolerance<double>(), max_iter);
    const double vol = std::abs(f(a)) <= std::abs(f(b)) ? a : b;
    if (std::abs(f(vol)) >= 1e-10)
        throw InversionError("implied vol: residual above 1e-10 (flat vega near target)");
    return vol;
}

}  // namespace

double price_market(const IndexLegs& legs, const OptionSpec& spec) {
    validate(spec);
    const double spread = market_adjusted_spread(legs);
    return legs.annuity * black_side(spec.side, spread, spec.strike, spec.vol * std::sqrt(spec.expiry));
}

PriceBreakdown price_noarb(const IndexLegs& legs, const ArmageddonAdjustment& adj,
                           const OptionSpec& spec, const DiscountCurve& curve, double recovery) {
    validate(spec);
    PriceBreakdown out;
    const double stddev = spec.vol * std::sqrt(spec.expiry);
    out.black_term = legs.annuity * black_side(spec.side, adj.adjusted_spread, spec.strike, stddev);
    if (spec.side == Side::payer)
        out.armageddon_term = (1.0 - recovery) * curve.discount(spec.expiry) * adj.q_arm;
    out.realized_term = 0.0;
    out.total = out.black_term + out.armageddon_term + out.realized_term;
    return out;
}

double implied_vol(const IndexLegs& legs, const OptionSpec& spec, double target_price) {
    return invert(
        [&](double vol) {
            OptionSpec s = spec;
            s.vol = vol;
            return price_market(legs, s);
        },
        target_price);
}

double implied_vol(const IndexLegs& legs, const ArmageddonAdjustment& adj, const OptionSpec& spec,
                   const DiscountCurve& curve, double recovery, double target_price) {
    return invert(
        [&](double vol) {
            OptionSpec s = spec;
            s.vol = vol;
            return price_noarb(legs, adj, s, curve, recovery).total;
        },
        target_price);
}

}  // namespace cio

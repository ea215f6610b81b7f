#include "cio/hazard.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "cio/error.hpp"
#include "cio/index_legs.hpp"

namespace cio {

HazardCurve::HazardCurve(std::vector<IntensityPillar> pillars) : pillars_(std::move(pillars)) {
    detail::require(!pillars_.empty(), "HazardCurve: no pillars");
    double prev = 0.0;
    for (const auto& p : pillars_) {
        detail::require(p.time > prev, "HazardCurve: pillar times must increase");
        detail::require(p.intensity >= 0.0 && std::isfinite(p.intensity),
                        "HazardCurve: intensity must be finite and non-negative");
        prev = p.time;
    }
}

HazardCurve HazardCurve::flat(double intensity) {
    return HazardCurve({{std::numeric_limits<double>::max(), intensity}});
}

double HazardCurve::cumulative(double t) const {
    detail::require(t >= 0.0, "survival: negative time");
    double acc = 0.0;
    double left = 0.0;
    for (const auto& p : pillars_) {
        if (t <= p.time) return acc + p.intensity * (t - left);
        acc += p.intensity * (p.time - left);
        left = p.time;
    }
    return acc + pillars_.back().intensity * (t - left);
}

double HazardCurve::survival(double t) const {
    if (t == 0.0) return 1.0;
    return std::exp(-cumulative(t));
}

HazardCurve calibrate_flat_intensity(double spread, double recovery, const Schedule& spot,
                                     const DiscountCurve& curve) {
    if (!(spread > 0.0) || !std::isfinite(spread))
        throw CalibrationError("calibration: spread must be positive, got " + std::to_string(spread));
    detail::require(recovery >= 0.0 && recovery < 1.0, "calibration: recovery must lie in [0,1)");
    detail::require(spot.start == 0.0, "calibration: requires a spot schedule");

    // Residual is increasing in lambda: zero at lambda=0 minus spread*annuity < 0.
    auto residual = [&](double lambda) {
        const auto hazard = HazardCurve::flat(lambda);
        return protection_leg(hazard, curve, spot, recovery) - spread * annuity(hazard, curve, spot);
    };

    const double guess = spread / (1.0 - recovery);
    double lo = std::min(0.5 * guess, kMaxIntensity);
    double hi = std::min(2.0 * guess, kMaxIntensity);
    double f_lo = residual(lo);
    double f_hi = residual(hi);
    while (f_lo > 0.0 && lo > 1e-300) {
        hi = lo;
        f_hi = f_lo;
        lo *= 0.25;
        f_lo = residual(lo);
    }
    while (f_hi < 0.0 && hi < kMaxIntensity) {
        lo = hi;
        f_lo = f_hi;
        hi = std::min(4.0 * hi, kMaxIntensity);
        f_hi = residual(hi);
    }
    if (f_lo > 0.0 || f_hi < 0.0)
        throw CalibrationError("calibration: no intensity in (0, 20] reprices spread " +
                               std::to_string(spread));

    double lambda = 0.0;
    if (f_lo == 0.0) {
        lambda = lo;
    } else if (f_hi == 0.0) {
        lambda = hi;
    } else {
        std::uintmax_t max_iter = 200;
        const auto [a, b] = boost::math::tools::toms748_solve(
            residual, lo, hi, f_lo, f_hi, boost::math::tools::eps_tolerance<double>(), max_iter);
        lambda = std::abs(residual(a)) <= std::abs(residual(b)) ? a : b;
    }

    if (std::abs(residual(lambda)) > 1e-12)
        throw CalibrationError("calibration: residual above tolerance for spread " +
                               std::to_string(spread));
    return HazardCurve::flat(lambda);
}

}  // namespace cio

#include "cio/index_legs.hpp"

#include "cio/error.hpp"

namespace cio {

double protection_leg(const HazardCurve& hazard, const DiscountCurve& curve,
                      const Schedule& schedule, double recovery) {
    double sum = 0.0;
    double s_prev = hazard.survival(schedule.start);
    for (std::size_t j = 0; j < schedule.size(); ++j) {
        const double t = schedule.payment_times[j];
        const double s = hazard.survival(t);
        sum += curve.discount(t) * (s_prev - s);
        s_prev = s;
    }
    return (1.0 - recovery) * sum;
}

double annuity(const HazardCurve& hazard, const DiscountCurve& curve, const Schedule& schedule) {
    double sum = 0.0;
    for (std::size_t j = 0; j < schedule.size(); ++j) {
        const double t = schedule.payment_times[j];
        sum += schedule.accruals[j] * curve.discount(t) * hazard.survival(t);
    }
    return sum;
}

double front_end_protection(const HazardCurve& hazard, const DiscountCurve& curve,
                            double expiry, double recovery) {
    return curve.discount(expiry) * (1.0 - recovery) * hazard.default_probability(expiry);
}

IndexLegs value_index_legs(const HazardCurve& hazard, const DiscountCurve& curve,
                           const Schedule& schedule, double recovery) {
    detail::require(recovery >= 0.0 && recovery <= 1.0, "index legs: recovery outside [0,1]");
    return IndexLegs{
        .protection_value = protection_leg(hazard, curve, schedule, recovery),
        .annuity = annuity(hazard, curve, schedule),
        .fep_value = front_end_protection(hazard, curve, schedule.start, recovery),
        .start = schedule.start,
        .maturity = schedule.maturity,
    };
}

double forward_spread(const IndexLegs& legs) {
    if (!(legs.annuity > 0.0)) throw NumericalError("forward spread: annuity vanishes");
    return legs.protection_value / legs.annuity;
}

double market_adjusted_spread(const IndexLegs& legs) {
    if (!(legs.annuity > 0.0)) throw NumericalError("loss-adjusted spread: annuity vanishes");
    return (legs.protection_value + legs.fep_value) / legs.annuity;
}

double forward_index_value(const IndexLegs& legs, double strike) {
    return legs.protection_value + legs.fep_value - strike * legs.annuity;
}

double single_name_cds_spread(const HazardCurve& hazard, const DiscountCurve& curve,
                              const Schedule& schedule, double recovery) {
    // One name with the common intensity: same sums as the homogeneous index.
    double premium = 0.0;
    double protection = 0.0;
    double s_prev = hazard.survival(schedule.start);
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        const double t = schedule.payment_times[i];
        const double df = curve.discount(t);
        const double s = hazard.survival(t);
        protection += df * (s_prev - s);
        premium += schedule.accruals[i] * df * s;
        s_prev = s;
    }
    if (!(premium > 0.0)) throw NumericalError("cds spread: premium leg vanishes");
    return (1.0 - recovery) * protection / premium;
}

}  // namespace cio

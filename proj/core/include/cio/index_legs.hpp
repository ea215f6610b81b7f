/// @file index_legs.hpp
/// @brief Valuation of forward credit index legs at t = 0 under the
///        homogeneous-portfolio, deterministic-intensity quotation model.
///
/// Loss payments are aligned to premium dates and the premium leg accrues on
/// the notional outstanding at the end of each period (no accrual on default).

#pragma once

#include "cio/curves.hpp"
#include "cio/hazard.hpp"

namespace cio {

/// Leg values of the forward index on [start, maturity], unit notional.
struct IndexLegs {
    double protection_value = 0.0;  ///< protection leg, excluding front-end protection
    double annuity = 0.0;           ///< defaultable PV of one unit of running spread (DV01)
    double fep_value = 0.0;         ///< front-end protection covering losses on [0, start]
    double start = 0.0;
    double maturity = 0.0;
};

/// (1-R) * sum_j P(0,T_j) (S(T_{j-1}) - S(T_j)).
double protection_leg(const HazardCurve& hazard, const DiscountCurve& curve,
                      const Schedule& schedule, double recovery);

/// sum_j alpha_j P(0,T_j) S(T_j).
double annuity(const HazardCurve& hazard, const DiscountCurve& curve, const Schedule& schedule);

/// P(0,T_A) (1-R) (1 - S(T_A)): discounted expected portfolio loss at expiry.
double front_end_protection(const HazardCurve& hazard, const DiscountCurve& curve,
                            double expiry, double recovery);

/// Values all three legs of the forward index underlying an option expiring
/// at schedule.start.
IndexLegs value_index_legs(const HazardCurve& hazard, const DiscountCurve& curve,
                           const Schedule& schedule, double recovery);

/// Plain forward spread protection/annuity.
double forward_spread(const IndexLegs& legs);

/// Loss-adjusted spread (protection + FEP) / annuity.
/// Throws NumericalError if the annuity vanishes.
double market_adjusted_spread(const IndexLegs& legs);

/// Value of the loss-adjusted forward index struck at K:
/// protection + FEP - K * annuity.
double forward_index_value(const IndexLegs& legs, double strike);

/// Single-name CDS par spread on the schedule. Under homogeneity this equals
/// the plain index spread.
double single_name_cds_spread(const HazardCurve& hazard, const DiscountCurve& curve,
                              const Schedule& schedule, double recovery);

}  // namespace cio

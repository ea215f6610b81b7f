/// @file copula.hpp
/// @brief Portfolio armageddon under the one-factor Gaussian copula and the
///        no-armageddon adjustments of the index spread.
///
/// Names are conditionally independent given a standard normal factor m; name i
/// defaults by the horizon with probability
///
///     p(m) = Phi((C - sqrt(rho) m) / sqrt(1 - rho)),   C = Phi^-1(p).
///
/// The armageddon event is the default of all n names, so
///
///     Q(armageddon) = int phi(m) p(m)^n dm.

#pragma once

#include <cstddef>

#include "cio/curves.hpp"
#include "cio/index_legs.hpp"

namespace cio {

struct CopulaParams {
    double rho = 0.0;           ///< flat (base) correlation in [0,1]
    int n_names = 1;
    double default_prob = 0.0;  ///< single-name default probability p by the horizon, in [0,1)
};

void validate(const CopulaParams& params);

struct ArmageddonAdjustment {
    double q_arm = 0.0;            ///< Q(all names default by T_A)
    double fep_noarm = 0.0;        ///< FEP restricted to no-armageddon states
    double adjusted_spread = 0.0;  ///< arbitrage-free index spread
};

/// Correlations within this distance of 1 use the comonotone closed form.
inline constexpr double kComonotoneCutoff = 1e-6;
inline constexpr std::size_t kDefaultNodesPerPanel = 16;

/// Probability that all names default by the horizon.
///
/// Closed forms at rho = 0 (p^n) and rho >= 1 - kComonotoneCutoff (p).
/// Otherwise composite Gauss-Legendre on m in [-10, 10] with unit panels,
/// refined around the transition m0 = C / sqrt(rho) whose width is
/// sqrt((1 - rho) / rho).
double armageddon_prob(const CopulaParams& params,
                       std::size_t nodes_per_panel = kDefaultNodesPerPanel);

/// fep - (1-R) P(0,T_A) q_arm. Round-off negatives down to -1e-12 are clamped
/// to zero; anything lower means inconsistent inputs and throws InputError.
double no_armageddon_fep(const IndexLegs& legs, double q_arm, double recovery,
                         const DiscountCurve& curve, double expiry);

/// (protection + fep_noarm) / annuity.
double adjusted_spread(const IndexLegs& legs, double fep_noarm);

/// Bundles q_arm, the no-armageddon FEP and the adjusted spread for legs whose
/// start is the option expiry.
ArmageddonAdjustment make_armageddon_adjustment(const IndexLegs& legs, double q_arm,
                                                double recovery, const DiscountCurve& curve);

/// Tranche loss ((L-x)^+ - (L-y)^+) / (y-x) for attachment x < detachment y.
double tranched_loss(double loss, double attachment, double detachment);

}  // namespace cio

#include "cio/copula.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cio/error.hpp"
#include "cio/normal.hpp"
#include "cio/quadrature.hpp"

namespace cio {

namespace {

constexpr double kFactorBound = 10.0;

const QuadratureRule& default_rule() {
    static const QuadratureRule rule = gauss_legendre(kDefaultNodesPerPanel);
    return rule;
}

std::vector<double> panel_breaks(double transition, double width) {
    std::vector<double> breaks;
    for (int k = -10; k <= 10; ++k) breaks.push_back(static_cast<double>(k));
    for (double offset : {-8.0, -4.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double b = transition + offset * width;
        if (std::isfinite(b) && b > -kFactorBound && b < kFactorBound) breaks.push_back(b);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [](double a, double b) { return b - a < 1e-12; }),
                 breaks.end());
    return breaks;
}

}  // namespace

void validate(const CopulaParams& params) {
    detail::require(params.rho >= 0.0 && params.rho <= 1.0, "copula: rho outside [0,1]");
    detail::require(params.n_names > 0, "copula: n_names must be positive");
    detail::require(params.default_prob >= 0.0 && params.default_prob < 1.0,
                    "copula: default probability outside [0,1)");
}

double armageddon_prob(const CopulaParams& params, std::size_t nodes_per_panel) {
    validate(params);
    const double p = params.default_prob;
    const double n = static_cast<double>(params.n_names);
    if (p == 0.0) return 0.0;
    if (params.rho == 0.0) return std::pow(p, n);
    if (params.rho >= 1.0 - kComonotoneCutoff) return p;

    const double threshold = norm_inv(p);
    const double sqrt_rho = std::sqrt(params.rho);
    const double sqrt_1m_rho = std::sqrt(1.0 - params.rho);
    const auto breaks = panel_breaks(threshold / sqrt_rho, sqrt_1m_rho / sqrt_rho);

    QuadratureRule custom;
    if (nodes_per_panel != kDefaultNodesPerPanel) custom = gauss_legendre(nodes_per_panel);
    const QuadratureRule& rule = custom.nodes.empty() ? default_rule() : custom;

    double total = 0.0;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double mid = 0.5 * (breaks[k] + breaks[k + 1]);
        const double half = 0.5 * (breaks[k + 1] - breaks[k]);
        double panel = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double m = mid + half * rule.nodes[i];
            const double conditional = norm_cdf((threshold - sqrt_rho * m) / sqrt_1m_rho);
            panel += rule.weights[i] * norm_pdf(m) * std::pow(conditional, n);
        }
        total += half * panel;
    }
    return std::clamp(total, 0.0, p);
}

double no_armageddon_fep(const IndexLegs& legs, double q_arm, double recovery,
                         const DiscountCurve& curve, double expiry) {
    detail::require(q_arm >= 0.0 && q_arm <= 1.0, "no-armageddon FEP: q_arm outside [0,1]");
    const double value = legs.fep_value - (1.0 - recovery) * curve.discount(expiry) * q_arm;
    if (value < -1e-12)
        throw InputError("no-armageddon FEP: armageddon probability exceeds expected loss");
    return std::max(value, 0.0);
}

double adjusted_spread(const IndexLegs& legs, double fep_noarm) {
    if (!(legs.annuity > 0.0)) throw NumericalError("adjusted spread: annuity vanishes");
    return (legs.protection_value + fep_noarm) / legs.annuity;
}

ArmageddonAdjustment make_armageddon_adjustment(const IndexLegs& legs, double q_arm,
                                                double recovery, const DiscountCurve& curve) {
    ArmageddonAdjustment adj;
    adj.q_arm = q_arm;
    adj.fep_noarm = no_armageddon_fep(legs, q_arm, recovery, curve, legs.start);
    adj.adjusted_spread = adjusted_spread(legs, adj.fep_noarm);
    return adj;
}

double tranched_loss(double loss, double attachment, double detachment) {
    detail::require(attachment >= 0.0 && detachment <= 1.0 && attachment < detachment,
                    "tranched loss: need 0 <= x < y <= 1");
    detail::require(loss >= 0.0 && loss <= 1.0, "tranched loss: loss outside [0,1]");
    const double width = detachment - attachment;
    return std::clamp(loss - attachment, 0.0, width) / width;
}

}  // namespace cio

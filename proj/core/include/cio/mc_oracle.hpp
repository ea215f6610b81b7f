/// @file mc_oracle.hpp
/// @brief Monte Carlo validator for the copula quantities.
///
/// Each path draws the common factor m and one uniform per name; name i has
/// defaulted when u_i < Phi((C - sqrt(rho) m) / sqrt(1 - rho)). Paths are
/// split into fixed-size chunks with their own seeded stream, so estimates do
/// not depend on the number of worker threads.

#pragma once

#include <cstddef>
#include <cstdint>

#include "cio/copula.hpp"

namespace cio {

struct McConfig {
    std::size_t n_paths = 1'000'000;
    std::uint64_t seed = 20070814;
    bool antithetic = false;  ///< pair (m, u) with (-m, 1-u)
    unsigned threads = 0;     ///< 0 = hardware concurrency
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n_paths = 0;
};

inline constexpr std::size_t kMcChunkPaths = 8192;

/// Q(all names default). Uses the default fraction, whose mean is the known
/// marginal p, as a control variate; in the comonotone limit it coincides with
/// the armageddon indicator and the estimate is exactly p with zero error.
McEstimate simulate_armageddon(const CopulaParams& params, const McConfig& cfg);

/// E[L(T_A) 1{not all names defaulted}] with L the portfolio loss fraction
/// (1-R) * defaults / n.
McEstimate simulate_loss_given_no_armageddon(const CopulaParams& params, const McConfig& cfg,
                                             double recovery);

}  // namespace cio

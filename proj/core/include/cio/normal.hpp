/// @file normal.hpp
/// @brief Standard normal density, distribution and quantile.

#pragma once

namespace cio {

double norm_pdf(double x);

/// Phi(x), accurate in both tails (erfc based).
double norm_cdf(double x);

/// Phi^-1(p). Returns -inf at p=0 and +inf at p=1.
double norm_inv(double p);

}  // namespace cio

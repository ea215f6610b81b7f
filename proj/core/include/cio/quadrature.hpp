/// @file quadrature.hpp
/// @brief Gauss-Legendre rules on [-1, 1].

#pragma once

#include <cstddef>
#include <vector>

namespace cio {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n.
QuadratureRule gauss_legendre(std::size_t n);

}  // namespace cio

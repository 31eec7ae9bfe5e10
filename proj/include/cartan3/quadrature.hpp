#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace cartan3 {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1,1] (cached per order).
const GaussRule& gauss_legendre(int order);
/// Gauss-Legendre rule mapped to [a,b].
GaussRule gauss_legendre(int order, double a, double b);
/// Generalized Gauss-Laguerre rule, weight x^alpha e^{-x} on [0,inf).
GaussRule gauss_laguerre(int order, double alpha = 0.0);
/// Gauss-Hermite rule, weight e^{-x^2} on (-inf,inf).
GaussRule gauss_hermite(int order);

/**
 * @brief Tensorized Gauss-Legendre integral over a box.
 *
 * `order` nodes per axis; throws std::length_error when the total node
 * count order^dim exceeds `budget`, std::invalid_argument for order < 2.
 */
std::complex<double> integrate_box(const std::function<std::complex<double>(std::span<const double>)>& f,
                                   int dim, std::span<const double> lower, std::span<const double> upper,
                                   int order, long budget = (1L << 26));

}  // namespace cartan3

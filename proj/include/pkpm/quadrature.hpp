#pragma once

#include <array>
#include <vector>

namespace pkpm {

/// Quadrature on the reference triangle (0,0), (1,0), (0,1). Weights sum to
/// the triangle area 1/2; the rule integrates every bivariate polynomial of
/// total degree <= degree exactly.
struct QuadratureRule {
    int degree = 0;
    std::vector<std::array<double, 3>> points;  ///< barycentric coordinates
    std::vector<double> weights;
};

/// Rule exact to the requested total degree, built by collapsing a
/// tensor-product Gauss-Legendre grid onto the triangle.
QuadratureRule triangle_rule(int degree);

/// Gauss-Legendre nodes and weights on [0,1] (weights sum to 1).
void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace pkpm

#include "pkpm/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace pkpm {

void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_01: n must be >= 1");
    nodes.resize(n);
    weights.resize(n);
    // Roots of the Legendre polynomial P_n on [-1,1] by Newton iteration,
    // seeded with the Chebyshev-like estimate; then mapped to [0,1].
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double x_next = x - p1 / dp;
            if (x_next == x) break;  // fixed point: node resolved to the last bit
            x = x_next;
        }
        nodes[n - 1 - i] = 0.5 * (1.0 + x);
        weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
}

QuadratureRule triangle_rule(int degree) {
    if (degree < 0) throw std::invalid_argument("triangle_rule: degree must be >= 0");
    // Collapsed map (xi, eta) -> (x, y) = (xi, eta*(1-xi)) has Jacobian
    // (1-xi), so the xi-integrand of a degree-d polynomial has degree d+1.
    // n Gauss points are exact to 2n-1; n = (d+3)/2 covers d+1.
    const int n = (degree + 3) / 2;
    std::vector<double> gx, gw;
    gauss_legendre_01(n, gx, gw);

    QuadratureRule rule;
    rule.degree = degree;
    rule.points.reserve(static_cast<std::size_t>(n) * n);
    rule.weights.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double x = gx[i];
            const double y = gx[j] * (1.0 - gx[i]);
            rule.points.push_back({1.0 - x - y, x, y});
            rule.weights.push_back(gw[i] * gw[j] * (1.0 - gx[i]));
        }
    }
    return rule;
}

}  // namespace pkpm

#include "pkpm/reference_element.hpp"

#include <stdexcept>

namespace pkpm {

namespace {

// Factor P_r(lambda) of the lattice (Silvester) basis: a degree-r polynomial
// in one barycentric coordinate that vanishes on the first r lattice planes
// and equals 1 at lambda = r/k.
double lattice_poly(int k, int r, double lam) {
    double v = 1.0;
    for (int t = 0; t < r; ++t) v *= (k * lam - t) / static_cast<double>(r - t);
    return v;
}

double lattice_poly_deriv(int k, int r, double lam) {
    double sum = 0.0;
    for (int t = 0; t < r; ++t) {
        double prod = static_cast<double>(k) / (r - t);
        for (int s = 0; s < r; ++s)
            if (s != t) prod *= (k * lam - s) / static_cast<double>(r - s);
        sum += prod;
    }
    return sum;
}

}  // namespace

ReferenceElement::ReferenceElement(int degree) : degree_(degree) {
    if (degree < 1 || degree > 4)
        throw std::invalid_argument("ReferenceElement: degree must be in 1..4");
    const int k = degree;
    multi_.push_back({k, 0, 0});  // V0
    multi_.push_back({0, k, 0});  // V1
    multi_.push_back({0, 0, k});  // V2
    for (int t = 1; t < k; ++t) multi_.push_back({k - t, t, 0});  // edge V0->V1
    for (int t = 1; t < k; ++t) multi_.push_back({0, k - t, t});  // edge V1->V2
    for (int t = 1; t < k; ++t) multi_.push_back({t, 0, k - t});  // edge V2->V0
    for (int j = 1; j <= k - 2; ++j)
        for (int i = 1; i <= k - 1 - j; ++i) multi_.push_back({k - i - j, i, j});
    nodes_.reserve(multi_.size());
    for (const auto& m : multi_)
        nodes_.push_back({m[0] / static_cast<double>(k), m[1] / static_cast<double>(k),
                          m[2] / static_cast<double>(k)});
}

std::vector<double> ReferenceElement::eval(const std::array<double, 3>& bary) const {
    std::vector<double> phi(multi_.size());
    for (std::size_t i = 0; i < multi_.size(); ++i) {
        const auto& m = multi_[i];
        phi[i] = lattice_poly(degree_, m[0], bary[0]) * lattice_poly(degree_, m[1], bary[1]) *
                 lattice_poly(degree_, m[2], bary[2]);
    }
    return phi;
}

std::vector<std::array<double, 2>> ReferenceElement::eval_grad(
    const std::array<double, 3>& bary) const {
    // Reference coordinates: lambda = (1-x-y, x, y), so d/dx = d2 - d1 and
    // d/dy = d3 - d1 in terms of barycentric partials.
    std::vector<std::array<double, 2>> grad(multi_.size());
    for (std::size_t i = 0; i < multi_.size(); ++i) {
        const auto& m = multi_[i];
        const double p1 = lattice_poly(degree_, m[0], bary[0]);
        const double p2 = lattice_poly(degree_, m[1], bary[1]);
        const double p3 = lattice_poly(degree_, m[2], bary[2]);
        const double d1 = lattice_poly_deriv(degree_, m[0], bary[0]) * p2 * p3;
        const double d2 = p1 * lattice_poly_deriv(degree_, m[1], bary[1]) * p3;
        const double d3 = p1 * p2 * lattice_poly_deriv(degree_, m[2], bary[2]);
        grad[i] = {d2 - d1, d3 - d1};
    }
    return grad;
}

}  // namespace pkpm

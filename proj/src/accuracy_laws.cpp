#include "pkpm/accuracy_laws.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pkpm {

BoundCoefficient estimate_coefficient(std::span<const ErrorSample> samples, int k) {
    if (samples.empty()) throw std::invalid_argument("estimate_coefficient: no samples");
    BoundCoefficient coef;
    coef.degree = k;
    coef.sample_count = static_cast<long>(samples.size());
    for (const auto& s : samples) {
        if (s.degree != k)
            throw std::invalid_argument("estimate_coefficient: sample degree mismatch");
        if (!(s.h > 0.0)) throw std::invalid_argument("estimate_coefficient: sample with h <= 0");
        coef.value = std::max(coef.value, s.error / std::pow(s.h, k));
    }
    return coef;
}

double estimate_h_star(const BoundCoefficient& coef_k, const BoundCoefficient& coef_m) {
    if (coef_k.degree >= coef_m.degree)
        throw std::invalid_argument("estimate_h_star: need degree k < m");
    if (!(coef_k.value > 0.0) || !(coef_m.value > 0.0))
        throw std::invalid_argument("estimate_h_star: coefficients must be positive");
    return std::pow(coef_k.value / coef_m.value, 1.0 / (coef_m.degree - coef_k.degree));
}

double two_steps_law(double h, double h_star) {
    if (!(h > 0.0) || !(h_star > 0.0))
        throw std::invalid_argument("two_steps_law: h and h_star must be positive");
    if (h < h_star) return 1.0;
    if (h > h_star) return 0.0;
    return 0.5;
}

double sigmoid_law(double h, double h_star, int k, int m) {
    if (!(h > 0.0) || !(h_star > 0.0))
        throw std::invalid_argument("sigmoid_law: h and h_star must be positive");
    if (k >= m) throw std::invalid_argument("sigmoid_law: need k < m");
    const int d = m - k;
    if (h <= h_star) return 1.0 - 0.5 * std::pow(h / h_star, d);
    return 0.5 * std::pow(h_star / h, d);
}

double empirical_frequency(std::span<const ErrorPair> pairs) {
    if (pairs.empty()) throw std::invalid_argument("empirical_frequency: no pairs");
    long wins = 0;
    for (const auto& p : pairs)
        if (p.err_m <= p.err_k) ++wins;
    return static_cast<double>(wins) / static_cast<double>(pairs.size());
}

}  // namespace pkpm

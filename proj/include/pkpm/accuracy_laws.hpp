#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pkpm {

/// One H1-error measurement: a realization of the random error variable for
/// degree k at mesh size h.
struct ErrorSample {
    double h = 0.0;
    std::uint64_t seed = 0;
    int degree = 0;
    double error = 0.0;
};

/// Maximum-likelihood estimate of the bound coefficient (the support
/// endpoint of error/h^k across the campaign).
struct BoundCoefficient {
    int degree = 0;
    double value = 0.0;
    long sample_count = 0;
};

/// One trial's error pair: the higher degree m competing against the lower
/// degree k.
struct ErrorPair {
    double err_m = 0.0;
    double err_k = 0.0;
};

/// Critical-mesh-size model for the degree pair (k, m).
struct AccuracyModel {
    int k = 0;
    int m = 0;
    double h_star = 0.0;
    BoundCoefficient coef_k, coef_m;
};

/// MLE of the bound coefficient: max of error/h^k pooled over every sample
/// (all mesh sizes and seeds). All samples must carry degree k.
BoundCoefficient estimate_coefficient(std::span<const ErrorSample> samples, int k);

/// Critical mesh size estimate (coef_k / coef_m)^(1/(m-k)).
double estimate_h_star(const BoundCoefficient& coef_k, const BoundCoefficient& coef_m);

/// Degenerate step law: 1 below h_star, 0 above, 0.5 at h_star.
double two_steps_law(double h, double h_star);

/// Smooth law under the uniform-error model: 1 - (h/h_star)^(m-k)/2 for
/// h <= h_star, (h_star/h)^(m-k)/2 above; equals 0.5 at h_star.
double sigmoid_law(double h, double h_star, int k, int m);

/// Fraction of trials where the higher degree was at least as accurate
/// (err_m <= err_k; ties count as success).
double empirical_frequency(std::span<const ErrorPair> pairs);

}  // namespace pkpm

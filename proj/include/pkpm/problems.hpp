#pragma once

#include <functional>
#include <string>

#include "pkpm/geometry.hpp"

namespace pkpm {

/// Manufactured Poisson problem -Laplace(u) = q on the unit square with
/// Dirichlet data g = u restricted to the boundary. All evaluators are pure.
struct ProblemCase {
    std::string name;
    double alpha = 0.0;  ///< peak-sharpness parameter (runge family only)
    std::function<double(double, double)> u;
    std::function<Vec2(double, double)> grad_u;
    std::function<double(double, double)> q;
    std::function<double(double, double)> g;
};

/// Product of Runge functions: u = 1/((1+alpha x^2)(1+alpha y^2)). Sharp
/// peak at the origin for large alpha.
ProblemCase runge_case(double alpha);

/// u = sin(pi x) cos(pi y), q = 2 pi^2 u.
ProblemCase smooth_case();

/// Harmonic polynomial of total degree d (1..4) with q = 0; exactly
/// representable by every P_k space with k >= d, so discretization error is
/// zero up to solver tolerance.
ProblemCase polynomial_patch_case(int degree);

}  // namespace pkpm

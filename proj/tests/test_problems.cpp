#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "pkpm/problems.hpp"
#include "pkpm/rng.hpp"

using namespace pkpm;

namespace {

// central-difference Laplacian as the source-term oracle
double fd_laplacian(const ProblemCase& pc, double x, double y, double h) {
    return (pc.u(x + h, y) + pc.u(x - h, y) + pc.u(x, y + h) + pc.u(x, y - h) -
            4.0 * pc.u(x, y)) /
           (h * h);
}

Vec2 fd_gradient(const ProblemCase& pc, double x, double y, double h) {
    return {(pc.u(x + h, y) - pc.u(x - h, y)) / (2.0 * h),
            (pc.u(x, y + h) - pc.u(x, y - h)) / (2.0 * h)};
}

void check_derivatives(const ProblemCase& pc, double scale) {
    for (std::uint64_t rep = 0; rep < 100; ++rep) {
        const double x = 0.05 + 0.9 * uniform01(hash_key({20, rep, 0}));
        const double y = 0.05 + 0.9 * uniform01(hash_key({20, rep, 1}));
        const Vec2 g = pc.grad_u(x, y);
        const Vec2 fd = fd_gradient(pc, x, y, 1e-6);
        CHECK(std::fabs(g.x - fd.x) <= 1e-6 * scale);
        CHECK(std::fabs(g.y - fd.y) <= 1e-6 * scale);
        const double lap = fd_laplacian(pc, x, y, 1e-4);
        CHECK(std::fabs(pc.q(x, y) + lap) <= 1e-4 * scale);
    }
}

}  // namespace

TEST_CASE("runge family point values") {
    const double alpha = 25.0;
    const ProblemCase pc = runge_case(alpha);
    CHECK(pc.alpha == alpha);
    CHECK(pc.u(0.0, 0.0) == 1.0);
    CHECK(pc.u(1.0, 1.0) == doctest::Approx(1.0 / ((1.0 + alpha) * (1.0 + alpha))).epsilon(1e-15));
    CHECK(pc.q(0.0, 0.0) == doctest::Approx(4.0 * alpha).epsilon(1e-15));
    // top-edge trace from the closed form
    for (double x : {0.0, 0.3, 0.7, 1.0})
        CHECK(pc.g(x, 1.0) ==
              doctest::Approx(1.0 / ((1.0 + alpha * x * x) * (1.0 + alpha))).epsilon(1e-15));
}

TEST_CASE("runge family is symmetric and consistent") {
    const ProblemCase pc = runge_case(25.0);
    for (std::uint64_t rep = 0; rep < 50; ++rep) {
        const double x = uniform01(hash_key({21, rep, 0}));
        const double y = uniform01(hash_key({21, rep, 1}));
        CHECK(pc.u(x, y) == pc.u(y, x));
        CHECK(pc.q(x, y) == pc.q(y, x));
        CHECK(pc.g(x, y) == pc.u(x, y));
    }
    check_derivatives(pc, 30.0);
}

TEST_CASE("runge sharpness grows with alpha") {
    // the peak at the origin stays at 1 while the tails collapse
    const ProblemCase lo = runge_case(25.0), hi = runge_case(2000.0);
    CHECK(lo.u(0.0, 0.0) == 1.0);
    CHECK(hi.u(0.0, 0.0) == 1.0);
    CHECK(hi.u(0.5, 0.5) < lo.u(0.5, 0.5));
    CHECK(hi.q(0.0, 0.0) == doctest::Approx(8000.0).epsilon(1e-15));
}

TEST_CASE("smooth case traces and source") {
    const ProblemCase pc = smooth_case();
    CHECK(pc.u(0.5, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    for (double y : {0.0, 0.25, 0.5, 1.0}) {
        CHECK(std::fabs(pc.g(0.0, y)) <= 1e-15);
        CHECK(std::fabs(pc.g(1.0, y)) <= 1e-15);
    }
    for (std::uint64_t rep = 0; rep < 50; ++rep) {
        const double x = uniform01(hash_key({22, rep, 0}));
        const double y = uniform01(hash_key({22, rep, 1}));
        const double u = pc.u(x, y);
        if (std::fabs(u) > 1e-3)
            CHECK(pc.q(x, y) / u == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-14));
        CHECK(pc.g(x, y) == pc.u(x, y));
    }
    check_derivatives(pc, 30.0);
}

TEST_CASE("polynomial patch catalog is harmonic") {
    for (int d = 1; d <= 4; ++d) {
        const ProblemCase pc = polynomial_patch_case(d);
        for (std::uint64_t rep = 0; rep < 20; ++rep) {
            const double x = uniform01(hash_key({23, rep, 0}));
            const double y = uniform01(hash_key({23, rep, 1}));
            CHECK(pc.q(x, y) == 0.0);
            CHECK(std::fabs(fd_laplacian(pc, x, y, 1e-4)) <= 1e-6);
            CHECK(pc.g(x, y) == pc.u(x, y));
        }
        check_derivatives(pc, 10.0);
    }
    const ProblemCase p1 = polynomial_patch_case(1);
    CHECK(p1.u(0.5, 0.0) == 0.5);
    CHECK(p1.grad_u(0.3, 0.9).x == 1.0);
    CHECK(p1.grad_u(0.3, 0.9).y == 1.0);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(runge_case(0.0), std::invalid_argument);
    CHECK_THROWS_AS(runge_case(-3.0), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_patch_case(0), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_patch_case(5), std::invalid_argument);
}

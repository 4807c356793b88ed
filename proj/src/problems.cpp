#include "pkpm/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace pkpm {

ProblemCase runge_case(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("runge_case: alpha must be positive");
    const double a = alpha;
    auto f = [a](double t) { return 1.0 / (1.0 + a * t * t); };
    auto df = [a](double t) {
        const double d = 1.0 + a * t * t;
        return -2.0 * a * t / (d * d);
    };
    auto ddf = [a](double t) {
        const double d = 1.0 + a * t * t;
        return 2.0 * a * (3.0 * a * t * t - 1.0) / (d * d * d);
    };
    ProblemCase pc;
    pc.name = "runge";
    pc.alpha = alpha;
    pc.u = [f](double x, double y) { return f(x) * f(y); };
    pc.grad_u = [f, df](double x, double y) { return Vec2{df(x) * f(y), f(x) * df(y)}; };
    pc.q = [f, ddf](double x, double y) { return -(ddf(x) * f(y) + f(x) * ddf(y)); };
    pc.g = pc.u;
    return pc;
}

ProblemCase smooth_case() {
    ProblemCase pc;
    pc.name = "smooth";
    pc.u = [](double x, double y) { return std::sin(M_PI * x) * std::cos(M_PI * y); };
    pc.grad_u = [](double x, double y) {
        return Vec2{M_PI * std::cos(M_PI * x) * std::cos(M_PI * y),
                    -M_PI * std::sin(M_PI * x) * std::sin(M_PI * y)};
    };
    pc.q = [](double x, double y) {
        return 2.0 * M_PI * M_PI * std::sin(M_PI * x) * std::cos(M_PI * y);
    };
    pc.g = pc.u;
    return pc;
}

ProblemCase polynomial_patch_case(int degree) {
    ProblemCase pc;
    pc.name = "patch" + std::to_string(degree);
    switch (degree) {
        case 1:
            pc.u = [](double x, double y) { return x + y; };
            pc.grad_u = [](double, double) { return Vec2{1.0, 1.0}; };
            break;
        case 2:
            pc.u = [](double x, double y) { return x * x - y * y; };
            pc.grad_u = [](double x, double y) { return Vec2{2.0 * x, -2.0 * y}; };
            break;
        case 3:
            pc.u = [](double x, double y) { return x * x * x - 3.0 * x * y * y; };
            pc.grad_u = [](double x, double y) {
                return Vec2{3.0 * x * x - 3.0 * y * y, -6.0 * x * y};
            };
            break;
        case 4:
            pc.u = [](double x, double y) {
                return x * x * x * x - 6.0 * x * x * y * y + y * y * y * y;
            };
            pc.grad_u = [](double x, double y) {
                return Vec2{4.0 * x * x * x - 12.0 * x * y * y,
                            -12.0 * x * x * y + 4.0 * y * y * y};
            };
            break;
        default:
            throw std::invalid_argument("polynomial_patch_case: degree must be in 1..4");
    }
    pc.q = [](double, double) { return 0.0; };  // every catalog entry is harmonic
    pc.g = pc.u;
    return pc;
}

}  // namespace pkpm

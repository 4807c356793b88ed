#include "pkpm/bound_model.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pkpm/rng.hpp"

namespace pkpm {

namespace {

// Critical sizes (P2 vs P3) measured for the replicated generator family at
// its standard configurations; interpolation is linear in log-log.
constexpr std::array<std::array<double, 2>, 3> kRungeCalibration = {{
    {25.0, 0.13},
    {500.0, 0.12},
    {2000.0, 0.07},
}};

constexpr double kSmoothHStar = 0.18;

double interp_loglog(double alpha) {
    const auto& t = kRungeCalibration;
    if (alpha <= t.front()[0]) return t.front()[1];
    if (alpha >= t.back()[0]) return t.back()[1];
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (alpha > t[i][0]) continue;
        const double x0 = std::log(t[i - 1][0]), x1 = std::log(t[i][0]);
        const double y0 = std::log(t[i - 1][1]), y1 = std::log(t[i][1]);
        const double w = (std::log(alpha) - x0) / (x1 - x0);
        return std::exp(y0 + w * (y1 - y0));
    }
    return t.back()[1];
}

// Composite Simpson weights: 1, 4, 2, 4, ..., 2, 4, 1 over n intervals.
double simpson_weight(int i, int n) {
    if (i == 0 || i == n) return 1.0;
    return i % 2 == 1 ? 4.0 : 2.0;
}

}  // namespace

double calibrated_h_star(const ProblemCase& pc) {
    if (pc.name == "runge") {
        if (!(pc.alpha > 0.0)) throw std::invalid_argument("calibrated_h_star: alpha must be positive");
        return interp_loglog(pc.alpha);
    }
    if (pc.name == "smooth") return kSmoothHStar;
    if (pc.name.rfind("patch", 0) == 0) return 0.0;
    throw std::invalid_argument("calibrated_h_star: unknown case '" + pc.name + "'");
}

double solution_h1_scale(const ProblemCase& pc) {
    if (!pc.u || !pc.grad_u)
        throw std::invalid_argument("solution_h1_scale: case has missing evaluators");
    constexpr int n = 1024;  // even; resolves the sharpest calibrated Runge peak
    const double dx = 1.0 / n;
    double acc = 0.0;
    for (int j = 0; j <= n; ++j) {
        const double y = j * dx;
        const double wy = simpson_weight(j, n);
        for (int i = 0; i <= n; ++i) {
            const double x = i * dx;
            const double u = pc.u(x, y);
            const auto [gx, gy] = pc.grad_u(x, y);
            acc += wy * simpson_weight(i, n) * (u * u + gx * gx + gy * gy);
        }
    }
    return std::sqrt(acc * dx * dx / 9.0);
}

TrialFn bound_model_trials(double h_star, double scale, double band) {
    if (!(scale > 0.0)) throw std::invalid_argument("bound_model_trials: scale must be positive");
    if (!(band > 0.0) || !(band < 1.0))
        throw std::invalid_argument("bound_model_trials: band must lie in (0, 1)");
    return [h_star, scale, band](const CampaignConfig& config, int h_index,
                                 int trial_index) -> TrialOutcome {
        const double h = config.h_grid.at(static_cast<std::size_t>(h_index));
        TrialOutcome out;
        for (int slot = 0; slot < 2; ++slot) {
            const int degree = slot == 0 ? config.k : config.m;
            ErrorSample sample;
            sample.h = h;
            sample.seed = hash_key({config.master_seed, static_cast<std::uint64_t>(h_index),
                                    static_cast<std::uint64_t>(trial_index),
                                    static_cast<std::uint64_t>(slot)});
            sample.degree = degree;
            if (h_star > 0.0) {
                const double v = 1.0 - band * uniform01(sample.seed);
                sample.error = v * scale * std::pow(h / h_star, degree);
            } else {
                sample.error = 0.0;
            }
            (slot == 0 ? out.sample_k : out.sample_m) = sample;
        }
        out.ok = true;
        return out;
    };
}

}  // namespace pkpm

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pkpm/accuracy_laws.hpp"
#include "pkpm/bound_model.hpp"
#include "pkpm/experiment.hpp"
#include "pkpm/problems.hpp"

using namespace pkpm;

namespace {

CampaignConfig model_config(const ProblemCase& pc, std::vector<double> grid, int trials) {
    CampaignConfig cfg;
    cfg.problem = pc;
    cfg.k = 2;
    cfg.m = 3;
    cfg.h_grid = std::move(grid);
    cfg.trials = trials;
    cfg.master_seed = 77;
    return cfg;
}

// 1D Simpson helper for the product-structure oracle below.
template <class F>
double simpson_1d(const F& f, int n) {
    double acc = f(0.0) + f(1.0);
    for (int i = 1; i < n; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * f(i / static_cast<double>(n));
    return acc / (3.0 * n);
}

}  // namespace

TEST_CASE("calibrated critical size reproduces the calibration table") {
    CHECK(calibrated_h_star(runge_case(25.0)) == doctest::Approx(0.13).epsilon(1e-12));
    CHECK(calibrated_h_star(runge_case(500.0)) == doctest::Approx(0.12).epsilon(1e-12));
    CHECK(calibrated_h_star(runge_case(2000.0)) == doctest::Approx(0.07).epsilon(1e-12));
    CHECK(calibrated_h_star(smooth_case()) == doctest::Approx(0.18).epsilon(1e-12));
    CHECK(calibrated_h_star(polynomial_patch_case(1)) == 0.0);
    CHECK(calibrated_h_star(polynomial_patch_case(4)) == 0.0);
}

TEST_CASE("calibrated critical size interpolates in log-log and clamps") {
    // Log-log linear interpolation maps the geometric mean of two calibrated
    // alphas to the geometric mean of their critical sizes.
    const double mid_alpha = std::sqrt(25.0 * 500.0);
    CHECK(calibrated_h_star(runge_case(mid_alpha)) ==
          doctest::Approx(std::sqrt(0.13 * 0.12)).epsilon(1e-12));
    const double mid_hi = std::sqrt(500.0 * 2000.0);
    CHECK(calibrated_h_star(runge_case(mid_hi)) ==
          doctest::Approx(std::sqrt(0.12 * 0.07)).epsilon(1e-12));
    // Monotone between calibration points, clamped outside.
    const double h100 = calibrated_h_star(runge_case(100.0));
    CHECK(h100 < 0.13);
    CHECK(h100 > 0.12);
    CHECK(calibrated_h_star(runge_case(1.0)) == doctest::Approx(0.13).epsilon(1e-12));
    CHECK(calibrated_h_star(runge_case(1.0e6)) == doctest::Approx(0.07).epsilon(1e-12));
    ProblemCase odd = smooth_case();
    odd.name = "mystery";
    CHECK_THROWS_AS(calibrated_h_star(odd), std::invalid_argument);
}

TEST_CASE("solution scale matches closed forms") {
    // sin(pi x) cos(pi y): integral of u^2 is 1/4, of |grad u|^2 is pi^2/2.
    const double smooth_expected = std::sqrt(0.25 + M_PI * M_PI / 2.0);
    CHECK(solution_h1_scale(smooth_case()) == doctest::Approx(smooth_expected).epsilon(1e-10));
    // x + y: integral of u^2 is 7/6, of |grad u|^2 is 2.
    CHECK(solution_h1_scale(polynomial_patch_case(1)) ==
          doctest::Approx(std::sqrt(19.0 / 6.0)).epsilon(1e-12));
}

TEST_CASE("solution scale agrees with the product-structure oracle") {
    // For u = f(x) f(y): ||u||_{H1}^2 = I0^2 + 2 I0 I1 with I0 the integral
    // of f^2 and I1 of f'^2; integrate in 1D instead of the module's 2D rule.
    const double a = 500.0;
    auto f = [a](double t) { return 1.0 / (1.0 + a * t * t); };
    auto df = [a](double t) {
        const double d = 1.0 + a * t * t;
        return -2.0 * a * t / (d * d);
    };
    const double i0 = simpson_1d([&](double t) { return f(t) * f(t); }, 20000);
    const double i1 = simpson_1d([&](double t) { return df(t) * df(t); }, 20000);
    const double expected = std::sqrt(i0 * i0 + 2.0 * i0 * i1);
    CHECK(solution_h1_scale(runge_case(a)) == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("bound model draws stay in band and scale with degree") {
    const double h_star = 0.12, scale = 1.3, band = 0.25;
    const TrialFn trial = bound_model_trials(h_star, scale, band);
    CampaignConfig cfg = model_config(runge_case(500.0), {0.06, 0.12, 0.18}, 1);
    for (int hi = 0; hi < 3; ++hi) {
        const TrialOutcome out = trial(cfg, hi, 0);
        REQUIRE(out.ok);
        const double h = cfg.h_grid[hi];
        const double top_k = scale * std::pow(h / h_star, cfg.k);
        const double top_m = scale * std::pow(h / h_star, cfg.m);
        CHECK(out.sample_k.error <= top_k);
        CHECK(out.sample_k.error >= (1.0 - band) * top_k);
        CHECK(out.sample_m.error <= top_m);
        CHECK(out.sample_m.error >= (1.0 - band) * top_m);
    }
    // Identical keys reproduce draws; different trials differ.
    const TrialOutcome a = trial(cfg, 1, 3);
    const TrialOutcome b = trial(cfg, 1, 3);
    CHECK(a.sample_k.error == b.sample_k.error);
    CHECK(a.sample_m.error == b.sample_m.error);
    CHECK(trial(cfg, 1, 4).sample_k.error != a.sample_k.error);
}

TEST_CASE("bound model recovers its critical size through the campaign") {
    const double h_star = 0.12;
    const TrialFn trial = bound_model_trials(h_star, 2.0);
    CampaignConfig cfg = model_config(
        runge_case(500.0), {0.06, 0.08, 0.09, 0.11, 0.12, 0.13, 0.15, 0.18}, 400);
    const FrequencyTable table = run_campaign_with(cfg, trial);
    // MLE pools max error / h^p; band draws cluster at their bound, so the
    // coefficient ratio reproduces h_star almost exactly.
    CHECK(table.h_star_estimate == doctest::Approx(h_star).epsilon(0.01));
    // Sharp two-steps shape: certain win below (1 - band) h*, certain loss
    // beyond h* / (1 - band), half-half at the crossing.
    CHECK(table.rows[0].frequency == 1.0);   // h = 0.06
    CHECK(table.rows[1].frequency == 1.0);   // h = 0.08 < 0.09 = 0.75 h*
    CHECK(table.rows[7].frequency == 0.0);   // h = 0.18 > 0.16 = h* / 0.75
    CHECK(table.rows[4].frequency == doctest::Approx(0.5).epsilon(0.15));  // h = h*
    // Monotone through the transition.
    for (std::size_t i = 1; i < table.rows.size(); ++i)
        CHECK(table.rows[i].frequency <= table.rows[i - 1].frequency + 1e-12);
    // Serial evaluation produces the same table.
    const FrequencyTable serial = run_campaign_with_serial(cfg, trial);
    CHECK(serial.h_star_estimate == table.h_star_estimate);
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        CHECK(serial.rows[i].frequency == table.rows[i].frequency);
}

TEST_CASE("degenerate critical size ties every trial") {
    const TrialFn trial = bound_model_trials(0.0, 1.0);
    CampaignConfig cfg = model_config(polynomial_patch_case(2), {0.1, 0.2}, 1);
    std::vector<ErrorPair> pairs;
    for (int hi = 0; hi < 2; ++hi)
        for (int ti = 0; ti < 25; ++ti) {
            const TrialOutcome out = trial(cfg, hi, ti);
            REQUIRE(out.ok);
            CHECK(out.sample_k.error == 0.0);
            CHECK(out.sample_m.error == 0.0);
            pairs.push_back({out.sample_m.error, out.sample_k.error});
        }
    CHECK(empirical_frequency(pairs) == 1.0);  // exact ties count for the higher degree
}

TEST_CASE("bound model rejects bad parameters") {
    CHECK_THROWS_AS(bound_model_trials(0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(bound_model_trials(0.1, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(bound_model_trials(0.1, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(bound_model_trials(0.1, 1.0, 1.0), std::invalid_argument);
}

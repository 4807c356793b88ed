#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pkpm/accuracy_laws.hpp"
#include "pkpm/fem.hpp"
#include "pkpm/problems.hpp"

namespace pkpm {

/// Everything one Monte-Carlo campaign needs: the manufactured problem, the
/// competing degree pair k < m, the mesh-size grid, and the randomization
/// and solver knobs.
struct CampaignConfig {
    ProblemCase problem;
    int k = 2;
    int m = 3;
    std::vector<double> h_grid;  ///< strictly increasing, all positive
    int trials = 500;            ///< meshes per degree per grid point
    std::uint64_t master_seed = 0;
    double jitter = 0.15;
    double min_angle_deg = 20.0;
    int quad_degree = 0;      ///< assembly override; 0 = per-degree default
    double solver_tol = 1e-12;
    ErrorNorm norm = ErrorNorm::h1;
    bool keep_samples = false;  ///< retain raw samples in the result table
};

/// Result of one trial: errors of both degrees on two independent meshes.
struct TrialOutcome {
    ErrorSample sample_k, sample_m;
    bool ok = false;
};

struct FrequencyRow {
    double h = 0.0;
    int n_effective = 0;
    int n_failed = 0;
    double frequency = 0.0;
    double two_steps = 0.0;
    double sigmoid = 0.0;
};

struct FrequencyTable {
    std::vector<FrequencyRow> rows;  ///< one per h_grid entry
    double h_star_estimate = 0.0;
    BoundCoefficient coef_k, coef_m;
    std::vector<ErrorSample> samples;  ///< filled only when keep_samples
};

/// Pluggable trial evaluator, so the statistics pipeline can be driven by
/// synthetic error models as well as the FEM solver.
using TrialFn = std::function<TrialOutcome(const CampaignConfig&, int h_index, int trial_index)>;

/// One FEM trial: two meshes with independent derived seeds, the lower
/// degree solved on one and the higher on the other. Mesh-quality and solver
/// failures are reported via ok = false; other exceptions propagate.
TrialOutcome run_trial(const CampaignConfig& config, int h_index, int trial_index);

/// Synthetic trial drawing errors from the uniform model
/// error = U * coef * h^degree with U uniform on [0, 1); exercises the
/// statistics pipeline without FEM.
TrialOutcome uniform_model_trial(const CampaignConfig& config, int h_index, int trial_index,
                                 double coef_k, double coef_m);

/// Full campaign: trials for every grid point, frequencies per row, bound
/// coefficients pooled over all successful samples, laws tabulated at the
/// estimated critical mesh size. Deterministic for a given config,
/// independent of worker count. Throws CampaignError when a row loses too
/// many trials.
FrequencyTable run_campaign(const CampaignConfig& config);

/// Serial reference of run_campaign (no worker pool); must produce an
/// identical table.
FrequencyTable run_campaign_serial(const CampaignConfig& config);

/// As run_campaign / run_campaign_serial but with a custom trial evaluator.
FrequencyTable run_campaign_with(const CampaignConfig& config, const TrialFn& trial);
FrequencyTable run_campaign_with_serial(const CampaignConfig& config, const TrialFn& trial);

struct ConvergenceRow {
    double h = 0.0;        ///< requested mesh size
    double h_actual = 0.0;  ///< realized mesh size used for the fit
    double error = 0.0;
};

struct ConvergenceResult {
    std::vector<ConvergenceRow> rows;
    double slope = 0.0;       ///< least-squares slope of log error vs log h_actual
    bool slope_valid = false; ///< false when errors are at solver-noise level
};

/// Structured-mesh (jitter = 0) refinement study for one degree.
ConvergenceResult convergence_study(const ProblemCase& pc, int degree,
                                    const std::vector<double>& h_list, std::uint64_t seed);

}  // namespace pkpm

#include "pkpm/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>

#include "pkpm/errors.hpp"
#include "pkpm/fmt.hpp"
#include "pkpm/meshgen.hpp"
#include "pkpm/rng.hpp"

namespace pkpm {

namespace {

void validate_config(const CampaignConfig& cfg) {
    if (cfg.k < 1 || cfg.m > 4 || cfg.k >= cfg.m)
        throw std::invalid_argument("campaign: degrees must satisfy 1 <= k < m <= 4");
    if (cfg.h_grid.empty()) throw std::invalid_argument("campaign: empty h grid");
    for (std::size_t i = 0; i < cfg.h_grid.size(); ++i) {
        if (!(cfg.h_grid[i] > 0.0)) throw std::invalid_argument("campaign: h must be positive");
        if (i > 0 && !(cfg.h_grid[i] > cfg.h_grid[i - 1]))
            throw std::invalid_argument("campaign: h grid must be strictly increasing");
    }
    if (cfg.trials < 1) throw std::invalid_argument("campaign: trials must be >= 1");
    if (!(cfg.solver_tol > 0.0)) throw std::invalid_argument("campaign: solver tolerance must be positive");
    if (!cfg.problem.u || !cfg.problem.grad_u || !cfg.problem.q || !cfg.problem.g)
        throw std::invalid_argument("campaign: problem case has missing evaluators");
}

std::uint64_t slot_seed(const CampaignConfig& cfg, int h_index, int trial_index, int slot) {
    return hash_key({cfg.master_seed, static_cast<std::uint64_t>(h_index),
                     static_cast<std::uint64_t>(trial_index), static_cast<std::uint64_t>(slot)});
}

// Deterministic reduction over the trial grid: every aggregate is keyed by
// (h_index, trial_index), never by completion order.
FrequencyTable reduce_outcomes(const CampaignConfig& cfg, const std::vector<TrialOutcome>& out) {
    const int nh = static_cast<int>(cfg.h_grid.size());
    const int N = cfg.trials;
    FrequencyTable table;
    table.rows.resize(nh);

    std::vector<ErrorSample> samples_k, samples_m;
    samples_k.reserve(out.size());
    samples_m.reserve(out.size());
    const int quorum = std::max(std::min(N, 2), (N + 1) / 2);

    for (int hi = 0; hi < nh; ++hi) {
        std::vector<ErrorPair> pairs;
        pairs.reserve(N);
        for (int ti = 0; ti < N; ++ti) {
            const TrialOutcome& o = out[static_cast<std::size_t>(hi) * N + ti];
            if (!o.ok) continue;
            pairs.push_back({o.sample_m.error, o.sample_k.error});
            samples_k.push_back(o.sample_k);
            samples_m.push_back(o.sample_m);
        }
        FrequencyRow& row = table.rows[hi];
        row.h = cfg.h_grid[hi];
        row.n_effective = static_cast<int>(pairs.size());
        row.n_failed = N - row.n_effective;
        if (row.n_effective < quorum)
            throw CampaignError("campaign: only " + std::to_string(row.n_effective) + " of " +
                                std::to_string(N) + " trials usable at h = " + fmt_g17(row.h));
        row.frequency = empirical_frequency(pairs);
    }

    table.coef_k = estimate_coefficient(samples_k, cfg.k);
    table.coef_m = estimate_coefficient(samples_m, cfg.m);
    table.h_star_estimate = estimate_h_star(table.coef_k, table.coef_m);
    for (FrequencyRow& row : table.rows) {
        row.two_steps = two_steps_law(row.h, table.h_star_estimate);
        row.sigmoid = sigmoid_law(row.h, table.h_star_estimate, cfg.k, cfg.m);
    }

    if (cfg.keep_samples) {
        table.samples.reserve(samples_k.size() * 2);
        for (std::size_t i = 0; i < samples_k.size(); ++i) {
            table.samples.push_back(samples_k[i]);
            table.samples.push_back(samples_m[i]);
        }
    }
    return table;
}

}  // namespace

TrialOutcome run_trial(const CampaignConfig& config, int h_index, int trial_index) {
    const double h = config.h_grid.at(h_index);
    TrialOutcome out;
    try {
        for (int slot = 0; slot < 2; ++slot) {
            const int degree = slot == 0 ? config.k : config.m;
            MeshParams mp;
            mp.h_max = h;
            mp.seed = slot_seed(config, h_index, trial_index, slot);
            mp.jitter = config.jitter;
            mp.min_angle_deg = config.min_angle_deg;
            const Mesh mesh = generate_mesh(mp);
            SolveOptions opts;
            opts.tol = config.solver_tol;
            opts.quad_degree = config.quad_degree;
            const FemSolution sol = solve_poisson(mesh, degree, config.problem, opts);
            ErrorSample sample;
            sample.h = h;
            sample.seed = mp.seed;
            sample.degree = degree;
            sample.error = h1_error(sol, config.problem, config.norm);
            (slot == 0 ? out.sample_k : out.sample_m) = sample;
        }
        out.ok = true;
    } catch (const MeshQualityError&) {
        out.ok = false;  // trial lost, counted by the caller
    } catch (const SolveError&) {
        out.ok = false;
    }
    return out;
}

TrialOutcome uniform_model_trial(const CampaignConfig& config, int h_index, int trial_index,
                                 double coef_k, double coef_m) {
    const double h = config.h_grid.at(h_index);
    TrialOutcome out;
    for (int slot = 0; slot < 2; ++slot) {
        const int degree = slot == 0 ? config.k : config.m;
        const double coef = slot == 0 ? coef_k : coef_m;
        ErrorSample sample;
        sample.h = h;
        sample.seed = slot_seed(config, h_index, trial_index, slot);
        sample.degree = degree;
        sample.error = uniform01(sample.seed) * coef * std::pow(h, degree);
        (slot == 0 ? out.sample_k : out.sample_m) = sample;
    }
    out.ok = true;
    return out;
}

FrequencyTable run_campaign_with(const CampaignConfig& config, const TrialFn& trial) {
    validate_config(config);
    const long nh = static_cast<long>(config.h_grid.size());
    const long N = config.trials;
    const long total = nh * N;
    std::vector<TrialOutcome> out(total);

    // Trials are independent; any completion order must yield the same table,
    // so each result lands in its own slot and the reduction stays serial.
    std::exception_ptr first_error = nullptr;
    std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long idx = 0; idx < total; ++idx) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            out[idx] = trial(config, static_cast<int>(idx / N), static_cast<int>(idx % N));
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(pkpm_campaign_error)
#endif
            {
                if (!first_error) first_error = std::current_exception();
            }
            failed.store(true, std::memory_order_relaxed);
        }
    }
    if (first_error) std::rethrow_exception(first_error);
    return reduce_outcomes(config, out);
}

FrequencyTable run_campaign_with_serial(const CampaignConfig& config, const TrialFn& trial) {
    validate_config(config);
    const long nh = static_cast<long>(config.h_grid.size());
    const long N = config.trials;
    std::vector<TrialOutcome> out(nh * N);
    for (long idx = 0; idx < nh * N; ++idx)
        out[idx] = trial(config, static_cast<int>(idx / N), static_cast<int>(idx % N));
    return reduce_outcomes(config, out);
}

FrequencyTable run_campaign(const CampaignConfig& config) {
    return run_campaign_with(config, run_trial);
}

FrequencyTable run_campaign_serial(const CampaignConfig& config) {
    return run_campaign_with_serial(config, run_trial);
}

ConvergenceResult convergence_study(const ProblemCase& pc, int degree,
                                    const std::vector<double>& h_list, std::uint64_t seed) {
    if (h_list.size() < 3)
        throw std::invalid_argument("convergence_study: need at least 3 mesh sizes");
    for (std::size_t i = 0; i < h_list.size(); ++i) {
        if (!(h_list[i] > 0.0)) throw std::invalid_argument("convergence_study: h must be positive");
        if (i > 0 && !(h_list[i] < h_list[i - 1]))
            throw std::invalid_argument("convergence_study: h list must be strictly decreasing");
    }

    ConvergenceResult result;
    for (double h : h_list) {
        MeshParams mp;
        mp.h_max = h;
        mp.seed = seed;
        mp.jitter = 0.0;
        const Mesh mesh = generate_mesh(mp);
        const FemSolution sol = solve_poisson(mesh, degree, pc);
        result.rows.push_back({h, mesh.h_actual, h1_error(sol, pc)});
    }

    double max_err = 0.0;
    for (const auto& r : result.rows) max_err = std::max(max_err, r.error);
    if (max_err <= 1e-9) return result;  // at solver-noise level, no meaningful rate

    // Least squares on log-log; the realized mesh size drives the error, so
    // the fit uses h_actual rather than the requested h.
    double sx = 0.0, sy = 0.0;
    const double n = static_cast<double>(result.rows.size());
    for (const auto& r : result.rows) {
        sx += std::log(r.h_actual);
        sy += std::log(r.error);
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& r : result.rows) {
        const double dx = std::log(r.h_actual) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(r.error) - my);
    }
    result.slope = sxy / sxx;
    result.slope_valid = true;
    return result;
}

}  // namespace pkpm

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "pkpm/csv.hpp"
#include "pkpm/experiment.hpp"
#include "pkpm/problems.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string table_csv(const pkpm::FrequencyTable& table) {
    std::ostringstream os;
    pkpm::write_frequency_csv(os, table);
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    int trials = 40;
    int k = 2, m = 3;
    std::string case_name = "smooth";
    double alpha = 25.0;
    std::uint64_t seed = 1;

    CLI::App app{"Time the parallel campaign runner against the serial reference "
                 "and verify they produce identical tables"};
    app.add_option("--case", case_name)->check(CLI::IsMember({"runge", "smooth"}));
    app.add_option("--alpha", alpha);
    app.add_option("--k", k)->check(CLI::Range(1, 4));
    app.add_option("--m", m)->check(CLI::Range(1, 4));
    app.add_option("--trials", trials);
    app.add_option("--seed", seed);
    CLI11_PARSE(app, argc, argv);

    pkpm::CampaignConfig cfg;
    cfg.problem = case_name == "runge" ? pkpm::runge_case(alpha) : pkpm::smooth_case();
    cfg.k = k;
    cfg.m = m;
    cfg.h_grid = {0.1, 0.125, 0.15, 0.175, 0.2};
    cfg.trials = trials;
    cfg.master_seed = seed;

    auto t0 = std::chrono::steady_clock::now();
    const pkpm::FrequencyTable serial = pkpm::run_campaign_serial(cfg);
    const double t_serial = seconds_since(t0);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    t0 = std::chrono::steady_clock::now();
    const pkpm::FrequencyTable parallel = pkpm::run_campaign(cfg);
    const double t_parallel = seconds_since(t0);

    const bool identical = table_csv(serial) == table_csv(parallel);
    std::cout << "case=" << case_name << " k=" << k << " m=" << m << " trials=" << trials
              << " grid_points=" << cfg.h_grid.size() << "\n";
    std::cout << "serial_seconds=" << t_serial << "\n";
    std::cout << "parallel_threads=" << threads << "\n";
    std::cout << "parallel_seconds=" << t_parallel << "\n";
    std::cout << "speedup=" << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "\n";
    std::cout << "identical_output=" << (identical ? "yes" : "no") << "\n";
    return identical ? 0 : 1;
}

#include "pkpm/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "pkpm/csv.hpp"
#include "pkpm/errors.hpp"
#include "pkpm/experiment.hpp"
#include "pkpm/fmt.hpp"
#include "pkpm/meshgen.hpp"
#include "pkpm/problems.hpp"
#include "pkpm/svg_plot.hpp"

namespace fs = std::filesystem;

namespace pkpm {

namespace {

ProblemCase make_case(const std::string& name, double alpha) {
    if (name == "runge") return runge_case(alpha);
    if (name == "smooth") return smooth_case();
    if (name == "patch") return polynomial_patch_case(1);
    throw std::invalid_argument("unknown case '" + name + "'");
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + i * (hi - lo) / (n - 1);
    return v;
}

LawChoice law_choice(const std::string& s) {
    if (s == "two-steps") return LawChoice::two_steps;
    if (s == "sigmoid") return LawChoice::sigmoid;
    return LawChoice::both;
}

// Writes go through a journal so a failure removes everything already
// written instead of leaving partial outputs behind.
struct OutputJournal {
    std::vector<fs::path> written;
    void write(const fs::path& path, const std::string& content) {
        std::ofstream os(path, std::ios::binary);
        os << content;
        if (!os.good()) throw std::runtime_error("cannot write " + path.string());
        written.push_back(path);
    }
    void discard_all() {
        for (const auto& p : written) {
            std::error_code ec;
            fs::remove(p, ec);
        }
    }
};

struct CampaignCli {
    std::string case_name = "runge";
    double alpha = 500.0;
    int k = 2, m = 3;
    std::vector<double> h_list;
    double h_min = 0.0, h_max = 0.0;
    int h_steps = 0;
    int trials = 500;
    std::uint64_t seed = 0;
    double jitter = 0.15;
    double min_angle = 20.0;
    int quad_degree = 0;
    double tol = 1e-12;
    std::string law = "both";
    std::string out;
    bool emit_samples = false;
    bool emit_svg = false;
};

std::vector<double> resolve_grid(const CampaignCli& c, bool range_given) {
    if (!c.h_list.empty()) return c.h_list;
    if (range_given) {
        if (!(c.h_min > 0.0) || !(c.h_max > c.h_min) || c.h_steps < 2)
            throw std::invalid_argument(
                "mesh-size range needs 0 < --h-min < --h-max and --h-steps >= 2");
        return linspace(c.h_min, c.h_max, c.h_steps);
    }
    // presets bracket the critical mesh size of each case family
    if (c.case_name == "runge") return linspace(0.05, 0.18, 14);
    return linspace(0.06, 0.30, 13);
}

int cmd_campaign(const CampaignCli& c, bool range_given) {
    CampaignConfig cfg;
    cfg.problem = make_case(c.case_name, c.alpha);
    cfg.k = c.k;
    cfg.m = c.m;
    cfg.h_grid = resolve_grid(c, range_given);
    cfg.trials = c.trials;
    cfg.master_seed = c.seed;
    cfg.jitter = c.jitter;
    cfg.min_angle_deg = c.min_angle;
    cfg.quad_degree = c.quad_degree;
    cfg.solver_tol = c.tol;
    cfg.keep_samples = c.emit_samples;

    const FrequencyTable table = run_campaign(cfg);

    const fs::path dir(c.out);
    fs::create_directories(dir);
    OutputJournal journal;
    try {
        std::ostringstream freq;
        write_frequency_csv(freq, table);
        journal.write(dir / "frequencies.csv", freq.str());
        if (c.emit_samples) {
            std::ostringstream samples;
            write_samples_csv(samples, table.samples);
            journal.write(dir / "samples.csv", samples.str());
        }
        if (c.emit_svg) {
            std::ostringstream svg;
            std::string title = c.case_name;
            if (c.case_name == "runge") title += " alpha=" + fmt_g17(c.alpha);
            title += ", P" + std::to_string(c.k) + " vs P" + std::to_string(c.m) + ", N=" +
                     std::to_string(c.trials) + ", seed=" + std::to_string(c.seed);
            write_comparison_svg(svg, table, law_choice(c.law), title);
            journal.write(dir / "comparison.svg", svg.str());
        }
    } catch (...) {
        journal.discard_all();
        throw;
    }

    std::cout << "coef_estimate_k=" << fmt_g17(table.coef_k.value) << "\n";
    std::cout << "coef_estimate_m=" << fmt_g17(table.coef_m.value) << "\n";
    std::cout << "h_star_estimate=" << fmt_g17(table.h_star_estimate) << "\n";
    return 0;
}

struct ConvergenceCli {
    std::string case_name = "smooth";
    double alpha = 500.0;
    int k = 2;
    std::vector<double> h_list = {0.2, 0.1, 0.05};
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_convergence(const ConvergenceCli& c) {
    const ProblemCase pc = make_case(c.case_name, c.alpha);
    const ConvergenceResult result = convergence_study(pc, c.k, c.h_list, c.seed);

    std::ostringstream csv;
    write_convergence_csv(csv, result);
    if (c.out.empty()) {
        std::cout << csv.str();
    } else {
        const fs::path dir(c.out);
        fs::create_directories(dir);
        OutputJournal journal;
        journal.write(dir / "convergence.csv", csv.str());
    }
    std::cout << "slope=" << (result.slope_valid ? fmt_g17(result.slope) : std::string("n/a"))
              << "\n";
    return 0;
}

struct LawsCli {
    double h_star = 0.0;
    int k = 0, m = 0;
    std::vector<double> h_list;
    std::string out;
};

int cmd_laws(const LawsCli& c) {
    std::ostringstream csv;
    write_laws_csv(csv, c.h_list, c.h_star, c.k, c.m);  // validates numerics
    if (c.out.empty()) {
        std::cout << csv.str();
    } else {
        const fs::path dir(c.out);
        fs::create_directories(dir);
        OutputJournal journal;
        journal.write(dir / "laws.csv", csv.str());
    }
    return 0;
}

struct MeshDumpCli {
    double h_max = 0.1;
    std::uint64_t seed = 0;
    double jitter = 0.0;
    double min_angle = 20.0;
    std::string out;
};

int cmd_mesh_dump(const MeshDumpCli& c) {
    MeshParams params;
    params.h_max = c.h_max;
    params.seed = c.seed;
    params.jitter = c.jitter;
    params.min_angle_deg = c.min_angle;
    const Mesh mesh = generate_mesh(params);

    std::ostringstream dump;
    write_mesh_dump(dump, mesh);
    if (c.out.empty()) {
        std::cout << dump.str();
    } else {
        const fs::path dir(c.out);
        fs::create_directories(dir);
        OutputJournal journal;
        journal.write(dir / "mesh.txt", dump.str());
    }
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Monte-Carlo laboratory comparing the accuracy of Lagrange P_k vs P_m "
                 "finite elements on randomized meshes"};
    app.require_subcommand(1);

    const auto case_values = CLI::IsMember({"runge", "smooth", "patch"});
    const auto law_values = CLI::IsMember({"two-steps", "sigmoid", "both"});

    CampaignCli camp;
    CLI::App* campaign = app.add_subcommand(
        "campaign", "Run a randomized-mesh campaign and tabulate frequencies vs the laws");
    campaign->add_option("--case", camp.case_name, "Problem family")->check(case_values);
    campaign->add_option("--alpha", camp.alpha, "Runge sharpness parameter");
    campaign->add_option("--k", camp.k, "Lower competing degree")->check(CLI::Range(1, 4));
    campaign->add_option("--m", camp.m, "Higher competing degree")->check(CLI::Range(1, 4));
    auto* camp_list = campaign->add_option("--h-list", camp.h_list,
                                           "Explicit comma-separated mesh sizes")
                          ->delimiter(',');
    auto* camp_min = campaign->add_option("--h-min", camp.h_min, "Smallest mesh size");
    auto* camp_max = campaign->add_option("--h-max", camp.h_max, "Largest mesh size");
    auto* camp_steps = campaign->add_option("--h-steps", camp.h_steps, "Grid point count");
    camp_list->excludes(camp_min)->excludes(camp_max)->excludes(camp_steps);
    campaign->add_option("--trials", camp.trials, "Mesh pairs per grid point");
    campaign->add_option("--seed", camp.seed, "Master seed");
    campaign->add_option("--jitter", camp.jitter, "Mesh perturbation fraction");
    campaign->add_option("--min-angle", camp.min_angle, "Mesh quality floor in degrees");
    campaign->add_option("--quad-degree", camp.quad_degree, "Assembly quadrature override");
    campaign->add_option("--tol", camp.tol, "Linear solver tolerance");
    campaign->add_option("--law", camp.law, "Law curves drawn in the figure")->check(law_values);
    campaign->add_option("--out", camp.out, "Output directory")->required();
    campaign->add_flag("--emit-samples", camp.emit_samples, "Also write raw samples.csv");
    campaign->add_flag("--emit-svg", camp.emit_svg, "Also write comparison.svg");

    ConvergenceCli conv;
    CLI::App* convergence = app.add_subcommand(
        "convergence", "Structured-mesh refinement study with fitted convergence rate");
    convergence->add_option("--case", conv.case_name, "Problem family")->check(case_values);
    convergence->add_option("--alpha", conv.alpha, "Runge sharpness parameter");
    convergence->add_option("--k", conv.k, "Element degree")->check(CLI::Range(1, 4));
    convergence->add_option("--h-list", conv.h_list, "Decreasing comma-separated mesh sizes")
        ->delimiter(',');
    convergence->add_option("--seed", conv.seed, "Mesh seed");
    convergence->add_option("--out", conv.out, "Output directory (stdout when omitted)");

    LawsCli laws;
    CLI::App* laws_cmd =
        app.add_subcommand("laws", "Tabulate the two-steps and sigmoid laws at given mesh sizes");
    laws_cmd->add_option("--h-star", laws.h_star, "Critical mesh size")->required();
    laws_cmd->add_option("--k", laws.k, "Lower competing degree")
        ->check(CLI::Range(1, 4))
        ->required();
    laws_cmd->add_option("--m", laws.m, "Higher competing degree")
        ->check(CLI::Range(1, 4))
        ->required();
    laws_cmd->add_option("--h-list", laws.h_list, "Comma-separated mesh sizes")
        ->delimiter(',')
        ->required();
    laws_cmd->add_option("--out", laws.out, "Output directory (stdout when omitted)");

    MeshDumpCli dump;
    CLI::App* mesh_dump =
        app.add_subcommand("mesh-dump", "Generate one mesh and write its plain-text dump");
    mesh_dump->add_option("--h-max", dump.h_max, "Target maximum element diameter");
    mesh_dump->add_option("--seed", dump.seed, "Mesh seed");
    mesh_dump->add_option("--jitter", dump.jitter, "Mesh perturbation fraction");
    mesh_dump->add_option("--min-angle", dump.min_angle, "Mesh quality floor in degrees");
    mesh_dump->add_option("--out", dump.out, "Output directory (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (campaign->parsed())
            return cmd_campaign(camp, camp_min->count() || camp_max->count() ||
                                          camp_steps->count());
        if (convergence->parsed()) return cmd_convergence(conv);
        if (laws_cmd->parsed()) return cmd_laws(laws);
        if (mesh_dump->parsed()) return cmd_mesh_dump(dump);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cli_main(const std::vector<std::string>& args) {
    std::vector<std::string> full = {"pkpm"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const auto& s : full) argv.push_back(s.c_str());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace pkpm

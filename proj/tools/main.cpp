#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "imag/io.hpp"
#include "imag/measures.hpp"
#include "imag/sweep.hpp"
#include "imag/verify.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

constexpr int kExitOk = 0;
constexpr int kExitAuditFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitValidationError = 3;

std::uint64_t default_seed_from_env() {
    if (const char* env = std::getenv("IMAG_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw imag::ParseFailed("IMAG_SEED is not an unsigned integer");
        }
    }
    return kDefaultSeed;
}

void print_measure_line(const std::string& name, const std::optional<double>& mu, double value) {
    std::cout << "{\"measure\": \"" << name << "\", \"mu\": "
              << (mu ? imag::format_double(*mu) : std::string("null"))
              << ", \"value\": " << imag::format_double(value) << "}\n";
}

int cmd_measure(const std::string& path, const std::string& which, double mu) {
    imag::DensityMatrix rho = imag::load_state_json_file(path);
    const bool all = which == "all";
    if (all || which == "tsallis") {
        print_measure_line("tsallis", mu, imag::m_tsallis(rho, mu).value);
    }
    if (all || which == "trace") {
        print_measure_line("trace", std::nullopt, imag::m_trace(rho).value);
    }
    if (all || which == "relent") {
        print_measure_line("relent", std::nullopt, imag::m_rel_entropy(rho).value);
    }
    if (all || which == "fidelity") {
        print_measure_line("fidelity", std::nullopt, imag::m_fidelity(rho).value);
    }
    return kExitOk;
}

int cmd_gaussian(const std::string& path, double mu) {
    imag::GaussianState g = imag::load_gaussian_json_file(path);
    imag::WilliamsonForm w = imag::williamson(g.cov());
    const double value = imag::m_tsallis_gaussian(g, mu).value;
    std::cout << "{\"measure\": \"tsallis_gaussian\", \"mu\": " << imag::format_double(mu)
              << ", \"value\": " << imag::format_double(value) << ", \"nu\": [";
    for (Eigen::Index l = 0; l < w.nu.size(); ++l) {
        if (l) std::cout << ", ";
        std::cout << imag::format_double(w.nu[l]);
    }
    std::cout << "]}\n";
    return kExitOk;
}

const imag::GridAxis* find_axis(const std::vector<imag::GridAxis>& axes, const std::string& name) {
    for (const imag::GridAxis& a : axes) {
        if (a.name == name) return &a;
    }
    return nullptr;
}

int cmd_sweep(const std::string& grid, const std::string& gaussian_grid,
              const imag::OneModeParams& base, double mu, const std::string& out_path) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw imag::ParseFailed("cannot open output file: " + out_path);
        out = &file;
    }
    if (!gaussian_grid.empty()) {
        imag::gaussian_sweep_csv(imag::parse_grid(gaussian_grid), base, mu, *out);
        return kExitOk;
    }
    std::vector<imag::GridAxis> axes = imag::parse_grid(grid);
    const imag::GridAxis* y_axis = find_axis(axes, "y");
    const imag::GridAxis* mu_axis = find_axis(axes, "mu");
    if (axes.size() != 2 || !y_axis || !mu_axis) {
        throw imag::ParseFailed("qubit sweep needs exactly the axes y:lo:hi:n,mu:lo:hi:m");
    }
    imag::qubit_sweep_csv(*y_axis, *mu_axis, *out);
    return kExitOk;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed) {
    std::vector<imag::AuditReport> reports;
    const auto append = [&reports](std::vector<imag::AuditReport> more) {
        for (imag::AuditReport& r : more) reports.push_back(std::move(r));
    };
    if (suite == "axioms" || suite == "all") append(imag::run_axioms_suite(trials, seed));
    if (suite == "gaussian" || suite == "all") append(imag::run_gaussian_suite(trials, seed));
    if (suite == "oracle" || suite == "all") append(imag::run_oracle_suite(seed));
    std::cout << imag::reports_to_json(reports);
    return imag::all_passed(reports) ? kExitOk : kExitAuditFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"imaginarity measures for density matrices and Gaussian states"};
    app.require_subcommand(1);

    std::string state_path;
    std::string measure_name = "all";
    double measure_mu = 0.5;
    CLI::App* measure = app.add_subcommand("measure", "compute measures of a state file");
    measure->add_option("state", state_path, "state JSON file")->required();
    measure->add_option("--measure", measure_name, "tsallis|trace|relent|fidelity|all")
        ->check(CLI::IsMember({"tsallis", "trace", "relent", "fidelity", "all"}));
    measure->add_option("--mu", measure_mu, "Tsallis parameter in (0,1)");

    std::string gaussian_path;
    double gaussian_mu = 0.5;
    CLI::App* gaussian = app.add_subcommand("gaussian", "Tsallis measure of a Gaussian state file");
    gaussian->add_option("state", gaussian_path, "Gaussian JSON file")->required();
    gaussian->add_option("--mu", gaussian_mu, "Tsallis parameter in (0,1)");

    std::string grid = "y:0:1:101,mu:0.01:0.99:99";
    std::string gaussian_grid;
    std::string out_path;
    double sweep_mu = 0.5;
    imag::OneModeParams base;
    double base_x2 = 0.0;
    CLI::App* sweep = app.add_subcommand("sweep", "emit a CSV parameter sweep");
    sweep->add_option("--grid", grid, "qubit grid, e.g. y:0:1:101,mu:0.01:0.99:99");
    sweep->add_option("--gaussian-grid", gaussian_grid,
                      "one-mode axes over x2|nu|zeta|theta, e.g. x2:0:3:31,nu:1:3:5");
    sweep->add_option("--mu", sweep_mu, "measure parameter for gaussian sweeps");
    sweep->add_option("--nu", base.nu, "fixed nu for gaussian sweeps");
    sweep->add_option("--zeta", base.zeta_abs, "fixed |zeta| for gaussian sweeps");
    sweep->add_option("--theta", base.theta, "fixed theta for gaussian sweeps");
    sweep->add_option("--x2", base_x2, "fixed mean X2 for gaussian sweeps");
    sweep->add_option("--out", out_path, "output file (default stdout)");

    std::string suite = "all";
    int trials = 200;
    std::uint64_t seed = 0;
    CLI::App* verify = app.add_subcommand("verify", "run randomized property audits");
    verify->add_option("--suite", suite, "axioms|gaussian|oracle|all")
        ->check(CLI::IsMember({"axioms", "gaussian", "oracle", "all"}));
    verify->add_option("--trials", trials, "trials per check")->check(CLI::PositiveNumber);
    CLI::Option* seed_opt = verify->add_option("--seed", seed, "audit seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParseError;
    }

    try {
        if (measure->parsed()) return cmd_measure(state_path, measure_name, measure_mu);
        if (gaussian->parsed()) return cmd_gaussian(gaussian_path, gaussian_mu);
        if (sweep->parsed()) {
            base.alpha = std::complex<double>(0.0, base_x2 / 2.0);
            return cmd_sweep(grid, gaussian_grid, base, sweep_mu, out_path);
        }
        if (verify->parsed()) {
            if (!*seed_opt) seed = default_seed_from_env();
            return cmd_verify(suite, trials, seed);
        }
    } catch (const imag::ParseFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const imag::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidationError;
    }
    return kExitOk;
}

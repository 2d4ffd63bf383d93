#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blasius/report.hpp"
#include "blasius/shooting.hpp"
#include "blasius/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_domain_error = 2;
constexpr int exit_solver_failed = 3;

struct CaseSpec {
    double p, c, beta;
};

bool named_case(const std::string& name, CaseSpec& out) {
    if (name == "blasius") {
        out = {1.0, 0.5, 1.0};
        return true;
    }
    if (name == "p7") {
        out = {7.0, 0.5, 1.0};
        return true;
    }
    if (name == "p01") {
        out = {0.1, 0.5, 1.0};
        return true;
    }
    return false;
}

void warn_if_unproven(const blasius::Problem& prob) {
    if (!prob.proven_regime) {
        std::cerr << "warning: theory unproven for p<1 (p = " << prob.p
                  << "); results are experimental\n";
    }
}

int run_solve(double p, double c, double beta, double eps, bool as_json,
              double horizon) {
    const blasius::Problem prob = blasius::validate_problem(p, c, beta);
    warn_if_unproven(prob);

    blasius::SolveOptions opts;
    opts.horizon_override = horizon;
    const auto start = std::chrono::steady_clock::now();
    const blasius::Solution sol = blasius::solve(prob, eps, opts);
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;

    if (horizon > 0.0 && !sol.cert.valid) {
        std::cerr << "warning: requested horizon T = " << horizon
                  << " is not certified at eps = " << eps << "\n";
    }
    const blasius::RunManifest m =
        blasius::make_manifest(sol, elapsed.count());
    std::cout << (as_json ? blasius::manifest_to_json(m) + "\n"
                          : blasius::manifest_to_text(m));
    return exit_ok;
}

int run_table(double p, double c, double beta, double horizon) {
    const blasius::Problem prob = blasius::validate_problem(p, c, beta);
    warn_if_unproven(prob);
    blasius::SolveOptions opts;
    opts.horizon_override = horizon;
    const auto rows =
        blasius::tolerance_table(prob, blasius::default_eps_ladder(), opts);
    std::cout << blasius::table_csv(rows);
    return exit_ok;
}

int run_profile(double p, double c, double beta, double eps, double t_max,
                int n_samples) {
    const blasius::Problem prob = blasius::validate_problem(p, c, beta);
    warn_if_unproven(prob);
    const blasius::Solution sol = blasius::solve(prob, eps);
    std::cout << blasius::profile_csv(sol, t_max, n_samples);
    return exit_ok;
}

int run_verify(std::vector<double> p_grid, std::vector<double> c_grid,
               std::vector<double> a_grid, double eps, double corrupt_c2) {
    blasius::VerifyOptions opts;
    if (!p_grid.empty()) opts.p_grid = std::move(p_grid);
    if (!c_grid.empty()) opts.c_grid = std::move(c_grid);
    if (!a_grid.empty()) opts.a_grid = std::move(a_grid);
    opts.eps = eps;
    opts.corrupt_c2 = corrupt_c2;

    const blasius::VerifyReport rep = blasius::run_verification(opts);
    std::cout << rep.to_text();
    return rep.ok() ? exit_ok : exit_verify_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Certified shooting solver for the generalized Blasius problem\n"
        "x''' + c*x^p*x'' = 0,  x(0) = x'(0) = 0,  x'(inf) = beta"};
    app.require_subcommand(1);

    double p = 1.0, c = 0.5, beta = 1.0, eps = 1e-14;
    double t_max = 20.0, horizon = 0.0;
    int n_samples = 101;
    bool as_json = false;
    std::string case_name;
    std::vector<double> p_grid, c_grid, a_grid;
    double corrupt_c2 = 1.0;

    auto* solve_cmd =
        app.add_subcommand("solve", "solve one problem and print the run record");
    solve_cmd->add_option("--p", p, "exponent p")->capture_default_str();
    solve_cmd->add_option("--c", c, "coefficient c")->capture_default_str();
    solve_cmd->add_option("--beta", beta, "target slope")->capture_default_str();
    solve_cmd->add_option("--eps", eps, "error control tolerance")
        ->capture_default_str();
    solve_cmd->add_flag("--json", as_json, "emit the record as JSON");
    solve_cmd->add_option("--horizon", horizon,
                          "override the certified horizon T (0 = automatic)");

    auto* table_cmd = app.add_subcommand(
        "table", "tolerance ladder 1e-8..1e-14, one solve per row, CSV");
    table_cmd->add_option("--case", case_name,
                          "named case: blasius | p7 | p01");
    table_cmd->add_option("--p", p, "exponent p")->capture_default_str();
    table_cmd->add_option("--c", c, "coefficient c")->capture_default_str();
    table_cmd->add_option("--beta", beta, "target slope")
        ->capture_default_str();
    table_cmd->add_option("--horizon", horizon,
                          "override the certified horizon T (0 = automatic)");

    auto* profile_cmd = app.add_subcommand(
        "profile", "solve, then emit (t, x, dx, d2x) samples as CSV");
    profile_cmd->add_option("--p", p, "exponent p")->capture_default_str();
    profile_cmd->add_option("--c", c, "coefficient c")->capture_default_str();
    profile_cmd->add_option("--beta", beta, "target slope")
        ->capture_default_str();
    profile_cmd->add_option("--eps", eps, "error control tolerance")
        ->capture_default_str();
    profile_cmd->add_option("--t-max", t_max, "last sample time")
        ->capture_default_str();
    profile_cmd->add_option("--n-samples", n_samples, "number of samples")
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand(
        "verify", "run the numerical invariant suite over a (p, c, a) grid");
    verify_cmd->add_option("--p-grid", p_grid, "exponents to test");
    verify_cmd->add_option("--c-grid", c_grid, "coefficients to test");
    verify_cmd->add_option("--a-grid", a_grid, "curvatures to test");
    verify_cmd->add_option("--eps", eps, "error control tolerance")
        ->default_val(1e-12);
    verify_cmd->add_option("--corrupt-c2", corrupt_c2, "")->group("");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) {
            return run_solve(p, c, beta, eps, as_json, horizon);
        }
        if (table_cmd->parsed()) {
            if (!case_name.empty()) {
                CaseSpec spec{};
                if (!named_case(case_name, spec)) {
                    std::cerr << "error: unknown case '" << case_name << "'\n";
                    return exit_domain_error;
                }
                p = spec.p;
                c = spec.c;
                beta = spec.beta;
            }
            return run_table(p, c, beta, horizon);
        }
        if (profile_cmd->parsed()) {
            return run_profile(p, c, beta, eps, t_max, n_samples);
        }
        if (verify_cmd->parsed()) {
            return run_verify(std::move(p_grid), std::move(c_grid),
                              std::move(a_grid), eps, corrupt_c2);
        }
    } catch (const blasius::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain_error;
    } catch (const blasius::SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_solver_failed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_solver_failed;
    }
    return exit_ok;
}

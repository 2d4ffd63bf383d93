#pragma once

#include <string>
#include <vector>

#include "blasius/shooting.hpp"

namespace blasius {

/// Machine-readable record of one solve, serialized with 17 significant
/// digits so every double round-trips exactly.
struct RunManifest {
    double p = 0.0;
    double c = 0.0;
    double beta = 0.0;
    bool proven_regime = true;
    double eps = 0.0;
    double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0, c5 = 0.0;
    double a_min = 0.0, a_max = 0.0;
    double T = 0.0;
    double lhs2 = 0.0, lhs1 = 0.0, lhs0 = 0.0;
    bool cert_valid = false;
    double a_star = 0.0;
    double h_est = 0.0;
    double mu_est = 0.0;
    double x_T = 0.0;
    double d2x_T = 0.0;
    long iterations = 0;
    long steps = 0;
    double wall_time_s = 0.0;

    bool operator==(const RunManifest&) const = default;
};

RunManifest make_manifest(const Solution& sol, double wall_time_s);

std::string manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const std::string& text);
std::string manifest_to_text(const RunManifest& m);

/// One row of the tolerance table. delta_a compares against the run at the
/// tightest tolerance of the ladder; a failed row keeps its error text.
struct TableRow {
    double eps = 0.0;
    long n_steps = 0;
    double a = 0.0;
    double delta_a = 0.0;
    double delta_beta = 0.0;
    double x_T = 0.0;
    bool failed = false;
    std::string error;
};

std::vector<TableRow> tolerance_table(const Problem& prob,
                                      const std::vector<double>& eps_ladder,
                                      const SolveOptions& opts = {});

/// CSV with header "eps,N,a,delta_a,delta_beta,x_T", comma separated,
/// LF line endings, 17 significant digits.
std::string table_csv(const std::vector<TableRow>& rows);

/// CSV of (t, x, dx, d2x) at n_samples equispaced times in [0, t_max].
/// Past the horizon the linear continuation is used for x, beta for dx and
/// zero for d2x.
std::string profile_csv(const Solution& sol, double t_max, int n_samples);

/// The standard tolerance ladder 1e-8 ... 1e-14.
std::vector<double> default_eps_ladder();

} // namespace blasius

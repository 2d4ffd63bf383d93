#include "blasius/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "blasius/integrator.hpp"

namespace blasius {

namespace {

// %.17g preserves the exact double value across print/parse.
std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void field(std::ostringstream& os, const char* key, double v, bool comma = true) {
    os << '"' << key << "\":" << num17(v);
    if (comma) os << ',';
}

} // namespace

RunManifest make_manifest(const Solution& sol, double wall_time_s) {
    RunManifest m;
    m.p = sol.problem.p;
    m.c = sol.problem.c;
    m.beta = sol.problem.beta;
    m.proven_regime = sol.problem.proven_regime;
    m.eps = sol.eps;
    m.c1 = sol.bounds.c1;
    m.c2 = sol.bounds.c2;
    m.c3 = sol.bounds.c3;
    m.c4 = sol.bounds.c4;
    m.c5 = sol.bounds.c5;
    m.a_min = sol.bracket_used.a_min;
    m.a_max = sol.bracket_used.a_max;
    m.T = sol.T;
    m.lhs2 = sol.cert.lhs2;
    m.lhs1 = sol.cert.lhs1;
    m.lhs0 = sol.cert.lhs0;
    m.cert_valid = sol.cert.valid;
    m.a_star = sol.a_star;
    m.h_est = sol.h_est;
    m.mu_est = sol.mu_est;
    m.x_T = sol.x_T;
    m.d2x_T = sol.d2x_T;
    m.iterations = sol.iterations;
    m.steps = static_cast<long>(sol.trajectory.steps);
    m.wall_time_s = wall_time_s;
    return m;
}

std::string manifest_to_json(const RunManifest& m) {
    std::ostringstream os;
    os << "{";
    os << "\"problem\":{";
    field(os, "p", m.p);
    field(os, "c", m.c);
    field(os, "beta", m.beta, false);
    os << ",\"proven_regime\":" << (m.proven_regime ? "true" : "false") << "},";
    field(os, "eps", m.eps);
    os << "\"constants\":{";
    field(os, "c1", m.c1);
    field(os, "c2", m.c2);
    field(os, "c3", m.c3);
    field(os, "c4", m.c4);
    field(os, "c5", m.c5, false);
    os << "},\"bracket\":{";
    field(os, "a_min", m.a_min);
    field(os, "a_max", m.a_max, false);
    os << "},\"horizon\":{";
    field(os, "T", m.T);
    field(os, "lhs2", m.lhs2);
    field(os, "lhs1", m.lhs1);
    field(os, "lhs0", m.lhs0, false);
    os << ",\"valid\":" << (m.cert_valid ? "true" : "false") << "},";
    field(os, "a_star", m.a_star);
    field(os, "h_est", m.h_est);
    field(os, "mu_est", m.mu_est);
    field(os, "x_T", m.x_T);
    field(os, "d2x_T", m.d2x_T);
    os << "\"iterations\":" << m.iterations << ",";
    os << "\"steps\":" << m.steps << ",";
    field(os, "wall_time_s", m.wall_time_s, false);
    os << "}";
    return os.str();
}

RunManifest manifest_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    RunManifest m;
    m.p = j.at("problem").at("p").get<double>();
    m.c = j.at("problem").at("c").get<double>();
    m.beta = j.at("problem").at("beta").get<double>();
    m.proven_regime = j.at("problem").at("proven_regime").get<bool>();
    m.eps = j.at("eps").get<double>();
    m.c1 = j.at("constants").at("c1").get<double>();
    m.c2 = j.at("constants").at("c2").get<double>();
    m.c3 = j.at("constants").at("c3").get<double>();
    m.c4 = j.at("constants").at("c4").get<double>();
    m.c5 = j.at("constants").at("c5").get<double>();
    m.a_min = j.at("bracket").at("a_min").get<double>();
    m.a_max = j.at("bracket").at("a_max").get<double>();
    m.T = j.at("horizon").at("T").get<double>();
    m.lhs2 = j.at("horizon").at("lhs2").get<double>();
    m.lhs1 = j.at("horizon").at("lhs1").get<double>();
    m.lhs0 = j.at("horizon").at("lhs0").get<double>();
    m.cert_valid = j.at("horizon").at("valid").get<bool>();
    m.a_star = j.at("a_star").get<double>();
    m.h_est = j.at("h_est").get<double>();
    m.mu_est = j.at("mu_est").get<double>();
    m.x_T = j.at("x_T").get<double>();
    m.d2x_T = j.at("d2x_T").get<double>();
    m.iterations = j.at("iterations").get<long>();
    m.steps = j.at("steps").get<long>();
    m.wall_time_s = j.at("wall_time_s").get<double>();
    return m;
}

std::string manifest_to_text(const RunManifest& m) {
    std::ostringstream os;
    os << "generalized Blasius solve  p=" << num17(m.p) << "  c=" << num17(m.c)
       << "  beta=" << num17(m.beta) << "  eps=" << num17(m.eps) << "\n";
    os << "  constants  c1=" << num17(m.c1) << "  c2=" << num17(m.c2)
       << "  c3=" << num17(m.c3) << "\n"
       << "             c4=" << num17(m.c4) << "  c5=" << num17(m.c5) << "\n";
    os << "  bracket    [" << num17(m.a_min) << ", " << num17(m.a_max) << "]\n";
    os << "  horizon    T=" << num17(m.T) << "  lhs2=" << num17(m.lhs2)
       << "  lhs1=" << num17(m.lhs1) << "  lhs0=" << num17(m.lhs0)
       << (m.cert_valid ? "  (valid)" : "  (NOT certified)") << "\n";
    os << "  a_star     " << num17(m.a_star) << "  (iterations="
       << m.iterations << ")\n";
    os << "  h_est      " << num17(m.h_est) << "  |beta-h|="
       << num17(std::abs(m.beta - m.h_est)) << "\n";
    os << "  mu_est     " << num17(m.mu_est) << "\n";
    os << "  x(T)       " << num17(m.x_T) << "\n";
    os << "  x''(T)     " << num17(m.d2x_T) << "\n";
    os << "  steps      " << m.steps << "\n";
    os << "  wall_time  " << num17(m.wall_time_s) << " s\n";
    return os.str();
}

std::vector<double> default_eps_ladder() {
    return {1e-8, 1e-9, 1e-10, 1e-11, 1e-12, 1e-13, 1e-14};
}

std::vector<TableRow> tolerance_table(const Problem& prob,
                                      const std::vector<double>& eps_ladder,
                                      const SolveOptions& opts) {
    std::vector<TableRow> rows(eps_ladder.size());

    // Reference curvature from the tightest tolerance of the ladder.
    double a_ref = 0.0;
    std::size_t ref_idx = 0;
    for (std::size_t i = 1; i < eps_ladder.size(); ++i) {
        if (eps_ladder[i] < eps_ladder[ref_idx]) ref_idx = i;
    }

    std::vector<Solution> sols(eps_ladder.size());
    std::vector<bool> done(eps_ladder.size(), false);
    for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
        rows[i].eps = eps_ladder[i];
        try {
            sols[i] = solve(prob, eps_ladder[i], opts);
            done[i] = true;
        } catch (const SolverError& e) {
            rows[i].failed = true;
            rows[i].error = e.what();
        }
    }
    if (done[ref_idx]) a_ref = sols[ref_idx].a_star;

    for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
        if (rows[i].failed) continue;
        const Solution& s = sols[i];
        rows[i].n_steps = static_cast<long>(std::lround(s.avg_shot_steps));
        rows[i].a = s.a_star;
        rows[i].delta_a = done[ref_idx] ? std::abs(s.a_star - a_ref) : 0.0;
        rows[i].delta_beta = std::abs(prob.beta - s.h_est);
        rows[i].x_T = s.x_T;
    }
    return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "eps,N,a,delta_a,delta_beta,x_T\n";
    for (const TableRow& r : rows) {
        if (r.failed) {
            os << num17(r.eps) << ",error:" << r.error << ",,,,\n";
            continue;
        }
        os << num17(r.eps) << ',' << r.n_steps << ',' << num17(r.a) << ','
           << num17(r.delta_a) << ',' << num17(r.delta_beta) << ','
           << num17(r.x_T) << "\n";
    }
    return os.str();
}

std::string profile_csv(const Solution& sol, double t_max, int n_samples) {
    if (!(t_max > 0.0) || n_samples < 2) {
        throw DomainError("profile requires t_max > 0 and n_samples >= 2");
    }
    std::ostringstream os;
    os << "t,x,dx,d2x\n";

    IntegratorConfig cfg = IntegratorConfig::with_tolerance(sol.eps);
    Rkf45Stepper stepper(sol.a_star, sol.problem, cfg,
                         std::min(cfg.h_max, sol.T / 10.0));

    for (int i = 0; i < n_samples; ++i) {
        const double t =
            t_max * static_cast<double>(i) / static_cast<double>(n_samples - 1);
        double x, dx, d2x;
        if (t <= sol.T) {
            stepper.advance_to(t);
            x = stepper.state().x;
            dx = stepper.state().dx;
            d2x = stepper.state().d2x;
        } else {
            x = extend(sol, t);
            dx = sol.problem.beta;
            d2x = 0.0;
        }
        os << num17(t) << ',' << num17(x) << ',' << num17(dx) << ','
           << num17(d2x) << "\n";
    }
    return os.str();
}

} // namespace blasius

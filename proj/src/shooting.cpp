#include "blasius/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "blasius/quadrature.hpp"

namespace blasius {

namespace {

double ulp_of(double x) {
    const double ax = std::abs(x);
    return std::nextafter(ax, std::numeric_limits<double>::infinity()) - ax;
}

Solution finish(Solution sol, double a, const IntegratorConfig& cfg,
                std::size_t shot_steps_total, int shots) {
    sol.a_star = a;
    sol.trajectory = integrate(a, sol.problem, sol.T, cfg);
    const State& end = sol.trajectory.samples.back();
    sol.h_est = end.dx;
    sol.mu_est = end.dx * sol.T - end.x;
    sol.x_T = end.x;
    sol.d2x_T = end.d2x;
    const double total =
        static_cast<double>(shot_steps_total + sol.trajectory.steps);
    sol.avg_shot_steps = total / static_cast<double>(shots + 1);
    return sol;
}

} // namespace

ShotResult shoot(double a, double T, const Problem& prob,
                 const IntegratorConfig& cfg) {
    if (!(a > 0.0)) throw DomainError("shoot requires a > 0");
    const double h_cap = std::min(cfg.h_max, T / 10.0);
    Rkf45Stepper stepper(a, prob, cfg, h_cap);
    stepper.advance_to(T);
    const State& end = stepper.state();
    return ShotResult{end.x, end.dx, end.d2x, stepper.accepted_steps()};
}

Solution solve(const Problem& prob, double eps, const SolveOptions& opts) {
    if (!(eps > 0.0)) throw DomainError("solve requires eps > 0");

    Solution sol;
    sol.problem = prob;
    sol.eps = eps;
    sol.bounds = constants(prob);

    if (prob.beta == 0.0) {
        // Trivial solution x == 0.
        sol.trajectory.samples.push_back(State{});
        sol.trajectory.tolerance = eps;
        sol.cert.eps = eps;
        sol.cert.valid = true;
        return sol;
    }

    sol.bracket_used = bracket(prob, sol.bounds);
    if (opts.horizon_override > 0.0) {
        sol.cert = check_T(opts.horizon_override, eps, sol.bracket_used, prob);
    } else {
        sol.cert = find_T(eps, sol.bracket_used, prob);
    }
    sol.T = sol.cert.T;

    IntegratorConfig cfg = IntegratorConfig::with_tolerance(eps);
    std::size_t steps_total = 0;
    int shots = 0;

    const auto fire = [&](double a) {
        const ShotResult r = shoot(a, sol.T, prob, cfg);
        steps_total += r.steps;
        ++shots;
        return r;
    };

    double lo = sol.bracket_used.a_min;
    double hi = sol.bracket_used.a_max;
    const ShotResult shot_lo = fire(lo);
    const ShotResult shot_hi = fire(hi);

    // An endpoint whose shot already meets the tolerance is the answer;
    // otherwise the endpoints must straddle the target slope.
    const double miss_lo = std::abs(shot_lo.dx_T - prob.beta);
    const double miss_hi = std::abs(shot_hi.dx_T - prob.beta);
    if (std::min(miss_lo, miss_hi) < eps) {
        const double a = (miss_lo <= miss_hi) ? lo : hi;
        return finish(std::move(sol), a, cfg, steps_total, shots);
    }
    if (!(shot_lo.dx_T < prob.beta && prob.beta < shot_hi.dx_T)) {
        throw BracketFailure(
            "endpoint shots do not straddle beta: x'(T; a_min) = " +
            std::to_string(shot_lo.dx_T) + ", x'(T; a_max) = " +
            std::to_string(shot_hi.dx_T));
    }

    double mid = 0.5 * (lo + hi);
    for (;;) {
        mid = 0.5 * (lo + hi);
        const ShotResult shot = fire(mid);
        ++sol.iterations;
        if (opts.trace) opts.trace(sol.iterations, lo, hi);

        if (std::abs(shot.dx_T - prob.beta) < eps) break;
        if (shot.dx_T < prob.beta) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 4.0 * ulp_of(mid)) {
            mid = 0.5 * (lo + hi);
            break;
        }
    }
    return finish(std::move(sol), mid, cfg, steps_total, shots);
}

double extend(const Solution& sol, double t) {
    if (t < sol.T) {
        throw DomainError("extension is defined for t >= T only");
    }
    return sol.problem.beta * t + (sol.x_T - sol.problem.beta * sol.T);
}

ResidualReport residual_certificate(const Solution& sol) {
    ResidualReport rep;
    rep.tol_used = std::max(1e-8, 10.0 * sol.eps);
    rep.d2x_T = sol.d2x_T;

    const auto& samples = sol.trajectory.samples;
    if (samples.empty()) return rep;

    const std::vector<double> cum =
        cumulative_power_integral(sol.trajectory, sol.problem.p);
    const double a = sol.trajectory.a;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double predicted = a * std::exp(-sol.problem.c * cum[i]);
        rep.quad_residual_max =
            std::max(rep.quad_residual_max, std::abs(samples[i].d2x - predicted));
    }

    const double tol = rep.tol_used;
    for (const State& s : samples) {
        const double lower =
            std::max(0.0, sol.h_est * s.t - sol.mu_est * (1.0 + tol));
        const double upper = sol.h_est * s.t * (1.0 + tol);
        rep.sandwich_lower_violation =
            std::max(rep.sandwich_lower_violation, lower - s.x);
        rep.sandwich_upper_violation =
            std::max(rep.sandwich_upper_violation, s.x - upper);
    }
    rep.sandwich_lower_violation = std::max(rep.sandwich_lower_violation, 0.0);
    rep.sandwich_upper_violation = std::max(rep.sandwich_upper_violation, 0.0);
    return rep;
}

} // namespace blasius

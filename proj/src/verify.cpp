#include "blasius/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "blasius/integrator.hpp"
#include "blasius/quadrature.hpp"
#include "blasius/shooting.hpp"
#include "blasius/truncation.hpp"

namespace blasius {

namespace {

struct Measured {
    double h = 0.0;
    double mu = 0.0;
};

std::string tag(const Problem& prob, double a, const char* what) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "p=%g c=%g a=%g %s", prob.p, prob.c, a,
                  what);
    return buf;
}

std::string tag2(const Problem& prob, const char* what) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "p=%g c=%g %s", prob.p, prob.c, what);
    return buf;
}

} // namespace

bool VerifyReport::ok() const { return hard_failures() == 0; }

std::size_t VerifyReport::hard_failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) {
        if (c.hard && !c.pass) ++n;
    }
    return n;
}

std::size_t VerifyReport::soft_failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) {
        if (!c.hard && !c.pass) ++n;
    }
    return n;
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        const char* mark = c.pass ? "[ ok ]" : (c.hard ? "[FAIL]" : "[warn]");
        os << mark << " " << c.name;
        if (!c.pass || c.value != 0.0) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "  (value %.6g, limit %.6g)",
                          c.value, c.limit);
            os << buf;
        }
        os << "\n";
    }
    os << checks.size() << " checks, " << hard_failures()
       << " hard failures, " << soft_failures() << " warnings\n";
    return os.str();
}

VerifyReport run_verification(const VerifyOptions& opts) {
    VerifyReport rep;
    const auto add = [&rep](std::string name, bool pass, bool hard,
                            double value, double limit) {
        rep.checks.push_back(
            VerifyCheck{std::move(name), pass, hard, value, limit});
    };

    for (double p : opts.p_grid) {
        for (double c : opts.c_grid) {
            const Problem prob = validate_problem(p, c, 1.0);
            const bool hard = prob.proven_regime || p == 0.0;

            BoundsSet bounds = constants(prob);
            bounds.c2 *= opts.corrupt_c2;

            const bool finite_pos =
                bounds.c1 > 0 && bounds.c2 > 0 && bounds.c3 > 0 &&
                bounds.c4 > 0 && bounds.c5 > 0 && std::isfinite(bounds.c1) &&
                std::isfinite(bounds.c5);
            add(tag2(prob, "constants positive"), finite_pos, true, bounds.c1,
                0.0);
            add(tag2(prob, "c1 > c3/c2"), bounds.c1 > bounds.c3 / bounds.c2,
                true, bounds.c1 - bounds.c3 / bounds.c2, 0.0);

            const Bracket br = bracket(prob, bounds);
            add(tag2(prob, "bracket ordered"), br.a_min < br.a_max, true,
                br.a_max - br.a_min, 0.0);

            // Endpoint shots must straddle the target slope.
            const IntegratorConfig cfg =
                IntegratorConfig::with_tolerance(opts.eps);
            const TruncationCert cert = find_T(opts.eps, br, prob);
            const ShotResult lo_shot = shoot(br.a_min, cert.T, prob, cfg);
            const ShotResult hi_shot = shoot(br.a_max, cert.T, prob, cfg);
            add(tag2(prob, "x'(T;a_min) < beta"),
                lo_shot.dx_T < prob.beta + 1e-9, hard,
                prob.beta - lo_shot.dx_T, 1e-9);
            add(tag2(prob, "x'(T;a_max) > beta"),
                hi_shot.dx_T > prob.beta - 1e-9, hard,
                hi_shot.dx_T - prob.beta, 1e-9);

            // Per-curvature measurements, a = 1 first as the scaling base.
            Measured base;
            std::vector<double> grid{1.0};
            for (double a : opts.a_grid) {
                if (a != 1.0) grid.push_back(a);
            }
            for (double a : grid) {
                const Bracket self{a, a};
                const TruncationCert ca = find_T(opts.eps, self, prob);
                const Trajectory traj = integrate(a, prob, ca.T, cfg);
                const State& end = traj.samples.back();
                const Measured meas{end.dx, end.dx * ca.T - end.x};
                if (a == 1.0) base = meas;

                // A-priori sandwich 0 < x < a t^2/2, 0 < x' < a t, 0 < x'' < a.
                bool sandwich = true;
                double worst = 0.0;
                for (const State& s : traj.samples) {
                    if (s.t <= 0.0) continue;
                    const double sx =
                        10.0 * opts.eps * std::max(1.0, 0.5 * a * s.t * s.t);
                    const double sdx =
                        10.0 * opts.eps * std::max(1.0, a * s.t);
                    const double sd2x = 10.0 * opts.eps * std::max(1.0, a);
                    const double v =
                        std::max({-s.x - sx, s.x - 0.5 * a * s.t * s.t - sx,
                                  -s.dx - sdx, s.dx - a * s.t - sdx,
                                  -s.d2x - sd2x, s.d2x - a - sd2x});
                    if (v > worst) worst = v;
                    if (v > 0.0) sandwich = false;
                }
                add(tag(prob, a, "a-priori sandwich"), sandwich, hard, worst,
                    0.0);

                // Lower line x >= slope*t - intercept.
                const LowerLine line = lower_line(a, bounds, prob);
                bool above = true;
                double worst_line = 0.0;
                for (const State& s : traj.samples) {
                    const double slack =
                        10.0 * opts.eps * std::max(1.0, line.slope * s.t);
                    const double v =
                        (line.slope * s.t - line.intercept) - s.x - slack;
                    worst_line = std::max(worst_line, v);
                    if (v > 0.0) above = false;
                }
                add(tag(prob, a, "lower-line bound"), above, hard, worst_line,
                    0.0);

                // Containment of measured h and mu in the closed-form bounds.
                const Bounds hb = h_bounds(a, bounds, prob);
                const Bounds mb = mu_bounds(a, bounds, prob);
                add(tag(prob, a, "h containment"),
                    meas.h >= hb.lo - 1e-8 && meas.h <= hb.hi + 1e-8, hard,
                    meas.h, hb.hi);
                add(tag(prob, a, "mu containment"),
                    meas.mu >= mb.lo - 1e-8 && meas.mu <= mb.hi + 1e-8, hard,
                    meas.mu, mb.hi);

                // Second-derivative integral identity along the trajectory.
                const std::vector<double> cum =
                    cumulative_power_integral(traj, prob.p);
                double resid = 0.0;
                for (std::size_t i = 0; i < traj.samples.size(); ++i) {
                    const double pred = a * std::exp(-prob.c * cum[i]);
                    resid = std::max(resid,
                                     std::abs(traj.samples[i].d2x - pred));
                }
                add(tag(prob, a, "curvature integral identity"),
                    resid <= 1e-8 * a, hard, resid, 1e-8 * a);

                // Tail moments against their closed forms at the crossing.
                const double t0 = line.crossing();
                for (int n = 0; n <= 1; ++n) {
                    const double alpha = prob.p + 1.0;
                    const double k = prob.c / (line.slope * alpha);
                    const double closed =
                        (n == 0)
                            ? gamma_fn(1.0 / alpha) /
                                  (alpha * std::pow(k, 1.0 / alpha)) /
                                  line.slope
                            : gamma_fn(2.0 / alpha) /
                                  (alpha * std::pow(k, 2.0 / alpha)) /
                                  (line.slope * line.slope);
                    const double got = tail_moment(n, t0, line, prob);
                    add(tag(prob, a,
                            n == 0 ? "tail closed form n=0"
                                   : "tail closed form n=1"),
                        std::abs(got - closed) <= 1e-11 * closed, true,
                        std::abs(got - closed) / closed, 1e-11);
                }

                // Scaling law against the a = 1 run.
                if (a != 1.0) {
                    const double A = 2.0 * prob.p + 1.0;
                    const double h_pred =
                        std::pow(a, (prob.p + 1.0) / A) * base.h;
                    const double mu_pred = std::pow(a, 1.0 / A) * base.mu;
                    add(tag(prob, a, "h scaling law"),
                        std::abs(meas.h - h_pred) <= 1e-7 * std::abs(h_pred),
                        hard, std::abs(meas.h - h_pred) / std::abs(h_pred),
                        1e-7);
                    add(tag(prob, a, "mu scaling law"),
                        std::abs(meas.mu - mu_pred) <=
                            1e-7 * std::abs(mu_pred),
                        hard, std::abs(meas.mu - mu_pred) / std::abs(mu_pred),
                        1e-7);
                }

                // Exactly solvable p = 0 case pins h = a/c and mu = a/c^2.
                if (prob.p == 0.0) {
                    const double h_exact = a / prob.c;
                    const double mu_exact = a / (prob.c * prob.c);
                    add(tag(prob, a, "p=0 exact h"),
                        std::abs(meas.h - h_exact) <= 1e-9 * h_exact, true,
                        std::abs(meas.h - h_exact), 1e-9 * h_exact);
                    add(tag(prob, a, "p=0 exact mu"),
                        std::abs(meas.mu - mu_exact) <= 1e-9 * mu_exact, true,
                        std::abs(meas.mu - mu_exact), 1e-9 * mu_exact);
                }
            }
        }
    }
    return rep;
}

} // namespace blasius

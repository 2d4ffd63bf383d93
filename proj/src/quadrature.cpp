#include "blasius/quadrature.hpp"

#include <cmath>

namespace blasius {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a,
                            double b, double fa, double fb, double fm,
                            double whole, double tol, double noise_rel,
                            int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    // Second test: delta at the evaluation-noise floor of the panel sums
    // cannot be refined away and only burns work.
    const double noise =
        noise_rel * (std::abs(left) + std::abs(right) + std::abs(whole));
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol ||
        std::abs(delta) <= noise) {
        return left + right + delta / 15.0;
    }
    const double child_tol = std::max(0.5 * tol, 1e-300);
    return adaptive_simpson_rec(f, a, m, fa, fm, flm, left, child_tol,
                                noise_rel, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, fb, frm, right, child_tol,
                                noise_rel, depth - 1);
}

// Integral over [ta, tb] of the quadratic through (t0,f0), (t1,f1), (t2,f2),
// written in Newton form f0 + d1*(t-t0) + d2*(t-t0)(t-t1).
double quadratic_integral(double t0, double f0, double t1, double f1,
                          double t2, double f2, double ta, double tb) {
    const double d1 = (f1 - f0) / (t1 - t0);
    const double d2 = ((f2 - f1) / (t2 - t1) - d1) / (t2 - t0);

    auto antideriv = [&](double t) {
        const double u = t - t0;
        return f0 * u + 0.5 * d1 * u * u +
               d2 * (u * u * u / 3.0 - 0.5 * (t1 - t0) * u * u);
    };
    return antideriv(tb) - antideriv(ta);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, double noise_rel) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = simpson(a, fa, b, fb, fm);
    return adaptive_simpson_rec(f, a, b, fa, fb, fm, whole,
                                std::max(tol, 1e-300),
                                std::max(noise_rel, 4e-16), 60);
}

namespace {

// Integral of x(t)^p over one interval from endpoint data only, exact for
// integrands of degree <= 5: two-point rule with value and two derivative
// corrections. d/dt x^p and d2/dt2 x^p come from the stored (x, x', x'').
double hermite_segment(const State& a, const State& b, double p) {
    const auto df = [p](const State& s) {
        if (s.x <= 0.0) return (p == 1.0) ? s.dx : 0.0;
        return p * std::pow(s.x, p - 1.0) * s.dx;
    };
    const auto d2f = [p](const State& s) {
        if (s.x <= 0.0) return (p == 1.0) ? s.d2x : 0.0;
        const double xp2 = (p == 1.0) ? 0.0
                                      : p * (p - 1.0) * std::pow(s.x, p - 2.0) *
                                            s.dx * s.dx;
        return xp2 + p * std::pow(s.x, p - 1.0) * s.d2x;
    };
    const double h = b.t - a.t;
    const double f0 = std::pow(std::max(a.x, 0.0), p);
    const double f1 = std::pow(std::max(b.x, 0.0), p);
    return 0.5 * h * (f0 + f1) + h * h / 10.0 * (df(a) - df(b)) +
           h * h * h / 120.0 * (d2f(a) + d2f(b));
}

} // namespace

std::vector<double> cumulative_power_integral(const Trajectory& traj,
                                              double p) {
    const auto& s = traj.samples;
    const std::size_t n = s.size();
    std::vector<double> cum(n, 0.0);
    if (n < 2) return cum;

    if (p >= 1.0) {
        // x^p is smooth along the trajectory; the derivative-augmented rule
        // stays accurate where x^p varies fast between samples.
        for (std::size_t i = 0; i + 1 < n; ++i) {
            cum[i + 1] = cum[i] + hermite_segment(s[i], s[i + 1], p);
        }
        return cum;
    }

    // For p < 1 the derivatives of x^p blow up at the origin; fall back to
    // the value-only quadratic rule.
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        f[i] = std::pow(std::max(s[i].x, 0.0), p);
    }

    if (n == 2) {
        cum[1] = 0.5 * (f[0] + f[1]) * (s[1].t - s[0].t);
        return cum;
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        // Integrate [t_i, t_{i+1}] with the quadratics through the adjacent
        // sample triples; averaging the two cancels the signed cubic error
        // term that would otherwise accumulate along the grid.
        double seg;
        if (i == 0) {
            seg = quadratic_integral(s[0].t, f[0], s[1].t, f[1], s[2].t, f[2],
                                     s[0].t, s[1].t);
        } else if (i + 2 == n) {
            seg = quadratic_integral(s[n - 3].t, f[n - 3], s[n - 2].t, f[n - 2],
                                     s[n - 1].t, f[n - 1], s[i].t, s[i + 1].t);
        } else {
            const double left =
                quadratic_integral(s[i - 1].t, f[i - 1], s[i].t, f[i],
                                   s[i + 1].t, f[i + 1], s[i].t, s[i + 1].t);
            const double right =
                quadratic_integral(s[i].t, f[i], s[i + 1].t, f[i + 1],
                                   s[i + 2].t, f[i + 2], s[i].t, s[i + 1].t);
            seg = 0.5 * (left + right);
        }
        cum[i + 1] = cum[i] + seg;
    }
    return cum;
}

} // namespace blasius

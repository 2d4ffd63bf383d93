#pragma once

#include <functional>

#include "blasius/estimates.hpp"
#include "blasius/integrator.hpp"
#include "blasius/model.hpp"
#include "blasius/truncation.hpp"

namespace blasius {

/// Endpoint values of one shot (IVP run to the horizon).
struct ShotResult {
    double x_T = 0.0;
    double dx_T = 0.0;
    double d2x_T = 0.0;
    std::size_t steps = 0;
};

/// Integrates the IVP with x''(0) = a over [0, T] and returns the endpoint.
ShotResult shoot(double a, double T, const Problem& prob,
                 const IntegratorConfig& cfg);

/// Solved record for one problem at one tolerance.
struct Solution {
    Problem problem;
    double a_star = 0.0; ///< solved initial curvature x''(0)
    double T = 0.0;      ///< truncation horizon
    double eps = 0.0;
    double h_est = 0.0;  ///< x'(T), the achieved slope
    double mu_est = 0.0; ///< x'(T)*T - x(T), the asymptote offset estimate
    double x_T = 0.0;
    double d2x_T = 0.0;
    Trajectory trajectory; ///< final run at a_star
    int iterations = 0;    ///< bisection count
    TruncationCert cert;
    BoundsSet bounds;
    Bracket bracket_used;
    double avg_shot_steps = 0.0; ///< mean accepted steps per IVP run
};

struct SolveOptions {
    /// Nonzero replaces find_T with a caller-chosen horizon; the certificate
    /// for that horizon is still evaluated and carried in the Solution.
    double horizon_override = 0.0;
    /// Observer called after each bisection iterate with (iter, lo, hi).
    std::function<void(int, double, double)> trace;
};

/// Full pipeline: constants -> bracket -> certified horizon -> bisection on
/// the initial curvature until |x'(T) - beta| < eps (or the bracket width
/// collapses to 4 ulp). An endpoint already meeting the shot tolerance is
/// accepted directly. beta = 0 short-circuits to the trivial solution.
/// Throws BracketFailure if the endpoint shots neither straddle beta nor
/// meet the tolerance.
Solution solve(const Problem& prob, double eps, const SolveOptions& opts = {});

/// Linear continuation beyond the horizon: beta*t + (x(T) - beta*T).
/// Throws DomainError for t < T.
double extend(const Solution& sol, double t);

/// A-posteriori checks of a solved trajectory (report only, no assertions).
struct ResidualReport {
    /// max over samples of |x'' - a*exp(-c*Q(t))|, Q the cumulative
    /// quadrature of x^p over the sample grid.
    double quad_residual_max = 0.0;
    /// max violation of max(0, h*t - mu*(1+tol)) <= x <= h*t*(1+tol),
    /// zero when the sandwich holds.
    double sandwich_lower_violation = 0.0;
    double sandwich_upper_violation = 0.0;
    double d2x_T = 0.0;
    double tol_used = 0.0;
};

ResidualReport residual_certificate(const Solution& sol);

} // namespace blasius

#pragma once

#include "blasius/estimates.hpp"
#include "blasius/model.hpp"

namespace blasius {

/// Certificate that horizon T truncates the problem safely at tolerance eps.
///
/// The three left-hand sides bound, uniformly over the bracket,
///   lhs2 >= x''(T),  lhs1 >= h(a) - x'(T),  lhs0 >= x(T) - (h(a)*T - mu(a)),
/// each built from the lower line at a_min and the prefactor a_max.
/// The certificate is valid iff max(lhs2, lhs1, lhs0) < eps.
struct TruncationCert {
    double T = 0.0;
    double eps = 0.0;
    double lhs2 = 0.0;
    double lhs1 = 0.0;
    double lhs0 = 0.0;
    bool valid = false;
};

/// I(s) = integral_0^s max(0, slope*tau - intercept)^p dtau
///      = (slope*s - intercept)^(p+1) / (slope*(p+1))   for s >= t0, else 0.
/// The integrand is clamped at zero: the lower line only constrains the
/// trajectory past its crossing point, and the trajectory itself is
/// nonnegative.
double inner_integral(double s, const LowerLine& line, const Problem& prob);

/// integral_T^inf (s-T)^n * exp(-c*I(s)) ds for n in {0, 1}.
///
/// Adaptive quadrature over expanding windows; the expansion stops when the
/// analytic remainder bound falls below the error budget. Past any S the
/// integrand is dominated by exp(-c*I(S)) * exp(-rho*(s-S)) with
/// rho = c*(slope*S - intercept)^p, so the remainder of the n-th moment is
/// at most exp(-c*I(S)) * ((S-T)^n / rho + n / rho^2).
///
/// abs_tol = 0 requests full precision (relative ~1e-14).
/// Throws DomainError if T < t0 and NoDecay if the decay regime is not
/// reached within the window budget (degenerate line).
double tail_moment(int n, double T, const LowerLine& line, const Problem& prob,
                   double abs_tol = 0.0);

/// Evaluates the three tail inequalities at horizon T for the given bracket.
TruncationCert check_T(double T, double eps, const Bracket& br,
                       const Problem& prob);

/// Smallest integer T >= ceil(t0) + 1 with a valid certificate, located by
/// doubling then integer bisection (validity is monotone in T).
/// Throws HorizonOverflow if no valid T <= 1e6 exists.
TruncationCert find_T(double eps, const Bracket& br, const Problem& prob);

} // namespace blasius

#pragma once

#include "blasius/model.hpp"

namespace blasius {

/// Euler Gamma function for z > 0, relative error <= 1e-13 on (0, 50].
/// Lanczos approximation (g = 7, 9 coefficients); arguments below 1/2 are
/// lifted through the recurrence Gamma(z) = Gamma(z+1)/z.
/// Throws DomainError for z <= 0 or non-finite z.
double gamma_fn(double z);

/// The analytic constants attached to one (p, c) pair.
///
/// With A = 2p+1:
///   c2 = Gamma(1/A) * (2^p / (c*A^(2p)))^(1/A)
///   c3 = Gamma(2/A) * A^((1-2p)/A) * (2^p/c)^(2/A)
///   c1 = c3/c2 + Gamma(1/(p+1)) / (c^(1/(p+1)) * (c2*(p+1))^(p/(p+1)))
///   c4 = 2^(2p/A) * Gamma(2/A) / (A^((2p-1)/A) * c^(2/A))
///   c5 = (c3^2/2 + (c2/c)^(2/(p+1)) * (p+1)^((1-p)/(1+p)) * Gamma(2/(p+1))
///         + c3 * (c2/(c*(p+1)^p))^(1/(p+1)) * Gamma(1/(p+1))) / c2^2
///
/// They bound the shooting map h(a) and the asymptote offset mu(a):
///   c2 * a^((p+1)/A) <= h(a)  <= c1 * a^((p+1)/A)
///   c4 * a^(1/A)     <= mu(a) <= c5 * a^(1/A)
/// (c4 equals c3 algebraically; both are evaluated from their own forms.)
struct BoundsSet {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;
    double c5 = 0.0;
};

/// Evaluates the five closed forms for prob's (p, c).
BoundsSet constants(const Problem& prob);

struct Bounds {
    double lo = 0.0;
    double hi = 0.0;
};

/// Two-sided bound on the limit slope h(a) = lim x'(t) for curvature a > 0.
Bounds h_bounds(double a, const BoundsSet& bounds, const Problem& prob);

/// Two-sided bound on the asymptote offset mu(a) = lim (h(a)*t - x(t)).
Bounds mu_bounds(double a, const BoundsSet& bounds, const Problem& prob);

/// Interval guaranteed to contain the shooting parameter a with h(a) = beta:
///   a_min = (beta/c1)^((2p+1)/(p+1)),  a_max = (beta/c2)^((2p+1)/(p+1)).
struct Bracket {
    double a_min = 0.0;
    double a_max = 0.0;
};

/// Inverts the h(a) power-law bounds at beta. Throws DomainError for
/// beta = 0 (the trivial solution is handled before bracketing).
Bracket bracket(const Problem& prob, const BoundsSet& bounds);

/// The a-priori lower line x_a(t) >= slope*t - intercept (clamped at zero):
///   slope = c2 * a^((p+1)/(2p+1)),  intercept = c3 * a^(1/(2p+1)).
struct LowerLine {
    double slope = 0.0;     ///< lambda(a)
    double intercept = 0.0; ///< m(a)

    /// Crossing point t0 = intercept/slope where the line becomes positive.
    double crossing() const { return intercept / slope; }
};

LowerLine lower_line(double a, const BoundsSet& bounds, const Problem& prob);

} // namespace blasius

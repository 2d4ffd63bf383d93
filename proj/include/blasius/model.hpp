#pragma once

#include <cstddef>
#include <vector>

#include "blasius/errors.hpp"

namespace blasius {

/// The boundary value problem x''' + c*x^p*x'' = 0, x(0)=x'(0)=0, x'(inf)=beta.
///
/// `proven_regime` is true iff p >= 1, where existence/uniqueness of the
/// shooting solution is established. Values p in [0,1) are still accepted:
/// p = 0 gives the exactly solvable linear equation x'' = a*exp(-c*t) used
/// as an end-to-end oracle, and fractional p behaves stably in practice.
struct Problem {
    double p = 1.0;
    double c = 0.5;
    double beta = 1.0;
    bool proven_regime = true;
};

/// Validates raw inputs and stamps the regime flag.
/// Throws DomainError for c <= 0, beta < 0, p < 0, or non-finite input.
Problem validate_problem(double p, double c, double beta);

/// One point of a trajectory: (t, x, x', x'').
struct State {
    double t = 0.0;
    double x = 0.0;
    double dx = 0.0;
    double d2x = 0.0;
};

/// Right-hand side of the first-order system (x, x', x'') -> (x', x'', x''').
struct Deriv {
    double dx = 0.0;
    double d2x = 0.0;
    double d3x = 0.0;
};

/// Evaluates (x', x'', -c*x^p*x'').
/// Throws DomainError when x < 0 and p is not an integer (fractional power
/// of a negative base).
Deriv rhs(const State& s, const Problem& prob);

/// Dense record of one initial value problem run. Samples are the accepted
/// steps, strictly increasing in t, starting at (0, 0, 0, a).
struct Trajectory {
    std::vector<State> samples;
    std::size_t steps = 0; ///< accepted-step count
    double tolerance = 0.0;
    double a = 0.0; ///< initial curvature x''(0)
};

} // namespace blasius

#include "blasius/model.hpp"

#include <cmath>
#include <string>

namespace blasius {

Problem validate_problem(double p, double c, double beta) {
    if (!std::isfinite(p) || !std::isfinite(c) || !std::isfinite(beta)) {
        throw DomainError("problem parameters must be finite");
    }
    if (c <= 0.0) {
        throw DomainError("coefficient c must be positive, got " +
                          std::to_string(c));
    }
    if (beta < 0.0) {
        throw DomainError("target slope beta must be nonnegative, got " +
                          std::to_string(beta));
    }
    if (p < 0.0) {
        throw DomainError("exponent p must be nonnegative, got " +
                          std::to_string(p));
    }
    return Problem{p, c, beta, p >= 1.0};
}

Deriv rhs(const State& s, const Problem& prob) {
    double xp;
    if (s.x >= 0.0) {
        xp = std::pow(s.x, prob.p);
    } else if (prob.p == std::floor(prob.p)) {
        xp = std::pow(s.x, prob.p);
    } else {
        throw DomainError("fractional power of negative x = " +
                          std::to_string(s.x));
    }
    return Deriv{s.dx, s.d2x, -prob.c * xp * s.d2x};
}

} // namespace blasius

#include "blasius/estimates.hpp"

#include <cmath>
#include <string>

namespace blasius {

namespace {

// Lanczos approximation, g = 7, 9 coefficients (Godfrey's set). Relative
// error below 1e-14 for z >= 1/2; smaller arguments go through one
// recurrence step, which costs one rounding.
constexpr double lanczos_g = 7.0;
constexpr double lanczos_coeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};
constexpr double sqrt_two_pi = 2.5066282746310002;

double gamma_lanczos(double z) {
    // valid for z >= 0.5
    const double zm1 = z - 1.0;
    double sum = lanczos_coeff[0];
    for (int i = 1; i < 9; ++i) {
        sum += lanczos_coeff[i] / (zm1 + i);
    }
    const double t = zm1 + lanczos_g + 0.5;
    return sqrt_two_pi * std::pow(t, zm1 + 0.5) * std::exp(-t) * sum;
}

} // namespace

double gamma_fn(double z) {
    if (!std::isfinite(z) || z <= 0.0) {
        throw DomainError("gamma_fn requires finite z > 0, got " +
                          std::to_string(z));
    }
    if (z < 0.5) {
        return gamma_fn(z + 1.0) / z;
    }
    return gamma_lanczos(z);
}

BoundsSet constants(const Problem& prob) {
    const double p = prob.p;
    const double c = prob.c;
    const double A = 2.0 * p + 1.0;

    BoundsSet b;
    b.c2 = gamma_fn(1.0 / A) *
           std::pow(std::pow(2.0, p) / (c * std::pow(A, 2.0 * p)), 1.0 / A);
    b.c3 = gamma_fn(2.0 / A) * std::pow(A, (1.0 - 2.0 * p) / A) *
           std::pow(std::pow(2.0, p) / c, 2.0 / A);
    b.c1 = b.c3 / b.c2 +
           gamma_fn(1.0 / (p + 1.0)) /
               (std::pow(c, 1.0 / (p + 1.0)) *
                std::pow(b.c2 * (p + 1.0), p / (p + 1.0)));
    b.c4 = std::pow(2.0, 2.0 * p / A) * gamma_fn(2.0 / A) /
           (std::pow(A, (2.0 * p - 1.0) / A) * std::pow(c, 2.0 / A));
    b.c5 = (b.c3 * b.c3 / 2.0 +
            std::pow(b.c2 / c, 2.0 / (p + 1.0)) *
                std::pow(p + 1.0, (1.0 - p) / (1.0 + p)) *
                gamma_fn(2.0 / (p + 1.0)) +
            b.c3 * std::pow(b.c2 / (c * std::pow(p + 1.0, p)), 1.0 / (p + 1.0)) *
                gamma_fn(1.0 / (p + 1.0))) /
           (b.c2 * b.c2);
    return b;
}

Bounds h_bounds(double a, const BoundsSet& bounds, const Problem& prob) {
    const double s = std::pow(a, (prob.p + 1.0) / (2.0 * prob.p + 1.0));
    return Bounds{bounds.c2 * s, bounds.c1 * s};
}

Bounds mu_bounds(double a, const BoundsSet& bounds, const Problem& prob) {
    const double s = std::pow(a, 1.0 / (2.0 * prob.p + 1.0));
    return Bounds{bounds.c4 * s, bounds.c5 * s};
}

Bracket bracket(const Problem& prob, const BoundsSet& bounds) {
    if (prob.beta <= 0.0) {
        throw DomainError("bracketing requires beta > 0");
    }
    const double e = (2.0 * prob.p + 1.0) / (prob.p + 1.0);
    return Bracket{std::pow(prob.beta / bounds.c1, e),
                   std::pow(prob.beta / bounds.c2, e)};
}

LowerLine lower_line(double a, const BoundsSet& bounds, const Problem& prob) {
    const double A = 2.0 * prob.p + 1.0;
    return LowerLine{bounds.c2 * std::pow(a, (prob.p + 1.0) / A),
                     bounds.c3 * std::pow(a, 1.0 / A)};
}

} // namespace blasius

#include "blasius/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "blasius/quadrature.hpp"

namespace blasius {

namespace {

constexpr double horizon_cap = 1e6;
constexpr int window_budget = 4096;
constexpr double rel_target = 1e-14;

// Remainder of the n-th tail moment past S, using that beyond S the
// integrand is dominated by exp(-c*I(S)) * exp(-rho*(s-S)) with
// rho = c*(slope*S - intercept)^p:
//   n = 0:  exp(-c*I(S)) / rho
//   n = 1:  exp(-c*I(S)) * ((S-T)/rho + 1/rho^2)
double tail_remainder(int n, double T, double S, const LowerLine& line,
                      const Problem& prob) {
    const double u = line.slope * S - line.intercept;
    if (u <= 0.0) return std::numeric_limits<double>::infinity();
    const double rho = prob.c * std::pow(u, prob.p);
    if (!(rho > 0.0)) return std::numeric_limits<double>::infinity();
    const double head = std::exp(-prob.c * inner_integral(S, line, prob));
    if (n == 0) return head / rho;
    return head * ((S - T) / rho + 1.0 / (rho * rho));
}

} // namespace

double inner_integral(double s, const LowerLine& line, const Problem& prob) {
    const double u = line.slope * s - line.intercept;
    if (u <= 0.0) return 0.0;
    return std::pow(u, prob.p + 1.0) / (line.slope * (prob.p + 1.0));
}

double tail_moment(int n, double T, const LowerLine& line, const Problem& prob,
                   double abs_tol) {
    if (n != 0 && n != 1) {
        throw DomainError("tail_moment supports moments n in {0, 1}");
    }
    if (!(line.slope > 0.0)) {
        throw NoDecay("lower line has nonpositive slope");
    }
    const double t0 = line.crossing();
    if (T < t0 * (1.0 - 1e-12)) {
        throw DomainError("tail_moment requires T >= line crossing t0 = " +
                          std::to_string(t0));
    }

    const auto f = [&](double s) {
        const double e = -prob.c * inner_integral(s, line, prob);
        const double w = (n == 1) ? (s - T) : 1.0;
        // exp underflows cleanly to zero for very negative arguments
        return w * std::exp(e);
    };

    // Each window spans exactly four e-folds of the inner exponent: the next
    // window end solves c*I(S_next) = c*I(S) + 4 in closed form. This keeps
    // the decaying mass visible to the quadrature both near the crossing
    // (where the local rate vanishes) and far out (where it is steep).
    double total = 0.0;
    double S = T;
    for (int k = 0; k < window_budget; ++k) {
        const double u = std::max(line.slope * S - line.intercept, 0.0);
        const double rho = prob.c * std::pow(u, prob.p);
        const double target =
            prob.c * inner_integral(S, line, prob) + 4.0;
        const double u_next = std::pow(
            target * line.slope * (prob.p + 1.0) / prob.c,
            1.0 / (prob.p + 1.0));
        const double width = (u_next - u) / line.slope;
        const double S_next = S + width;
        if (!std::isfinite(S_next) || S_next > 1e12) {
            throw NoDecay("degenerate lower line, no usable decay rate");
        }

        // Analytic size of this window's contribution, used to scale the
        // quadrature tolerance: the integrand starts at exp(-c*I(S)) and
        // decays no slower than rate rho past S.
        const double reach = (rho > 0.0) ? std::min(width, 1.0 / rho) : width;
        double scale = std::exp(-prob.c * inner_integral(S, line, prob)) * reach;
        if (n == 1) scale *= (S - T) + reach;

        double tol_w = rel_target * std::max(total, scale);
        if (abs_tol > 0.0) {
            // Harmonic-squared shares keep the summed budget below abs_tol/4.
            const double share =
                abs_tol / (4.0 * static_cast<double>(k + 1) *
                           static_cast<double>(k + 2));
            tol_w = std::max(tol_w, share);
        }
        // exp(-c*I) carries relative jitter of about |c*I|*eps; panels whose
        // refinement difference sits at that level are converged. Mass more
        // than ~35 e-folds below the window head never matters.
        const double head_exponent =
            std::min(prob.c * inner_integral(S, line, prob), 709.0);
        const double noise_rel = 2.3e-16 * (4.0 + head_exponent + 35.0);
        total += adaptive_simpson(f, S, S_next, std::max(tol_w, 1e-300),
                                  noise_rel);
        S = S_next;

        const double rem = tail_remainder(n, T, S, line, prob);
        double stop = rel_target * std::max(total, 1e-300);
        if (abs_tol > 0.0) stop = std::max(stop, 0.5 * abs_tol);
        if (rem <= stop) return total;
    }
    throw NoDecay("tail integrand did not reach its decay regime within " +
                  std::to_string(window_budget) + " windows");
}

TruncationCert check_T(double T, double eps, const Bracket& br,
                       const Problem& prob) {
    if (!(eps > 0.0)) throw DomainError("check_T requires eps > 0");
    if (!(T > 0.0)) throw DomainError("check_T requires T > 0");

    const BoundsSet bounds = constants(prob);
    const LowerLine line = lower_line(br.a_min, bounds, prob);

    TruncationCert cert;
    cert.T = T;
    cert.eps = eps;
    cert.lhs2 = br.a_max * std::exp(-prob.c * inner_integral(T, line, prob));
    const double budget = 1e-3 * eps / br.a_max;
    cert.lhs1 = br.a_max * tail_moment(0, T, line, prob, budget);
    cert.lhs0 = br.a_max * tail_moment(1, T, line, prob, budget);
    cert.valid = std::max({cert.lhs2, cert.lhs1, cert.lhs0}) < eps;
    return cert;
}

TruncationCert find_T(double eps, const Bracket& br, const Problem& prob) {
    if (!(eps > 0.0)) throw DomainError("find_T requires eps > 0");

    const BoundsSet bounds = constants(prob);
    const LowerLine line = lower_line(br.a_min, bounds, prob);
    const double t0 = line.crossing();
    if (!std::isfinite(t0) || t0 >= horizon_cap) {
        throw HorizonOverflow("line crossing t0 = " + std::to_string(t0) +
                              " exceeds the horizon cap");
    }

    const long T_floor = static_cast<long>(std::ceil(t0)) + 1;
    long lo = std::max(T_floor, 1L);

    TruncationCert cert = check_T(static_cast<double>(lo), eps, br, prob);
    if (cert.valid) return cert;

    // Double until valid, then bisect on integers for the smallest valid T.
    long hi = lo;
    TruncationCert hi_cert;
    for (;;) {
        hi *= 2;
        if (hi > static_cast<long>(horizon_cap)) {
            throw HorizonOverflow("no certified horizon below " +
                                  std::to_string(horizon_cap));
        }
        hi_cert = check_T(static_cast<double>(hi), eps, br, prob);
        if (hi_cert.valid) break;
        lo = hi;
    }
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        const TruncationCert mid_cert =
            check_T(static_cast<double>(mid), eps, br, prob);
        if (mid_cert.valid && mid >= T_floor) {
            hi = mid;
            hi_cert = mid_cert;
        } else {
            lo = mid;
        }
    }
    return hi_cert;
}

} // namespace blasius

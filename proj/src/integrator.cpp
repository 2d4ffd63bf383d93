#include "blasius/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace blasius {

namespace {

// Classical Fehlberg 4(5) tableau.
constexpr double c2 = 1.0 / 4.0;
constexpr double c3 = 3.0 / 8.0;
constexpr double c4 = 12.0 / 13.0;
constexpr double c5 = 1.0;
constexpr double c6 = 1.0 / 2.0;

constexpr double a21 = 1.0 / 4.0;
constexpr double a31 = 3.0 / 32.0, a32 = 9.0 / 32.0;
constexpr double a41 = 1932.0 / 2197.0, a42 = -7200.0 / 2197.0,
                 a43 = 7296.0 / 2197.0;
constexpr double a51 = 439.0 / 216.0, a52 = -8.0, a53 = 3680.0 / 513.0,
                 a54 = -845.0 / 4104.0;
constexpr double a61 = -8.0 / 27.0, a62 = 2.0, a63 = -3544.0 / 2565.0,
                 a64 = 1859.0 / 4104.0, a65 = -11.0 / 40.0;

// Fifth-order weights (the propagated solution).
constexpr double b1 = 16.0 / 135.0, b3 = 6656.0 / 12825.0,
                 b4 = 28561.0 / 56430.0, b5 = -9.0 / 50.0, b6 = 2.0 / 55.0;

// Embedded difference (5th minus 4th order weights).
constexpr double e1 = 1.0 / 360.0, e3 = -128.0 / 4275.0,
                 e4 = -2197.0 / 75240.0, e5 = 1.0 / 50.0, e6 = 2.0 / 55.0;

constexpr double scale_floor = 1e-30;
constexpr double grow_cap = 5.0;
constexpr double shrink_cap = 0.1;

struct Vec3 {
    double x, dx, d2x;
};

Deriv eval(const Problem& prob, double t, double x, double dx, double d2x) {
    // Stage points can undershoot x = 0 by roundoff near the origin even
    // though the trajectory itself is nonnegative.
    if (x < 0.0 && x > -1e-12) x = 0.0;
    return rhs(State{t, x, dx, d2x}, prob);
}

} // namespace

IntegratorConfig IntegratorConfig::with_tolerance(double eps) {
    IntegratorConfig cfg;
    cfg.tolerance = eps;
    return cfg;
}

void IntegratorConfig::validate() const {
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
        throw DomainError("tolerance must be positive");
    }
    if (!(h_min > 0.0) || !(h_init >= h_min) || !(h_max >= h_init)) {
        throw DomainError("step bounds must satisfy h_min <= h_init <= h_max");
    }
    if (!(safety > 0.0) || !(safety < 1.0)) {
        throw DomainError("safety factor must lie in (0, 1)");
    }
}

RawStep rkf45_raw_step(const State& s, const Problem& prob, double h) {
    const Deriv k1 = eval(prob, s.t, s.x, s.dx, s.d2x);
    const Deriv k2 = eval(prob, s.t + c2 * h, s.x + h * a21 * k1.dx,
                          s.dx + h * a21 * k1.d2x, s.d2x + h * a21 * k1.d3x);
    const Deriv k3 =
        eval(prob, s.t + c3 * h, s.x + h * (a31 * k1.dx + a32 * k2.dx),
             s.dx + h * (a31 * k1.d2x + a32 * k2.d2x),
             s.d2x + h * (a31 * k1.d3x + a32 * k2.d3x));
    const Deriv k4 =
        eval(prob, s.t + c4 * h,
             s.x + h * (a41 * k1.dx + a42 * k2.dx + a43 * k3.dx),
             s.dx + h * (a41 * k1.d2x + a42 * k2.d2x + a43 * k3.d2x),
             s.d2x + h * (a41 * k1.d3x + a42 * k2.d3x + a43 * k3.d3x));
    const Deriv k5 =
        eval(prob, s.t + c5 * h,
             s.x + h * (a51 * k1.dx + a52 * k2.dx + a53 * k3.dx + a54 * k4.dx),
             s.dx +
                 h * (a51 * k1.d2x + a52 * k2.d2x + a53 * k3.d2x + a54 * k4.d2x),
             s.d2x +
                 h * (a51 * k1.d3x + a52 * k2.d3x + a53 * k3.d3x + a54 * k4.d3x));
    const Deriv k6 =
        eval(prob, s.t + c6 * h,
             s.x + h * (a61 * k1.dx + a62 * k2.dx + a63 * k3.dx + a64 * k4.dx +
                        a65 * k5.dx),
             s.dx + h * (a61 * k1.d2x + a62 * k2.d2x + a63 * k3.d2x +
                         a64 * k4.d2x + a65 * k5.d2x),
             s.d2x + h * (a61 * k1.d3x + a62 * k2.d3x + a63 * k3.d3x +
                          a64 * k4.d3x + a65 * k5.d3x));

    const Vec3 y5{
        s.x + h * (b1 * k1.dx + b3 * k3.dx + b4 * k4.dx + b5 * k5.dx +
                   b6 * k6.dx),
        s.dx + h * (b1 * k1.d2x + b3 * k3.d2x + b4 * k4.d2x + b5 * k5.d2x +
                    b6 * k6.d2x),
        s.d2x + h * (b1 * k1.d3x + b3 * k3.d3x + b4 * k4.d3x + b5 * k5.d3x +
                     b6 * k6.d3x)};
    const Vec3 err{
        h * (e1 * k1.dx + e3 * k3.dx + e4 * k4.dx + e5 * k5.dx + e6 * k6.dx),
        h * (e1 * k1.d2x + e3 * k3.d2x + e4 * k4.d2x + e5 * k5.d2x +
             e6 * k6.d2x),
        h * (e1 * k1.d3x + e3 * k3.d3x + e4 * k4.d3x + e5 * k5.d3x +
             e6 * k6.d3x)};

    // Scaled max-norm, relative with an absolute floor.
    const double sx = scale_floor + std::max(std::abs(s.x), std::abs(y5.x));
    const double sdx = scale_floor + std::max(std::abs(s.dx), std::abs(y5.dx));
    const double sd2x =
        scale_floor + std::max(std::abs(s.d2x), std::abs(y5.d2x));
    const double est = std::max({std::abs(err.x) / sx, std::abs(err.dx) / sdx,
                                 std::abs(err.d2x) / sd2x});

    return RawStep{State{s.t + h, y5.x, y5.dx, y5.d2x}, est};
}

StepOutcome rkf45_step(const State& s, const Problem& prob, double h,
                       const IntegratorConfig& cfg) {
    const RawStep raw = rkf45_raw_step(s, prob, h);
    const double est = raw.error_estimate;

    if (est <= cfg.tolerance) {
        double factor = grow_cap;
        if (est > 0.0) {
            factor = std::clamp(cfg.safety * std::pow(cfg.tolerance / est, 0.2),
                                shrink_cap, grow_cap);
        }
        const double h_next = std::min(h * factor, cfg.h_max);
        return StepResult{raw.state, est, h_next};
    }

    const double factor = std::clamp(
        cfg.safety * std::pow(cfg.tolerance / est, 0.2), shrink_cap, 0.5);
    const double h_retry = h * factor;
    if (h_retry < cfg.h_min) {
        throw StepUnderflow("step control requires h = " +
                            std::to_string(h_retry) + " below h_min = " +
                            std::to_string(cfg.h_min) + " at t = " +
                            std::to_string(s.t));
    }
    return Rejection{h_retry, est};
}

Rkf45Stepper::Rkf45Stepper(double a, const Problem& prob,
                           const IntegratorConfig& cfg, double h_cap)
    : prob_(prob), cfg_(cfg), state_{0.0, 0.0, 0.0, a},
      h_(std::min(cfg.h_init, h_cap)), h_cap_(h_cap) {
    cfg_.validate();
    cfg_.h_max = h_cap_;
}

void Rkf45Stepper::advance_to(double t_target, Trajectory* record) {
    const double pos_slack =
        10.0 * cfg_.tolerance * std::max(1.0, std::abs(state_.d2x));

    while (state_.t < t_target) {
        double h = std::min(h_, h_cap_);
        bool final = false;
        if (state_.t + h >= t_target) {
            h = t_target - state_.t;
            final = true;
        }
        if (h <= 0.0) break;

        const StepOutcome out = rkf45_step(state_, prob_, h, cfg_);
        if (const auto* rej = std::get_if<Rejection>(&out)) {
            h_ = rej->h_retry;
            continue;
        }
        const auto& acc = std::get<StepResult>(out);
        state_ = acc.state;
        if (final) state_.t = t_target;
        h_ = std::max(acc.h_next, cfg_.h_min);
        ++steps_;

        if (state_.x < -pos_slack || state_.dx < -pos_slack ||
            state_.d2x < -pos_slack) {
            throw DomainError("trajectory positivity lost at t = " +
                              std::to_string(state_.t));
        }
        if (record) record->samples.push_back(state_);
    }
    if (record) record->steps = steps_;
}

Trajectory integrate(double a, const Problem& prob, double t_end,
                     const IntegratorConfig& cfg) {
    if (!(a > 0.0)) {
        throw DomainError("initial curvature a must be positive");
    }
    if (!(t_end > 0.0)) {
        throw DomainError("integration horizon must be positive");
    }
    const double h_cap = std::min(cfg.h_max, t_end / 10.0);

    Trajectory traj;
    traj.tolerance = cfg.tolerance;
    traj.a = a;
    traj.samples.push_back(State{0.0, 0.0, 0.0, a});

    Rkf45Stepper stepper(a, prob, cfg, h_cap);
    stepper.advance_to(t_end, &traj);
    return traj;
}

} // namespace blasius

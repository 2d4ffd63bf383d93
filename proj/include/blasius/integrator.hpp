#pragma once

#include <cstddef>
#include <limits>
#include <variant>

#include "blasius/model.hpp"

namespace blasius {

/// Controls for the adaptive Runge-Kutta-Fehlberg 4(5) stepper.
struct IntegratorConfig {
    double tolerance = 1e-12; ///< local error control epsilon
    double h_init = 1e-3;
    double h_min = 1e-12;
    double h_max = std::numeric_limits<double>::infinity();
    double safety = 0.9;

    static IntegratorConfig with_tolerance(double eps);
    void validate() const; ///< throws DomainError on inconsistent settings
};

/// An accepted step: advanced state, scaled error estimate, next proposal.
struct StepResult {
    State state;
    double error_estimate = 0.0;
    double h_next = 0.0;
};

/// A rejected step: shrunken retry size and the offending error estimate.
struct Rejection {
    double h_retry = 0.0;
    double error_estimate = 0.0;
};

using StepOutcome = std::variant<StepResult, Rejection>;

/// One raw Fehlberg 4(5) evaluation with step h, no acceptance control.
/// The advanced state is the fifth-order solution; error_estimate is the
/// scaled embedded 4th/5th difference.
struct RawStep {
    State state;
    double error_estimate = 0.0;
};
RawStep rkf45_raw_step(const State& s, const Problem& prob, double h);

/// One controlled step: accepted iff the scaled error estimate is at most
/// cfg.tolerance; otherwise returns a Rejection with the reduced retry size.
/// Throws StepUnderflow if the retry would fall below cfg.h_min.
StepOutcome rkf45_step(const State& s, const Problem& prob, double h,
                       const IntegratorConfig& cfg);

/// Incremental stepper holding the current state of one IVP run.
/// Used directly where output is needed at several interior times.
class Rkf45Stepper {
public:
    Rkf45Stepper(double a, const Problem& prob, const IntegratorConfig& cfg,
                 double h_cap);

    /// Advances to exactly t_target (final step clamped; State::t is assigned
    /// t_target bit-exactly). Appends accepted samples to `record` if given.
    void advance_to(double t_target, Trajectory* record = nullptr);

    const State& state() const { return state_; }
    std::size_t accepted_steps() const { return steps_; }

private:
    Problem prob_;
    IntegratorConfig cfg_;
    State state_;
    double h_ = 0.0;
    double h_cap_ = 0.0;
    std::size_t steps_ = 0;
};

/// Integrates the IVP with x''(0) = a from t = 0 to exactly t_end,
/// recording every accepted step. The effective step cap is
/// min(cfg.h_max, t_end / 10).
/// Throws StepUnderflow (propagated) or DomainError if positivity of the
/// trajectory is lost beyond tolerance slack.
Trajectory integrate(double a, const Problem& prob, double t_end,
                     const IntegratorConfig& cfg);

} // namespace blasius

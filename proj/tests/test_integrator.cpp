#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <variant>

#include "blasius/integrator.hpp"
#include "blasius/quadrature.hpp"

using namespace blasius;

namespace {

// c = 0 turns the equation into x''' = 0; degree-2 solutions are integrated
// exactly by the embedded pair.
const Problem free_problem{1.0, 0.0, 1.0, true};
const Problem linear_problem{0.0, 1.0, 1.0, false}; // x'' = a*exp(-t)

State linear_exact(double a, double t) {
    const double e = std::exp(-t);
    return State{t, a * (t - 1.0 + e), a * (1.0 - e), a * e};
}

} // namespace

TEST_CASE("raw step integrates quadratics exactly") {
    const State s0{0.0, 0.0, 0.0, 1.0};
    const RawStep step = rkf45_raw_step(s0, free_problem, 0.25);
    CHECK(step.state.x == doctest::Approx(0.25 * 0.25 / 2.0).epsilon(1e-15));
    CHECK(step.state.dx == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(step.state.d2x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(step.error_estimate <= 1e-16);
}

TEST_CASE("controlled step accepts and proposes growth when error is tiny") {
    IntegratorConfig cfg = IntegratorConfig::with_tolerance(1e-10);
    const State s0{0.0, 0.0, 0.0, 1.0};
    const StepOutcome out = rkf45_step(s0, free_problem, 1e-3, cfg);
    REQUIRE(std::holds_alternative<StepResult>(out));
    const auto& acc = std::get<StepResult>(out);
    CHECK(acc.error_estimate <= cfg.tolerance);
    CHECK(acc.h_next > 1e-3);
}

TEST_CASE("accepted steps track the linear-case curvature locally") {
    const double eps = 1e-10;
    IntegratorConfig cfg = IntegratorConfig::with_tolerance(eps);
    const Trajectory traj = integrate(1.0, linear_problem, 2.0, cfg);
    for (const State& s : traj.samples) {
        CHECK(std::abs(s.d2x - std::exp(-s.t)) <= 10.0 * eps);
    }
}

TEST_CASE("step underflow is reported") {
    IntegratorConfig cfg = IntegratorConfig::with_tolerance(1e-14);
    cfg.h_min = 1e-2;
    cfg.h_init = 1e-2;
    const Problem stiff{0.0, 200.0, 1.0, false}; // x'' = a*exp(-200 t)
    CHECK_THROWS_AS(integrate(1.0, stiff, 1.0, cfg), StepUnderflow);
}

TEST_CASE("integrate hits the closed-form linear solution") {
    IntegratorConfig cfg = IntegratorConfig::with_tolerance(1e-12);
    const Trajectory traj = integrate(1.0, linear_problem, 10.0, cfg);
    const State& end = traj.samples.back();
    const State exact = linear_exact(1.0, 10.0);
    CHECK(std::abs(end.x - exact.x) < 1e-10);
    CHECK(std::abs(end.dx - exact.dx) < 1e-10);
    CHECK(std::abs(end.d2x - exact.d2x) < 1e-10);
}

TEST_CASE("final sample lands exactly on the requested horizon") {
    IntegratorConfig cfg = IntegratorConfig::with_tolerance(1e-10);
    for (double t_end : {0.7, 3.0, 11.25}) {
        const Trajectory traj = integrate(0.4, linear_problem, t_end, cfg);
        CHECK(traj.samples.back().t == t_end);
    }
    const Problem classical{1.0, 0.5, 1.0, true};
    const Trajectory traj = integrate(0.33, classical, 14.0, cfg);
    CHECK(traj.samples.back().t == 14.0);
}

TEST_CASE("classical run at the reference curvature meets the far slope") {
    IntegratorConfig cfg = IntegratorConfig::with_tolerance(1e-14);
    const Problem classical{1.0, 0.5, 1.0, true};
    const Trajectory traj =
        integrate(0.33205733621519630, classical, 14.0, cfg);
    const State& end = traj.samples.back();
    CHECK(std::abs(end.dx - 1.0) < 1e-13);
    CHECK(std::abs(end.x - 12.279212342480) < 1e-9);
}

TEST_CASE("fixed-step order is at least four") {
    // Global error on the p = 0 oracle over [0, 1] must shrink by >= 2^4
    // when a fixed step is halved.
    const auto global_error = [](double h) {
        State s{0.0, 0.0, 0.0, 1.0};
        const long n = std::lround(1.0 / h);
        for (long i = 0; i < n; ++i) {
            s = rkf45_raw_step(s, linear_problem, h).state;
        }
        const State exact = linear_exact(1.0, 1.0);
        return std::max({std::abs(s.x - exact.x), std::abs(s.dx - exact.dx),
                         std::abs(s.d2x - exact.d2x)});
    };
    const double e1 = global_error(0.05);
    const double e2 = global_error(0.025);
    CHECK(e1 / e2 >= 16.0);
}

TEST_CASE("trajectory monotonicity and a-priori sandwich") {
    const double eps = 1e-12;
    IntegratorConfig cfg = IntegratorConfig::with_tolerance(eps);
    const Problem classical{1.0, 0.5, 1.0, true};
    const double a = 0.332;
    const Trajectory traj = integrate(a, classical, 14.0, cfg);

    for (std::size_t i = 1; i < traj.samples.size(); ++i) {
        const State& prev = traj.samples[i - 1];
        const State& cur = traj.samples[i];
        CHECK(cur.x > prev.x - 10.0 * eps);
        CHECK(cur.dx > prev.dx - 10.0 * eps);
        CHECK(cur.d2x < prev.d2x + 10.0 * eps);
    }
    for (const State& s : traj.samples) {
        if (s.t <= 0.0) continue;
        CHECK(s.x > 0.0);
        CHECK(s.x < 0.5 * a * s.t * s.t + 10.0 * eps);
        CHECK(s.dx > 0.0);
        CHECK(s.dx < a * s.t + 10.0 * eps);
        CHECK(s.d2x > 0.0);
        CHECK(s.d2x < a + 10.0 * eps);
    }
}

TEST_CASE("curvature integral identity along the trajectory") {
    IntegratorConfig cfg = IntegratorConfig::with_tolerance(1e-12);
    const Problem classical{1.0, 0.5, 1.0, true};
    const double a = 0.332057;
    const Trajectory traj = integrate(a, classical, 14.0, cfg);
    const std::vector<double> cum = cumulative_power_integral(traj, 1.0);
    REQUIRE(cum.size() == traj.samples.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < cum.size(); ++i) {
        const double predicted = a * std::exp(-0.5 * cum[i]);
        worst = std::max(worst, std::abs(traj.samples[i].d2x - predicted));
    }
    CHECK(worst <= 1e-8 * a);
}

TEST_CASE("config validation") {
    IntegratorConfig cfg = IntegratorConfig::with_tolerance(1e-10);
    CHECK_NOTHROW(cfg.validate());
    cfg.h_min = 1.0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = IntegratorConfig::with_tolerance(-1.0);
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = IntegratorConfig::with_tolerance(1e-10);
    cfg.safety = 1.5;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("integrate rejects bad launch data") {
    IntegratorConfig cfg = IntegratorConfig::with_tolerance(1e-10);
    CHECK_THROWS_AS(integrate(-1.0, linear_problem, 1.0, cfg), DomainError);
    CHECK_THROWS_AS(integrate(1.0, linear_problem, -2.0, cfg), DomainError);
}

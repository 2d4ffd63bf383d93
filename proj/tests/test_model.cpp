#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "blasius/model.hpp"

using namespace blasius;

TEST_CASE("validate_problem stamps the proven regime") {
    const Problem classical = validate_problem(1.0, 0.5, 1.0);
    CHECK(classical.proven_regime);
    CHECK(classical.p == 1.0);
    CHECK(classical.c == 0.5);
    CHECK(classical.beta == 1.0);

    const Problem fractional = validate_problem(0.1, 0.5, 1.0);
    CHECK_FALSE(fractional.proven_regime);

    CHECK(validate_problem(0.0, 1.0, 1.0).proven_regime == false);
    CHECK(validate_problem(7.0, 0.5, 1.0).proven_regime);
}

TEST_CASE("validate_problem rejects out-of-domain input") {
    CHECK_THROWS_AS(validate_problem(1.0, -0.5, 1.0), DomainError);
    CHECK_THROWS_AS(validate_problem(1.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(validate_problem(1.0, 0.5, -1.0), DomainError);
    CHECK_THROWS_AS(validate_problem(-0.5, 0.5, 1.0), DomainError);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate_problem(nan, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(validate_problem(1.0, inf, 1.0), DomainError);
    CHECK_THROWS_AS(validate_problem(1.0, 0.5, nan), DomainError);
}

TEST_CASE("validate_problem is idempotent") {
    const Problem a = validate_problem(2.0, 1.5, 0.25);
    const Problem b = validate_problem(a.p, a.c, a.beta);
    CHECK(a.p == b.p);
    CHECK(a.c == b.c);
    CHECK(a.beta == b.beta);
    CHECK(a.proven_regime == b.proven_regime);
}

TEST_CASE("rhs direct substitution") {
    const Problem prob{1.0, 0.5, 1.0, true};
    SUBCASE("third component vanishes at the origin for p > 0") {
        for (double p : {0.1, 1.0, 2.0, 7.0}) {
            const Problem pr{p, 0.5, 1.0, p >= 1.0};
            const Deriv d = rhs(State{0.0, 0.0, 0.0, 0.4}, pr);
            CHECK(d.dx == 0.0);
            CHECK(d.d2x == 0.4);
            CHECK(d.d3x == 0.0);
        }
    }
    SUBCASE("p=1, c=0.5") {
        const Deriv d = rhs(State{1.0, 1.0, 0.3, 2.0}, prob);
        CHECK(d.dx == 0.3);
        CHECK(d.d2x == 2.0);
        CHECK(d.d3x == doctest::Approx(-1.0).epsilon(1e-15));
    }
    SUBCASE("p=2, c=1") {
        const Problem pr{2.0, 1.0, 1.0, true};
        const Deriv d = rhs(State{0.5, 2.0, 1.0, 3.0}, pr);
        CHECK(d.d3x == doctest::Approx(-12.0).epsilon(1e-15));
    }
}

TEST_CASE("rhs is positively homogeneous in x''") {
    unsigned long rng = 0x2545F4914F6CDD1DULL;
    const auto next = [&rng]() {
        rng ^= rng << 13;
        rng ^= rng >> 7;
        rng ^= rng << 17;
        return static_cast<double>(rng % 100000) / 100000.0;
    };
    for (int i = 0; i < 200; ++i) {
        const Problem pr{0.25 + 4.0 * next(), 0.1 + 2.0 * next(), 1.0, true};
        const State s{next(), 3.0 * next(), next(), 0.01 + next()};
        const double lambda = 0.1 + 5.0 * next();
        const Deriv base = rhs(s, pr);
        State scaled = s;
        scaled.d2x *= lambda;
        const Deriv d = rhs(scaled, pr);
        CHECK(d.d3x == doctest::Approx(lambda * base.d3x).epsilon(1e-12));
    }
}

TEST_CASE("rhs rejects fractional powers of negative x only") {
    const Problem frac{0.5, 1.0, 1.0, false};
    CHECK_THROWS_AS(rhs(State{1.0, -1.0, 0.0, 1.0}, frac), DomainError);

    const Problem integer{2.0, 1.0, 1.0, true};
    const Deriv d = rhs(State{1.0, -2.0, 0.0, 3.0}, integer);
    CHECK(d.d3x == doctest::Approx(-12.0));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "blasius/estimates.hpp"

using namespace blasius;

namespace {

// 25-digit references from a high-precision series/product evaluation.
struct GammaRef {
    double z;
    double value;
};
constexpr GammaRef gamma_refs[] = {
    {0.02, 49.44221016319566344276028},
    {1.0 / 15.0, 14.48496087196461910794985},
    {0.125, 7.53394159879761190469923},
    {2.0 / 15.0, 7.040579121411245604500275},
    {1.0 / 3.0, 2.678938534707747633655693},
    {0.5, 1.772453850905516027298167},
    {5.0 / 6.0, 1.128787029908125961260901},
    {10.0 / 11.0, 1.061403737912156595588606},
    {1.0, 1.0},
    {1.4616321449683623, 0.8856031944108887002788159},
    {5.0 / 3.0, 0.9027452929509336112968587},
    {2.0, 1.0},
    {4.0, 6.0},
    {7.5, 1871.254305797788346476077},
    {15.2, 149037380723.38639687459},
    {29.0, 3.04888344611713860501504e+29},
    {50.0, 6.082818640342675608722522e+62},
};

constexpr double blasius_c1 = 2.396858957865604429248;
constexpr double blasius_c2 = 2.04441273040327472476;
constexpr double blasius_c3 = 2.365861957663748554882;
constexpr double blasius_c4 = 2.365861957663748554882;
constexpr double blasius_c5 = 3.082406267885694056604;

} // namespace

TEST_CASE("gamma_fn matches high-precision references to 1e-13") {
    for (const GammaRef& ref : gamma_refs) {
        CHECK(gamma_fn(ref.z) ==
              doctest::Approx(ref.value).epsilon(1e-13));
    }
}

TEST_CASE("gamma_fn recurrence property") {
    for (double z = 0.05; z < 40.0; z += 0.617) {
        CHECK(gamma_fn(z + 1.0) ==
              doctest::Approx(z * gamma_fn(z)).epsilon(1e-13));
    }
}

TEST_CASE("gamma_fn domain errors") {
    CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-1.5), DomainError);
    CHECK_THROWS_AS(gamma_fn(std::numeric_limits<double>::quiet_NaN()),
                    DomainError);
    CHECK_THROWS_AS(gamma_fn(std::numeric_limits<double>::infinity()),
                    DomainError);
}

TEST_CASE("constants for the classical problem") {
    const Problem prob = validate_problem(1.0, 0.5, 1.0);
    const BoundsSet b = constants(prob);
    CHECK(b.c1 == doctest::Approx(blasius_c1).epsilon(1e-13));
    CHECK(b.c2 == doctest::Approx(blasius_c2).epsilon(1e-13));
    CHECK(b.c3 == doctest::Approx(blasius_c3).epsilon(1e-13));
    CHECK(b.c4 == doctest::Approx(blasius_c4).epsilon(1e-13));
    CHECK(b.c5 == doctest::Approx(blasius_c5).epsilon(1e-13));
}

TEST_CASE("constants collapse at the p=0 edge") {
    const Problem prob = validate_problem(0.0, 1.0, 1.0);
    const BoundsSet b = constants(prob);
    CHECK(b.c2 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(b.c3 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(b.c1 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(b.c4 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(b.c5 == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("constants are positive with c1 above c3/c2; c4 equals c3") {
    for (double p : {1.0, 2.0, 3.0, 7.0}) {
        for (double c : {0.5, 1.0, 2.0}) {
            const BoundsSet b = constants(validate_problem(p, c, 1.0));
            CHECK(b.c1 > 0.0);
            CHECK(b.c2 > 0.0);
            CHECK(b.c3 > 0.0);
            CHECK(b.c4 > 0.0);
            CHECK(b.c5 > 0.0);
            CHECK(b.c1 > b.c3 / b.c2);
            CHECK(b.c4 == doctest::Approx(b.c3).epsilon(1e-14));
        }
    }
}

TEST_CASE("h_bounds") {
    const Problem p0 = validate_problem(0.0, 1.0, 1.0);
    const BoundsSet b0 = constants(p0);
    SUBCASE("p=0 lower bound is the exact limit slope a/c") {
        const Bounds hb = h_bounds(2.0, b0, p0);
        CHECK(hb.lo == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(hb.lo < hb.hi);
    }
    SUBCASE("both bounds vanish as a -> 0") {
        const Bounds hb = h_bounds(1e-12, b0, p0);
        CHECK(hb.hi < 1e-11);
        CHECK(hb.lo > 0.0);
    }
    SUBCASE("classical problem at the solved curvature") {
        const Problem pr = validate_problem(1.0, 0.5, 1.0);
        const Bounds hb = h_bounds(0.332057336215, constants(pr), pr);
        CHECK(hb.lo ==
              doctest::Approx(blasius_c2 * std::pow(0.332057336215, 2.0 / 3.0))
                  .epsilon(1e-14));
        CHECK(hb.lo < 1.0);
        CHECK(hb.hi > 1.0);
    }
}

TEST_CASE("mu_bounds") {
    const Problem p0 = validate_problem(0.0, 1.0, 1.0);
    const BoundsSet b0 = constants(p0);
    SUBCASE("p=0 exact mu = a/c^2 is contained") {
        const Bounds mb = mu_bounds(1.0, b0, p0);
        // the lower bound is exactly attained at p = 0, allow roundoff
        CHECK(mb.lo <= 1.0 + 1e-14);
        CHECK(mb.hi >= 1.0);
    }
    SUBCASE("lo/hi ratio does not depend on a") {
        const Problem pr = validate_problem(3.0, 0.5, 1.0);
        const BoundsSet b = constants(pr);
        const Bounds m1 = mu_bounds(0.3, b, pr);
        const Bounds m2 = mu_bounds(4.7, b, pr);
        CHECK(m1.hi / m1.lo == doctest::Approx(m2.hi / m2.lo).epsilon(1e-12));
    }
}

TEST_CASE("bracket reproduces the published intervals") {
    SUBCASE("p=1") {
        const Problem pr = validate_problem(1.0, 0.5, 1.0);
        const Bracket br = bracket(pr, constants(pr));
        CHECK(std::abs(br.a_min - 0.2694860459) < 1e-9);
        CHECK(std::abs(br.a_max - 0.3420953216) < 1e-9);
    }
    SUBCASE("p=7") {
        const Problem pr = validate_problem(7.0, 0.5, 1.0);
        const Bracket br = bracket(pr, constants(pr));
        CHECK(std::abs(br.a_min - 0.3733978388) < 1e-9);
        CHECK(std::abs(br.a_max - 0.3805482427) < 1e-9);
    }
    SUBCASE("p=0: the upper endpoint is the exact solution beta*c") {
        const Problem pr = validate_problem(0.0, 1.0, 1.0);
        const Bracket br = bracket(pr, constants(pr));
        CHECK(br.a_max == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(br.a_min == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("beta = 0 is rejected") {
        const Problem pr = validate_problem(1.0, 0.5, 0.0);
        CHECK_THROWS_AS(bracket(pr, constants(pr)), DomainError);
    }
}

TEST_CASE("lower_line") {
    const Problem pr = validate_problem(1.0, 0.5, 1.0);
    const BoundsSet b = constants(pr);
    SUBCASE("slope equals the lower h bound") {
        for (double a : {0.05, 0.27, 1.0, 6.0}) {
            CHECK(lower_line(a, b, pr).slope ==
                  doctest::Approx(h_bounds(a, b, pr).lo).epsilon(1e-15));
        }
    }
    SUBCASE("published bracket endpoint") {
        const LowerLine line = lower_line(0.2694860459, b, pr);
        CHECK(line.slope == doctest::Approx(0.85295495744306).epsilon(1e-8));
        CHECK(line.intercept ==
              doctest::Approx(1.5281576558965).epsilon(1e-8));
        CHECK(line.crossing() > 0.0);
    }
    SUBCASE("power-law scaling in a") {
        const double e = (pr.p + 1.0) / (2.0 * pr.p + 1.0);
        const LowerLine l1 = lower_line(0.4, b, pr);
        const LowerLine l8 = lower_line(3.2, b, pr);
        CHECK(l8.slope ==
              doctest::Approx(std::pow(8.0, e) * l1.slope).epsilon(1e-13));
    }
}

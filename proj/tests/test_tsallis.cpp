#include <cmath>
#include <numbers>

#include "doctest.h"
#include "umbraq/tsallis.hpp"

using namespace umbraq;

TEST_CASE("Tsallis exponential") {
    CHECK(tsallis_exp(0.7, 1.0) == doctest::Approx(std::exp(0.7)));
    CHECK(tsallis_exp(-1.0, 0.5) == doctest::Approx(0.25));
    CHECK(tsallis_exp(-3.0, 0.5) == 0.0);  // past the support edge
    CHECK(tsallis_exp(1.0, 0.5) == doctest::Approx(2.25));
    CHECK(std::fabs(tsallis_exp(0.7, 1.0 - 1e-9) - std::exp(0.7)) < 1e-8);
    CHECK_THROWS_AS(TsallisParam(0.0), DomainError);
    CHECK_THROWS_AS(TsallisParam(1.2), DomainError);
}

TEST_CASE("Tsallis moments") {
    const TsallisParam Q(0.5);
    // Gamma(3)/Gamma(3 - mu)
    CHECK(tsallis_moment(0, Q) == doctest::Approx(1.0));
    CHECK(tsallis_moment(1, Q) == doctest::Approx(2.0));
    CHECK(tsallis_moment(2, Q) == doctest::Approx(2.0));
    CHECK(tsallis_moment(3, Q) == 0.0);
    CHECK(tsallis_moment(-0.5, Q) == doctest::Approx(2.0 / std::tgamma(3.5)).epsilon(1e-13));
    const TsallisParam small(0.01);
    CHECK(tsallis_moment(-0.5, small) == doctest::Approx(std::exp(std::lgamma(101.0) - std::lgamma(101.5))).epsilon(1e-12));
}

TEST_CASE("Tsallis Gaussian integral: closed form against quadrature") {
    for (double q : {0.01, 0.25, 0.5, 0.9, 1.0}) {
        const auto r = tsallis_gaussian_integral(TsallisParam(q));
        CHECK(r.numeric.value == doctest::Approx(r.closed).epsilon(1e-10));
    }
    CHECK(tsallis_gaussian_integral(TsallisParam(1.0)).closed == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    // Q -> 0 recovers sqrt(pi)
    CHECK(std::fabs(tsallis_gaussian_integral(TsallisParam(1e-4)).closed - std::sqrt(std::numbers::pi)) < 1e-3);
}

TEST_CASE("Tsallis Hermite polynomials and generating function") {
    const TsallisParam Q(0.5);
    // H_2 = y^2 - 2 Q moment(1) = y^2 - 2
    CHECK(tsallis_hermite(2, 1.5, Q) == doctest::Approx(2.25 - 2.0));
    CHECK(tsallis_hermite(0, 0.3, Q) == 1.0);
    CHECK(tsallis_genfun_residual(0.3, 0.4, Q, 30) < 1e-14);
    CHECK(tsallis_genfun_closed_residual(0.3, 0.4, Q, 30) < 1e-12);
}

#include <cmath>

#include "doctest.h"
#include "umbraq/umbral.hpp"

using namespace umbraq;

namespace {

// sum_r (-t)^r / (r! [k r + a]_q!) in long double, integer a and k only
long double image_series_oracle(double t, int a, int k, double q) {
    long double sum = 0.0L;
    for (int r = 0; r < 200; ++r) {
        long double term = 1.0L;
        for (int i = 1; i <= r; ++i) term *= -t / static_cast<long double>(i);
        for (int i = 1; i <= k * r + a; ++i) term *= (1.0L - q) / (1.0L - std::pow(static_cast<long double>(q), i));
        sum += term;
        if (r > 10 && std::fabs(term) < 1e-30L) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("q-image moments are reciprocal q-factorials") {
    const QParam q(0.6);
    const auto c = q_image(q);
    CHECK(c.moment(0) == doctest::Approx(1.0));
    CHECK(c.moment(3) == doctest::Approx(1.0 / q_factorial(3, q)).epsilon(1e-14));
    CHECK(c.moment(2.5) == doctest::Approx(1.0 / q_gamma(3.5, q).value).epsilon(1e-13));
    CHECK(c.moment(-1) == 0.0);
    CHECK(c.ratio(2.0) == doctest::Approx(c.moment(3) / c.moment(2)).epsilon(1e-14));
    const auto seq = c.moment_sequence(1.0, 2, 4);
    REQUIRE(seq.size() == 4);
    CHECK(seq[3] == doctest::Approx(c.moment(7)).epsilon(1e-13));
    CHECK(c.series_gate() == doctest::Approx(1.0 / 1.6));
    CHECK(c.spectral() != nullptr);
    // the spectral measure reproduces the moments
    long double m2 = 0.0L;
    for (std::size_t j = 0; j < c.spectral()->nodes.size(); ++j)
        m2 += c.spectral()->weights[j] * c.spectral()->nodes[j] * c.spectral()->nodes[j];
    CHECK(static_cast<double>(m2) == doctest::Approx(c.moment(2)).epsilon(1e-10));
}

TEST_CASE("image series: brute-force oracle") {
    for (double q : {0.5, 0.9}) {
        const auto c = q_image(QParam(q));
        for (double t : {0.5, 3.0, 10.0})
            for (int k : {1, 2})
                for (int a : {0, 1}) {
                    const double oracle = static_cast<double>(image_series_oracle(t, a, k, q));
                    CHECK(image_series(c, t, a, k).value == doctest::Approx(oracle).epsilon(1e-9).scale(1e-12));
                }
    }
    // mpmath hypergeometric sums
    CHECK(image_series(q_image(QParam(0.5)), 10.0, 0, 1).value == doctest::Approx(-1.072622024194e-02).epsilon(1e-9));
    CHECK(image_series(q_image(QParam(0.9)), 10.0, 0, 1).value == doctest::Approx(1.611319552555e-01).epsilon(1e-9));
}

TEST_CASE("umbral rationals: series, Laplace and spectral routes agree") {
    const auto c = q_image(QParam(0.9));
    // inside the series gate all three routes apply
    for (double x : {0.1, 0.3, 0.5})
        for (int a : {0, 1}) {
            const double s = umbral_rational_series(c, x, a, 2);
            CHECK(umbral_rational_integral(c, x, a, 2).value == doctest::Approx(s).epsilon(1e-10));
            CHECK(umbral_rational_spectral(c, x, a, 2) == doctest::Approx(s).epsilon(1e-10));
        }
    // mpmath references well outside the gate
    CHECK(umbral_rational(c, 2.0, 1, 2) == doctest::Approx(0.8229758418327913).epsilon(1e-10));
    CHECK(umbral_rational(c, 10.0, 1, 2) == doctest::Approx(0.038994006884031854).epsilon(1e-9));
    CHECK(umbral_rational(c, 10.0, 1, 2, EvalMethod::borel_integral) ==
          doctest::Approx(umbral_rational_spectral(c, 10.0, 1, 2)).epsilon(1e-9));
    CHECK_THROWS_AS(umbral_rational(c, 10.0, 1, 2, EvalMethod::series), SeriesDivergence);
}

TEST_CASE("umbral exponential") {
    const QParam q(0.7);
    const auto c = q_image(q);
    // sum (-x)^r / (r! [r]_q!) at x = 0 and a shifted image
    CHECK(umbral_exp(c, 0.0, 0.0) == doctest::Approx(1.0));
    CHECK(umbral_exp(c, 0.0, 2.0) == doctest::Approx(1.0 / q_factorial(2, q)));
    CHECK(umbral_exp(c, 2.0, 0.0) == doctest::Approx(static_cast<double>(image_series_oracle(2.0, 0, 1, 0.7))).epsilon(1e-12));
}

TEST_CASE("no spectral measure for q close to 1") {
    const auto c = q_image(QParam(0.999));
    CHECK(c.spectral() == nullptr);
    CHECK_THROWS(umbral_rational_spectral(c, 1.0, 0, 1));
    // 1/(1 + c x) at q = 0.999 is close to the classical 1/(1 + x) Laplace value
    const double v = umbral_rational(c, 1.0, 0, 1);
    CHECK(std::isfinite(v));
    CHECK(v == doctest::Approx(std::exp(-1.0)).epsilon(1e-2));
}

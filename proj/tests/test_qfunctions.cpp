#include <cmath>
#include <complex>

#include "doctest.h"
#include "umbraq/qfunctions.hpp"

using namespace umbraq;

namespace {

// qe(x) = 1 / prod_{n>=0} (1 + x (1-q) q^n), x > -1/(1-q)
double q_exp_product(double x, double q) {
    long double p = 1.0L;
    for (int n = 0; n < 100000; ++n) {
        const long double f = x * (1.0L - q) * std::pow(static_cast<long double>(q), n);
        p *= 1.0L + f;
        if (std::fabs(f) < 1e-20L) break;
    }
    return static_cast<double>(1.0L / p);
}

// q_cos + i q_sin = 1 / prod (1 - i x (1-q) q^n)
std::complex<double> q_trig_product(double x, double q) {
    std::complex<long double> p = 1.0L;
    for (int n = 0; n < 100000; ++n) {
        const long double f = x * (1.0L - q) * std::pow(static_cast<long double>(q), n);
        p *= std::complex<long double>(1.0L, -f);
        if (f < 1e-20L) break;
    }
    const auto r = 1.0L / p;
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

double factorial_q(int n, double q) {
    double f = 1.0;
    for (int k = 1; k <= n; ++k) f *= (1.0 - std::pow(q, k)) / (1.0 - q);
    return f;
}

}  // namespace

TEST_CASE("q-exponential against its infinite product") {
    for (double q : {0.3, 0.5, 0.9})
        for (double x : {0.0, 0.3, 1.0, 4.0, 20.0}) {
            // the Laplace route controls error against int e^{-s}|E(xs)|, not against the (tiny) result
            CHECK(q_exp(x, QParam(q)) == doctest::Approx(q_exp_product(x, q)).epsilon(1e-8).scale(1e-3));
            CHECK(q_exp(x, QParam(q), EvalMethod::borel_integral) ==
                  doctest::Approx(q_exp_product(x, q)).epsilon(1e-8).scale(1e-3));
        }
    CHECK(q_exp(0.3, QParam(0.5)) == doctest::Approx(0.751138907641992).epsilon(1e-13));
    CHECK(q_exp(-0.5, QParam(0.5), EvalMethod::series) == doctest::Approx(q_exp_product(-0.5, 0.5)).epsilon(1e-13));
}

TEST_CASE("q-cos and q-sin against the complex product") {
    for (double q : {0.4, 0.6, 0.9})
        for (double x : {0.2, 1.0, 3.0, 8.0}) {
            const auto z = q_trig_product(x, q);
            CHECK(q_cos(x, QParam(q)) == doctest::Approx(z.real()).epsilon(1e-9).scale(1e-12));
            CHECK(q_sin(x, QParam(q)) == doctest::Approx(z.imag()).epsilon(1e-9).scale(1e-12));
        }
}

TEST_CASE("Tricomi functions: brute-force sums and divergence") {
    for (double q : {0.5, 0.8})
        for (double x : {0.5, 2.0}) {
            double s1 = 0.0, sq = 0.0, rf = 1.0;
            for (int r = 0; r < 60; ++r) {
                if (r > 0) rf *= r;
                const double fq = factorial_q(r, q);
                s1 += std::pow(-x, r) / (rf * fq);
                sq += std::pow(-x, r) / (fq * fq);
            }
            CHECK(tricomi_q1(x, QParam(q)) == doctest::Approx(s1).epsilon(1e-12));
            if (x < 1.0 / ((1 - q) * (1 - q))) CHECK(tricomi_qq(x, QParam(q)) == doctest::Approx(sq).epsilon(1e-10));
        }
    // mpmath references
    CHECK(tricomi_q1(20.0, QParam(0.5)) == doctest::Approx(0.02995875761936685799).epsilon(1e-10));
    CHECK(tricomi_q1(5.0, QParam(0.7)) == doctest::Approx(-0.2498390261943551679).epsilon(1e-11));
    CHECK_THROWS_AS(tricomi_qq(4.5, QParam(0.5)), SeriesDivergence);
}

TEST_CASE("q-Bessel: reference value and classical limit") {
    CHECK(q_bessel(1.5, 3.0, QParam(0.6)) == doctest::Approx(0.3711422584538873932).epsilon(1e-11));
    CHECK_THROWS_AS(q_bessel(-1.0, 1.0, QParam(0.5)), DomainError);
    // q -> 1: J_mu of the classical kind, error O(1 - q)
    for (double mu : {0.0, 1.0, 2.5})
        for (double z : {0.5, 2.0, 5.0})
            CHECK(std::fabs(q_bessel(mu, z, QParam(0.9999)) - std::cyl_bessel_j(mu, z)) < 5e-3);
}

TEST_CASE("Hermite polynomials and Gaussian derivatives") {
    CHECK(hermite2(0, 1.3, 0.7) == 1.0);
    CHECK(hermite2(2, 1.5, 0.5) == doctest::Approx(1.5 * 1.5 + 2 * 0.5));
    CHECK(hermite2(3, 2.0, -1.0) == doctest::Approx(8.0 - 6.0 * 2.0));
    // (-1)^n d^n e^{-x^2} = H_n(2x, -1) e^{-x^2}
    for (int n = 0; n < 6; ++n)
        CHECK(gaussian_derivative(n, 1.0, 0.7) == doctest::Approx(hermite2(n, 1.4, -1.0) * std::exp(-0.49)));
    CHECK(gaussian_derivative(1, 1.0, 0.7) == doctest::Approx(1.4 * std::exp(-0.49)));
}

TEST_CASE("q-Gaussian derivatives: expansion vs series, parity, limit") {
    for (double q : {0.4, 0.7})
        for (int n : {0, 1, 2, 3, 5})
            for (double x : {0.05, 0.4, 1.0, 1.8}) {
                const double s = q_gaussian_derivative_series(n, x, QParam(q));
                CHECK(q_gaussian_derivative(n, x, QParam(q)) == doctest::Approx(s).epsilon(1e-9).scale(1e-12));
                CHECK(q_gaussian_derivative(n, -x, QParam(q)) ==
                      doctest::Approx((n % 2 ? -1.0 : 1.0) * s).epsilon(1e-9).scale(1e-12));
            }
    CHECK(q_gaussian_derivative(0, 1.0, QParam(0.999)) == doctest::Approx(0.22398).epsilon(1e-4));
    // C(x^2) -> J_0(2x) as q -> 1
    for (double x : {0.3, 1.2, 2.5})
        CHECK(std::fabs(q_gaussian_derivative(0, x, QParam(0.9999)) - std::cyl_bessel_j(0.0, 2 * x)) < 1e-3);
}

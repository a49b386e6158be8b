#include <cmath>
#include <numbers>

#include "doctest.h"
#include "umbraq/quadrature.hpp"

using namespace umbraq;
using std::numbers::pi;

namespace {
ToleranceConfig tight() {
    ToleranceConfig t;
    t.rel_tol = 1e-12;
    t.abs_tol = 1e-15;
    return t;
}
}  // namespace

TEST_CASE("finite-interval adaptive rule") {
    const auto r = integrate([](double x) { return std::sin(x); }, 0.0, pi, tight());
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(r.converged);
    CHECK(r.evaluations >= 15);
    // integrable endpoint singularity
    ToleranceConfig loose;
    loose.rel_tol = 1e-8;
    const auto s = integrate([](double x) { return x > 0 ? 1.0 / std::sqrt(x) : 0.0; }, 0.0, 1.0, loose);
    CHECK(s.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("Laplace integrals") {
    CHECK(gauss_laguerre([](double s) { return s * s; }) == doctest::Approx(2.0).epsilon(1e-13));
    // int e^{-s}/(1+s) = e E_1(1)
    const auto r = laplace_integral([](double s) { return 1.0 / (1.0 + s); }, tight());
    CHECK(r.value == doctest::Approx(0.5963473623231940743).epsilon(1e-12));
    const auto c = laplace_integral([](double s) { return std::cos(3.0 * s); }, tight());
    CHECK(c.value == doctest::Approx(0.1).epsilon(1e-11));
}

TEST_CASE("improper integrals with tail models") {
    const auto lor = real_line_integral([](double x) { return 1.0 / (1.0 + 2.0 * x * x); },
                                        TailPolicy::algebraic(2.0, 20.0), tight());
    CHECK(lor.value == doctest::Approx(pi / std::sqrt(2.0)).epsilon(1e-9));
    const auto g = real_line_integral([](double x) { return std::exp(-x * x); }, TailPolicy::exponential(6.0, 1.0),
                                      tight());
    CHECK(g.value == doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
    const auto h = halfline_integral([](double x) { return 1.0 / ((1.0 + x * x) * (1.0 + x * x)); },
                                     TailPolicy::algebraic(4.0, 10.0), tight());
    CHECK(h.value == doctest::Approx(pi / 4).epsilon(1e-11));
}

TEST_CASE("oscillatory half-line integrals") {
    ToleranceConfig t;
    t.rel_tol = 1e-10;
    const auto sinc = oscillatory_halfline_integral([](double x) { return x == 0 ? 1.0 : std::sin(x) / x; },
                                                    TailPolicy::algebraic(1.5, 10.0), t);
    CHECK(sinc.value == doctest::Approx(pi / 2).epsilon(1e-8));
    const auto fres = oscillatory_halfline_integral([](double x) { return std::cos(x * x); },
                                                    TailPolicy::algebraic(1.5, 10.0), t, 0.05);
    CHECK(fres.value == doctest::Approx(std::sqrt(pi / 8)).epsilon(1e-8));
}

TEST_CASE("Wynn epsilon accelerates an alternating series") {
    std::vector<double> s;
    double acc = 0.0;
    for (int k = 0; k < 12; ++k) {
        acc += (k % 2 ? -1.0 : 1.0) / (k + 1.0);
        s.push_back(acc);
    }
    const auto e = wynn_epsilon(s);
    CHECK(e.value == doctest::Approx(std::log(2.0)).epsilon(1e-9));
    CHECK(std::fabs(s.back() - std::log(2.0)) > 1e-2);
}

TEST_CASE("declared tail model violations are reported") {
    // 1/x decays slower than the declared x^-4 model
    CHECK_THROWS_AS(halfline_integral([](double x) { return 1.0 / (1.0 + x); }, TailPolicy::algebraic(4.0, 10.0), tight()),
                    TailModelViolation);
    CHECK_THROWS_AS(TailPolicy::algebraic(1.0).validate(), DomainError);
}

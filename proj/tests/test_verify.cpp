#include <cmath>
#include <numbers>

#include "doctest.h"
#include "umbraq/verify.hpp"

using namespace umbraq;

TEST_CASE("effective tolerance is the tighter of native and threshold") {
    SuiteConfig cfg;
    CHECK(effective_tolerance(1e-8, cfg) == 1e-8);
    cfg.threshold = 1e-10;
    CHECK(effective_tolerance(1e-8, cfg) == 1e-10);
    CHECK(effective_tolerance(1e-12, cfg) == 1e-12);
}

TEST_CASE("Gaussian integral identity") {
    const auto r = check_q_gaussian_integral(0.5);
    CHECK(r.passed);
    CHECK(r.rhs_closed == doctest::Approx(std::numbers::pi / std::sqrt(2.471286890943179378)).epsilon(1e-12));
    CHECK(r.rel_residual < 1e-9);
}

TEST_CASE("power integral: naive form is off, corrected form holds") {
    // at m = 2 the corrected form is half the Gaussian constant pi / sqrt(pi_q)
    CHECK(power_integral_rhs(2, 0.5, PowerForm::corrected) ==
          doctest::Approx(std::numbers::pi / (2 * std::sqrt(2.471286890943179378))).epsilon(1e-12));
    const auto naive = check_power_integral(2, 0.5, {}, PowerForm::naive);
    const auto corrected = check_power_integral(2, 0.5, {}, PowerForm::corrected);
    CHECK_FALSE(naive.passed);
    CHECK(naive.identity_id == "power_integral_naive_m2");
    CHECK(corrected.passed);
    CHECK(corrected.identity_id == "power_integral_m2");
    CHECK(naive.lhs_numeric == doctest::Approx(corrected.lhs_numeric));
}

TEST_CASE("q-trig and Jackson batteries at one q") {
    for (const auto& r : check_qtrig(0.6)) {
        INFO(r.identity_id);
        CHECK(r.passed);
    }
    for (const auto& r : check_jackson(0.6)) {
        INFO(r.identity_id);
        CHECK(r.passed);
    }
    CHECK(check_q_gaussian_derivatives(0.6).passed);
}

TEST_CASE("Tsallis battery") {
    const auto rs = check_tsallis();
    CHECK(rs.size() >= 4);
    CHECK(all_passed(rs));
}

TEST_CASE("continuity guard and suite plumbing") {
    CHECK(check_rhs_continuity({0.4, 0.6, 0.9}).passed);
    CHECK(run_suite({}).empty());
    SuiteConfig strict;
    strict.threshold = 1e-300;
    const auto r = check_q_gaussian_integral(0.5, strict);
    CHECK_FALSE(r.passed);
    CHECK(r.tolerance == 1e-300);
}

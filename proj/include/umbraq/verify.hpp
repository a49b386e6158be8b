#pragma once

// Integral identities of the q-image, each checked as closed form against an
// independent quadrature of the concretely evaluated function, plus the
// q-trig, Jackson/Hermite and Tsallis batteries.  Residual-type checks report
// lhs = residual, rhs = 0.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umbraq/kernels.hpp"
#include "umbraq/qcore.hpp"

namespace umbraq {

inline constexpr const char* kSuiteVersion = "1.0";

struct IdentityReport {
    std::string identity_id;
    double q = 0.0;  // 0 for q-independent checks
    double lhs_numeric = 0.0;
    double rhs_closed = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::int64_t runtime_ms = 0;
    std::string note;
};

struct SuiteConfig {
    ToleranceConfig numerics{1e-12, 1e-14};    // series / product evaluation
    ToleranceConfig quadrature{1e-9, 1e-13};   // outer integrals
    /// When set, each identity passes only below min(its own tolerance, this).
    std::optional<double> threshold;
    kernels::Exec exec = kernels::Exec::automatic;
};

/// Acceptance threshold for an identity with native tolerance `native`.
double effective_tolerance(double native, const SuiteConfig& cfg);

IdentityReport check_q_gaussian_integral(double q, const SuiteConfig& cfg = {});

/// Half-line q-Fresnel integrals of q_cos(y^2) and q_sin(y^2) against
/// pi / sqrt(8 pi_q).
std::pair<IdentityReport, IdentityReport> check_q_fresnel(double q, const SuiteConfig& cfg = {});

enum class PowerForm {
    naive,     // (1/m) qGamma((m-1)/m), off by O(1)
    corrected  // Gamma(1/m) Gamma(1-1/m) / (m qGamma(1-1/m))
};
double power_integral_rhs(int m, double q, PowerForm form, const ToleranceConfig& tol = {});
IdentityReport check_power_integral(int m, double q, const SuiteConfig& cfg = {},
                                    PowerForm form = PowerForm::naive);

IdentityReport check_tricomi_gaussian(double q, const SuiteConfig& cfg = {});

/// int_0^inf e^{-s} [int_R C(x^2 s) dx] ds = pi / sqrt(pi_q) by nested
/// quadrature (outer variable s = u^2 to remove the s^{-1/2} endpoint).
IdentityReport check_borel_chain(double q, const SuiteConfig& cfg = {});

/// Inner integral of the Borel chain, int_R C(x^2 s) dx.
double borel_chain_inner(double s, double q, const SuiteConfig& cfg = {});

std::vector<IdentityReport> check_qtrig(double q, const SuiteConfig& cfg = {});
std::vector<IdentityReport> check_jackson(double q, const SuiteConfig& cfg = {});
IdentityReport check_q_gaussian_derivatives(double q, const SuiteConfig& cfg = {});
std::vector<IdentityReport> check_tsallis(const SuiteConfig& cfg = {});

/// Closed forms sampled every 0.01 across [min q, max q]; a jump above 10%
/// between neighbours fails.
IdentityReport check_rhs_continuity(const std::vector<double>& q_list, const SuiteConfig& cfg = {});

/// Every check for every q (power integrals in corrected form), ordered by
/// (identity_id, q).  Failures are reported, never thrown.
std::vector<IdentityReport> run_suite(const std::vector<double>& q_list, const SuiteConfig& cfg = {});

bool all_passed(const std::vector<IdentityReport>& reports);

}  // namespace umbraq

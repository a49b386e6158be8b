#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature and the improper-integral drivers
// built on it.  Semi-infinite ranges are covered by a growing sequence of
// segments [L, 2L]; growth stops once the declared tail model bounds the
// remaining mass below tolerance.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "umbraq/errors.hpp"
#include "umbraq/qcore.hpp"

namespace umbraq {

using Integrand = std::function<double(double)>;

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, QuadratureResult partial)
        : Error(what), partial_(partial) {}
    const QuadratureResult& partial() const noexcept { return partial_; }

private:
    QuadratureResult partial_;
};

class TailModelViolation : public Error {
public:
    using Error::Error;
};

struct TailPolicy {
    enum class Model { exponential, algebraic };

    double cutoff = 50.0;
    Model model = Model::exponential;
    double power = 2.0;  // algebraic: |f(x)| ~ x^{-power}
    double rate = 1.0;   // exponential: |f(x)| ~ e^{-rate x}

    static TailPolicy exponential(double cutoff = 50.0, double rate = 1.0) {
        return {cutoff, Model::exponential, 2.0, rate};
    }
    static TailPolicy algebraic(double power, double cutoff = 50.0) {
        return {cutoff, Model::algebraic, power, 1.0};
    }

    void validate() const;
};

inline constexpr std::size_t kMaxIntervals = 4000;
inline constexpr double kMaxCutoff = 1e15;

/// Adaptive G7/K15 on a finite interval.
QuadratureResult integrate(const Integrand& f, double a, double b, const ToleranceConfig& tol);

/// 32-point Gauss-Laguerre estimate of int_0^inf e^{-s} f(s) ds.
double gauss_laguerre(const Integrand& f);

/// int_0^inf e^{-s} f(s) ds; rel_tol is taken relative to int e^{-s} |f(s)| ds.
QuadratureResult laplace_integral(const Integrand& f, const ToleranceConfig& tol);

QuadratureResult real_line_integral(const Integrand& f, const TailPolicy& tail, const ToleranceConfig& tol);

QuadratureResult halfline_integral(const Integrand& f, const TailPolicy& tail, const ToleranceConfig& tol);

/// int_0^inf f for integrands with sign changes: integrates between
/// consecutive zeros and accelerates the partial sums with Wynn's epsilon
/// algorithm while they alternate.  `scan_step` is the initial zero-search
/// step; it shrinks with the observed zero spacing.
QuadratureResult oscillatory_halfline_integral(const Integrand& f, const TailPolicy& tail,
                                               const ToleranceConfig& tol, double scan_step = 0.25);

/// Wynn epsilon extrapolation of a sequence of partial sums; returns the
/// last diagonal estimate and the change from the previous one.
struct Extrapolation {
    double value;
    double change;
};
Extrapolation wynn_epsilon(const std::vector<double>& partial_sums);

}  // namespace umbraq

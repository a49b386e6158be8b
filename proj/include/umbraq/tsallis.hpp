#pragma once

// Tsallis exponential e_t(x) = [1 + (1-t) x]^{1/(1-t)} (zero past the support
// edge) and its umbral image d with t = 1 - Q:
//   d^mu psi_0 = Gamma(1 + 1/Q) / Gamma(1 + 1/Q - mu),
// so that e_{1-Q}(-Q x^2 / Q) = [1 - Q x^2]^{1/Q} = exp(-Q x^2 d) psi_0.

#include "umbraq/quadrature.hpp"

namespace umbraq {

class TsallisParam {
public:
    explicit TsallisParam(double Q);
    double value() const noexcept { return Q_; }
    operator double() const noexcept { return Q_; }

private:
    double Q_;
};

/// [1 + (1 - q_t) x]^{1/(1 - q_t)}, 0 where the base is negative; exp(x) at q_t = 1.
double tsallis_exp(double x, double q_t);

/// Gamma(1 + 1/Q) / Gamma(1 + 1/Q - mu).  Vanishes where the denominator
/// has a pole (the binomial series terminates there).
double tsallis_moment(double mu, TsallisParam Q);

struct TsallisIntegral {
    double closed;
    QuadratureResult numeric;
};

/// closed = sqrt(pi/Q) Gamma(1 + 1/Q) / Gamma(3/2 + 1/Q); numeric integrates
/// [1 - Q x^2]^{1/Q} over |x| <= 1/sqrt(Q).
TsallisIntegral tsallis_gaussian_integral(TsallisParam Q, const ToleranceConfig& tol = {});

/// n! sum_r y^{n-2r} (-Q)^r moment(r) / ((n-2r)! r!).
double tsallis_hermite(int n, double y, TsallisParam Q);

/// Truncated generating function against the matching double series of
/// e^{yx} sum_m (-Q x^2)^m moment(m) / m!, both to total order N.
double tsallis_genfun_residual(double x, double y, TsallisParam Q, int N);

/// Truncated generating function against e^{yx} [1 - Q x^2]^{1/Q} itself.
double tsallis_genfun_closed_residual(double x, double y, TsallisParam Q, int N);

}  // namespace umbraq

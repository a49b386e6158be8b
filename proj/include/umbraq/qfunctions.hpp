#pragma once

// q-special functions realized through the q-image c:
//   (q,1)-Tricomi   C(x)      = sum (-x)^r / (r! [r]_q!)
//   (q,q)-Tricomi             = sum (-x)^r / ([r]_q!)^2
//   q-Bessel        J_mu(z)   = a^{mu/2} sum (-a)^r / (r! [mu + r]_q!),  a = z^2/4
//   q-exponential   qe(x)     = 1/(1 + c x) phi_0 = sum (-x)^r / [r]_q!
//   q-cos / q-sin             = even / odd parts of the same rational

#include <memory>

#include "umbraq/qcore.hpp"
#include "umbraq/umbral.hpp"

namespace umbraq {

/// Shared q-image for (q, tol).  Building an image costs a moment table
/// and, for q <= 0.95, a spectral measure; callers in loops should reuse it.
std::shared_ptr<const UmbralImage> q_image_cached(QParam q, const ToleranceConfig& tol = {});

double tricomi_q1(double x, QParam q, const ToleranceConfig& tol = {});

/// Converges for |x| < (1 - q)^{-2}; SeriesDivergence beyond.
double tricomi_qq(double x, QParam q, const ToleranceConfig& tol = {});

/// z >= 0, mu >= 0.
double q_bessel(double mu, double z, QParam q, const ToleranceConfig& tol = {});

double q_exp(double x, QParam q, EvalMethod method = EvalMethod::automatic, const ToleranceConfig& tol = {});

double q_cos(double x, QParam q, const ToleranceConfig& tol = {}, EvalMethod method = EvalMethod::automatic);
double q_sin(double x, QParam q, const ToleranceConfig& tol = {}, EvalMethod method = EvalMethod::automatic);

/// Two-variable Hermite H_n(x, y) = n! sum_r x^{n-2r} y^r / ((n-2r)! r!).
double hermite2(int n, double x, double y);

/// (-1)^n d^n/dx^n exp(-a x^2).
double gaussian_derivative(int n, double a, double x);

/// (-1)^n d^n/dx^n C(x^2) through the Hermite / q-Bessel expansion
///   n! sum_r (-1)^r 2^{n-2r} x^{-r} J_{n-r}(2x) / ((n-2r)! r!).
/// Below |x| = 0.1 the negative powers of x cancel badly and the
/// differentiated Taylor series is used instead.
double q_gaussian_derivative(int n, double x, QParam q, const ToleranceConfig& tol = {});

/// The differentiated Taylor series of C(x^2), term by term.
double q_gaussian_derivative_series(int n, double x, QParam q, const ToleranceConfig& tol = {});

inline constexpr double kSmallArgument = 0.1;

}  // namespace umbraq

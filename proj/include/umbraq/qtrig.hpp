#pragma once

// Euler-product sine-q and cosine-q in the scaled variable x (argument
// pi_q x):
//   sin_q(pi_q x) = pi_q/(1-q) prod_{n>=1} [1 + (x-1)/n]_{q^n} [1 - x/n]_{q^n}
//   cos_q(pi_q x) = prod_{n>=1} [1 + x/(n-1/2)]_{q^{n-1/2}} [1 - x/(n-1/2)]_{q^{n-1/2}}
// Both equal pi_q / (qGamma(a) qGamma(1-a)) with a = x resp. 1/2 + x, which
// is the cross-check; the products themselves have no poles.  Zeros are
// exact: the vanishing bracket is a literal 0.

#include <cstddef>
#include <vector>

#include "umbraq/kernels.hpp"
#include "umbraq/qcore.hpp"

namespace umbraq {

struct TrigProductConfig {
    std::size_t max_factors = 100000;
    double factor_tol = 1e-13;  // bound on the log of the neglected tail

    void validate() const;
};

double sin_q_scaled(double x, QParam q, const TrigProductConfig& cfg = {});
double cos_q_scaled(double x, QParam q, const TrigProductConfig& cfg = {});

/// pi_q / (qGamma(x) qGamma(1-x)); throws PoleError at integers.
double sin_q_reflection(double x, QParam q);
/// pi_q / (qGamma(1/2 + x) qGamma(1/2 - x)).
double cos_q_reflection(double x, QParam q);

/// sin_q_scaled(x + 1/2) - cos_q_scaled(x).
double sin_cos_shift_residual(double x, QParam q, const TrigProductConfig& cfg = {});

struct Extremum {
    int k;                      // searched interval (k, k+1)
    double location;            // located maximum of |sin_q_scaled|
    double value;               // sin_q_scaled(location)
    double half_integer_value;  // sin_q_scaled(k + 1/2)
    double offset;              // location - (k + 1/2)
};

struct ExtremumScan {
    std::vector<Extremum> extrema;
    bool amplitude_non_decreasing = true;
};

/// Golden-section search for the extremum of sin_q_scaled in each (k, k+1),
/// k = 0..k_max.  For k >= 1 the extremum drifts away from k + 1/2: the
/// product obeys f(x + 1) = -q^{-x} f(x), so only (0, 1) is symmetric.
ExtremumScan extremum_scan(QParam q, int k_max, const TrigProductConfig& cfg = {});

struct CurvePoint {
    double x;
    double cos_q;
    double sin_q;
};

/// Uniform samples of (cos_q_scaled, sin_q_scaled) on [x_min, x_max].
std::vector<CurvePoint> parametric_curve(QParam q, double x_min, double x_max, std::size_t steps,
                                         const TrigProductConfig& cfg = {},
                                         kernels::Exec exec = kernels::Exec::automatic);

}  // namespace umbraq

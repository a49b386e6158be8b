#pragma once

// q-arithmetic primitives and the Thomae-Jackson q-Gamma function.
//
// All infinite products are evaluated as a finite head of explicit factors
// followed by an exactly summed tail: once every remaining factor has the
// form (1 - b q^n) with b <= kTailThreshold, the tail log-product
//     sum_{n>=0} log(1 - b q^n) = -sum_{k>=1} b^k / (k (1 - q^k))
// converges geometrically in b, with a rigorous remainder bound.  The head
// length is O(log(1/kTailThreshold) / (1 - q)), which keeps q = 0.9999 well
// inside the default factor cap.

#include <cstddef>

#include "umbraq/errors.hpp"
#include "umbraq/kernels.hpp"

namespace umbraq {

inline constexpr double kDefaultQMax = 0.9999;

/// Deformation parameter q in (0, q_max].
class QParam {
public:
    explicit QParam(double q, double q_max = kDefaultQMax);

    double value() const noexcept { return q_; }
    double log() const noexcept { return log_q_; }
    operator double() const noexcept { return q_; }

private:
    double q_;
    double log_q_;
};

struct ToleranceConfig {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    std::size_t max_product_factors = 200'000;
    std::size_t max_series_terms = 10'000;

    /// Throws DomainError unless every field is strictly positive.
    void validate() const;
};

struct GammaQResult {
    double value = 0.0;
    std::size_t factors_used = 0;
    double truncation_error_bound = 0.0;
};

/// [n]_q = (1 - q^n)/(1 - q) for real n.
double q_number(double n, QParam q);

/// [n]_b for a raw base b in (0, 1); used for brackets with base q^k.
double q_bracket(double n, double base);

/// [inf]_{q^k} = 1/(1 - q^k).
double q_number_infinity(double k, QParam q);

/// [n]_q! = prod_{r=1}^{n} [r]_q; rejects negative n.
double q_factorial(long n, QParam q);

GammaQResult q_gamma(double x, QParam q, const ToleranceConfig& tol = {});

/// q-Gamma through the bracket form prod [1 + (x-1)/(n+1)]_{q^{n+1}}^{-1}.
double q_gamma_bracket(double x, QParam q, const ToleranceConfig& tol = {});

/// pi_q = (qGamma(1/2))^2, with the truncation bound of the squared product.
GammaQResult pi_q_detailed(QParam q, const ToleranceConfig& tol = {});
double pi_q(QParam q, const ToleranceConfig& tol = {});

/// pi_q from the q-Wallis product ([2]/[inf]) prod ([2n+2]/[2n+1])^2 in base sqrt(q).
double pi_q_wallis(QParam q, const ToleranceConfig& tol = {});

/// prod_{n=0}^{N-1} (2n+2)^2 / ((2n+1)(2n+3)).
double wallis_partial(long N);

/// Lanczos (g = 7, n = 9) with reflection below 1/2.
double classical_gamma(double x);

/// 1/Gamma(x), entire; exactly zero at the non-positive integers.
double reciprocal_gamma(double x);

namespace detail {

inline constexpr double kTailThreshold = 0.1;

struct TailSum {
    double value = 0.0;
    double bound = 0.0;
    std::size_t terms = 0;
};

/// sum_{n>=0} log(1 - b q^n) for 0 <= b <= kTailThreshold.
TailSum log_pochhammer_tail(double b, double log_q, double target);

/// Smallest N >= 0 with exp(log_a + N log_q) <= kTailThreshold.
std::size_t head_length(double log_a, double log_q);

bool is_nonpositive_integer(double x);

}  // namespace detail

}  // namespace umbraq

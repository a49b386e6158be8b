#include "umbraq/qcore.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace umbraq {

namespace {

using std::numbers::pi;

void check_factor_cap(std::size_t n, const ToleranceConfig& tol, const char* what) {
    if (n > tol.max_product_factors)
        throw ConvergenceError(std::string(what) + ": " + std::to_string(n) +
                               " product factors needed, cap is " +
                               std::to_string(tol.max_product_factors));
}

// (1 - e^{a}) computed without cancellation for a < 0.
double one_minus_exp(double a) { return -std::expm1(a); }

}  // namespace

QParam::QParam(double q, double q_max) : q_(q), log_q_(0.0) {
    if (!(q > 0.0 && q < 1.0))
        throw DomainError("q must satisfy 0 < q < 1, got " + std::to_string(q));
    if (q > q_max)
        throw DomainError("q = " + std::to_string(q) + " exceeds q_max = " + std::to_string(q_max));
    log_q_ = std::log(q);
}

void ToleranceConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw DomainError("tolerances must be strictly positive");
    if (max_product_factors == 0 || max_series_terms == 0)
        throw DomainError("truncation caps must be strictly positive");
}

namespace detail {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

std::size_t head_length(double log_a, double log_q) {
    const double n = (std::log(kTailThreshold) - log_a) / log_q;
    return n <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(n));
}

TailSum log_pochhammer_tail(double b, double log_q, double target) {
    TailSum out;
    if (b == 0.0) return out;
    double bk = 1.0;
    for (std::size_t k = 1; k < 200; ++k) {
        bk *= b;
        const double denom = one_minus_exp(static_cast<double>(k) * log_q);
        out.value -= bk / (static_cast<double>(k) * denom);
        out.terms = k;
        // remaining terms are dominated by b^{j} / (j (1 - q^{k+1})) for j > k
        const double rest = bk * b /
                            (static_cast<double>(k + 1) *
                             one_minus_exp(static_cast<double>(k + 1) * log_q) * (1.0 - b));
        if (rest <= target) {
            out.bound = rest;
            return out;
        }
    }
    out.bound = 1.0;
    return out;
}

}  // namespace detail

double q_number(double n, QParam q) {
    return one_minus_exp(n * q.log()) / one_minus_exp(q.log());
}

double q_bracket(double n, double base) {
    const double lb = std::log(base);
    return one_minus_exp(n * lb) / one_minus_exp(lb);
}

double q_number_infinity(double k, QParam q) {
    if (!(k > 0.0)) throw DomainError("q_number_infinity requires k > 0");
    return 1.0 / one_minus_exp(k * q.log());
}

double q_factorial(long n, QParam q) {
    if (n < 0) throw DomainError("q_factorial requires n >= 0");
    double f = 1.0;
    for (long r = 2; r <= n; ++r) f *= q_number(static_cast<double>(r), q);
    return f;
}

namespace {

// log|qGamma(x)| for x > 0 from the Thomae-Jackson product.
struct LogGamma {
    double log_abs;
    std::size_t factors;
    double bound;  // bound on |error| of log_abs
};

LogGamma log_q_gamma_positive(double x, QParam q, const ToleranceConfig& tol) {
    const double lq = q.log();
    const std::size_t N = detail::head_length(std::min(1.0, x) * lq, lq);
    check_factor_cap(N, tol, "q_gamma");

    const auto head = kernels::log_product(0, N, [lq, x](std::size_t n) {
        const double dn = static_cast<double>(n);
        return one_minus_exp((dn + 1.0) * lq) / one_minus_exp((dn + x) * lq);
    });
    const double target = std::min(1e-3 * tol.rel_tol, 1e-16);
    const double dN = static_cast<double>(N);
    const auto num = detail::log_pochhammer_tail(std::exp((dN + 1.0) * lq), lq, target);
    const auto den = detail::log_pochhammer_tail(std::exp((dN + x) * lq), lq, target);
    return {(1.0 - x) * std::log1p(-q.value()) + head.log_abs + num.value - den.value, N,
            num.bound + den.bound};
}

// Shift x <= 0 into (0, 1] with qGamma(x) = qGamma(x + m) / prod_{j<m} [x + j]_q.
template <class PositiveGamma>
double shifted_gamma(double x, QParam q, PositiveGamma&& positive) {
    double denom = 1.0;
    while (x <= 0.0) {
        denom *= q_number(x, q);
        x += 1.0;
    }
    return positive(x) / denom;
}

}  // namespace

GammaQResult q_gamma(double x, QParam q, const ToleranceConfig& tol) {
    if (detail::is_nonpositive_integer(x))
        throw PoleError("q_gamma has a pole at x = " + std::to_string(x));
    if (!std::isfinite(x)) throw DomainError("q_gamma requires finite x");

    GammaQResult out;
    auto positive = [&](double y) {
        const auto lg = log_q_gamma_positive(y, q, tol);
        out.factors_used = lg.factors;
        out.truncation_error_bound = std::expm1(lg.bound);
        return std::exp(lg.log_abs);
    };
    out.value = x > 0.0 ? positive(x) : shifted_gamma(x, q, positive);
    out.truncation_error_bound *= std::fabs(out.value);
    if (out.truncation_error_bound > tol.rel_tol * std::fabs(out.value))
        throw ConvergenceError("q_gamma tail bound above rel_tol");
    return out;
}

double q_gamma_bracket(double x, QParam q, const ToleranceConfig& tol) {
    if (detail::is_nonpositive_integer(x))
        throw PoleError("q_gamma_bracket has a pole at x = " + std::to_string(x));

    auto positive = [&](double y) {
        const double lq = q.log();
        const std::size_t N = detail::head_length(std::min(1.0, y) * lq, lq);
        check_factor_cap(N, tol, "q_gamma_bracket");
        const auto head = kernels::log_product(0, N, [lq, y](std::size_t n) {
            const double k = static_cast<double>(n + 1);
            return 1.0 / q_bracket(1.0 + (y - 1.0) / k, std::exp(k * lq));
        });
        // remaining brackets: prod_{n>=N} (1 - q^{n+y}) / (1 - q^{n+1})
        const double target = std::min(1e-3 * tol.rel_tol, 1e-16);
        const double dN = static_cast<double>(N);
        const auto num = detail::log_pochhammer_tail(std::exp((dN + y) * lq), lq, target);
        const auto den = detail::log_pochhammer_tail(std::exp((dN + 1.0) * lq), lq, target);
        const double log_abs = (1.0 - y) * std::log1p(-q.value()) + head.log_abs - num.value + den.value;
        return std::exp(log_abs);
    };
    return x > 0.0 ? positive(x) : shifted_gamma(x, q, positive);
}

GammaQResult pi_q_detailed(QParam q, const ToleranceConfig& tol) {
    auto g = q_gamma(0.5, q, tol);
    const double v = g.value * g.value;
    // (1 + e)^2 - 1 <= 2e + e^2
    const double rel = g.truncation_error_bound / std::fabs(g.value);
    return {v, g.factors_used, v * (2.0 * rel + rel * rel)};
}

double pi_q(QParam q, const ToleranceConfig& tol) { return pi_q_detailed(q, tol).value; }

double pi_q_wallis(QParam q, const ToleranceConfig& tol) {
    const double s = std::sqrt(q.value());
    const QParam sq(s, 1.0);
    const double ls = sq.log();
    // head until s^{2N+1} <= threshold
    const std::size_t N = detail::head_length(ls, 2.0 * ls);
    check_factor_cap(N, tol, "pi_q_wallis");
    const auto head = kernels::log_product(0, N, [sq](std::size_t n) {
        const double r = q_number(2.0 * n + 2.0, sq) / q_number(2.0 * n + 1.0, sq);
        return r * r;
    });
    // prod_{n>=N} (1 - s^{2n+2}) / (1 - s^{2n+1}) in base s^2
    const double target = std::min(1e-3 * tol.rel_tol, 1e-16);
    const double dN = static_cast<double>(N);
    const auto even = detail::log_pochhammer_tail(std::exp((2.0 * dN + 2.0) * ls), 2.0 * ls, target);
    const auto odd = detail::log_pochhammer_tail(std::exp((2.0 * dN + 1.0) * ls), 2.0 * ls, target);
    const double prefactor = q_number(2.0, sq) / q_number_infinity(1.0, sq);
    return prefactor * std::exp(head.log_abs + 2.0 * (even.value - odd.value));
}

double wallis_partial(long N) {
    if (N < 1) throw DomainError("wallis_partial requires N >= 1");
    double p = 1.0;
    for (long n = 0; n < N; ++n) {
        const double a = 2.0 * n + 2.0;
        p *= (a * a) / ((a - 1.0) * (a + 1.0));
    }
    return p;
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
    // x >= 0.5
    x -= 1.0;
    double a = kLanczos[0];
    const double t = x + kLanczosG + 0.5;
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
    return std::sqrt(2.0 * pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

}  // namespace

double classical_gamma(double x) {
    if (detail::is_nonpositive_integer(x))
        throw PoleError("Gamma has a pole at x = " + std::to_string(x));
    if (x < 0.5) return pi / (std::sin(pi * x) * lanczos_gamma(1.0 - x));
    return lanczos_gamma(x);
}

double reciprocal_gamma(double x) {
    if (detail::is_nonpositive_integer(x)) return 0.0;
    if (x < 0.5) return std::sin(pi * x) * lanczos_gamma(1.0 - x) / pi;
    return 1.0 / lanczos_gamma(x);
}

}  // namespace umbraq

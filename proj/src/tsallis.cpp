#include "umbraq/tsallis.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace umbraq {

TsallisParam::TsallisParam(double Q) : Q_(Q) {
    if (!(Q > 0.0 && Q <= 1.0)) throw DomainError("Tsallis parameter Q must lie in (0, 1], got " + std::to_string(Q));
}

double tsallis_exp(double x, double q_t) {
    if (q_t == 1.0) return std::exp(x);
    const double base = 1.0 + (1.0 - q_t) * x;
    if (base < 0.0) return 0.0;
    return std::exp(std::log1p((1.0 - q_t) * x) / (1.0 - q_t));
}

double tsallis_moment(double mu, TsallisParam Q) {
    const double a = 1.0 + 1.0 / Q.value();
    if (mu == std::floor(mu) && mu >= 0.0 && mu < 1000.0) {
        // falling factorial (a-1)(a-2)...(a-mu); hits 0 exactly at the poles
        double p = 1.0;
        for (int i = 1; i <= static_cast<int>(mu); ++i) p *= a - i;
        return p;
    }
    if (detail::is_nonpositive_integer(a - mu)) return 0.0;
    if (a < 150.0 && a - mu < 150.0) return classical_gamma(a) * reciprocal_gamma(a - mu);
    const double sign = reciprocal_gamma(a - mu) < 0.0 ? -1.0 : 1.0;
    return sign * std::exp(std::lgamma(a) - std::lgamma(a - mu));
}

TsallisIntegral tsallis_gaussian_integral(TsallisParam Q, const ToleranceConfig& tol) {
    const double q = Q.value();
    // sqrt(pi/Q) Gamma(1 + 1/Q) / Gamma(3/2 + 1/Q) = sqrt(pi/Q) moment(-1/2)
    const double closed = std::sqrt(std::numbers::pi / q) * tsallis_moment(-0.5, Q);

    const double edge = 1.0 / std::sqrt(q);
    // the decaying form e_{1-Q}(-x^2) = [1 - Q x^2]^{1/Q}
    auto f = [q](double x) { return tsallis_exp(-x * x, 1.0 - q); };
    auto half = integrate(f, 0.0, edge, tol);
    half.value *= 2.0;
    half.abs_error_estimate *= 2.0;
    return {closed, half};
}

double tsallis_hermite(int n, double y, TsallisParam Q) {
    if (n < 0) throw DomainError("tsallis_hermite requires n >= 0");
    long double s = 0.0L;
    for (int r = 0; 2 * r <= n; ++r) {
        const long double c = std::tgamma(n + 1.0) / (std::tgamma(n - 2.0 * r + 1.0) * std::tgamma(r + 1.0));
        s += c * std::pow(static_cast<long double>(y), n - 2 * r) * std::pow(-static_cast<long double>(Q.value()), r) *
             tsallis_moment(r, Q);
    }
    return static_cast<double>(s);
}

namespace {

long double genfun_lhs(double x, double y, TsallisParam Q, int N) {
    long double s = 0.0L, xn = 1.0L, fact = 1.0L;
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            xn *= x;
            fact *= n;
        }
        s += xn * tsallis_hermite(n, y, Q) / fact;
    }
    return s;
}

}  // namespace

double tsallis_genfun_residual(double x, double y, TsallisParam Q, int N) {
    if (N < 0) throw DomainError("truncation order must be >= 0");
    if (x == 0.0) return 0.0;
    long double rhs = 0.0L;
    const long double z = -static_cast<long double>(Q.value()) * x * x;
    for (int m = 0; 2 * m <= N; ++m) {
        const long double gm = std::pow(z, m) * tsallis_moment(m, Q) / std::tgamma(m + 1.0);
        for (int j = 0; j + 2 * m <= N; ++j)
            rhs += gm * std::pow(static_cast<long double>(y) * x, j) / std::tgamma(j + 1.0);
    }
    return static_cast<double>(std::fabs(genfun_lhs(x, y, Q, N) - rhs));
}

double tsallis_genfun_closed_residual(double x, double y, TsallisParam Q, int N) {
    if (N < 0) throw DomainError("truncation order must be >= 0");
    const double rhs = std::exp(y * x) * std::pow(std::max(0.0, 1.0 - Q.value() * x * x), 1.0 / Q.value());
    return static_cast<double>(std::fabs(genfun_lhs(x, y, Q, N) - rhs));
}

}  // namespace umbraq

#include "umbraq/qtrig.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace umbraq {

namespace {

// [y]_b with log b = log_base; exactly 0 when y == 0.
double bracket(double y, double log_base) { return std::expm1(y * log_base) / std::expm1(log_base); }

double cached_pi_q(QParam q) {
    thread_local double last_q = -1.0, last_pi = 0.0;
    if (q.value() != last_q) {
        last_pi = pi_q(q);
        last_q = q.value();
    }
    return last_pi;
}

// prod_{n>=1} (1 - q^{n+c_plus}) (1 - q^{n+c_minus}) / (1 - q^{n+c_den})^2.
// The first N factors come from `head` (which keeps exact zeros), the rest
// from the exact tail series.
template <class Head>
kernels::LogSum trig_product(double x, double c_plus, double c_minus, double c_den, QParam q,
                             const TrigProductConfig& cfg, Head&& head) {
    cfg.validate();
    const double lq = q.log();
    const std::size_t n0 = detail::head_length(0.0, lq);
    const double extra = std::ceil(std::fabs(x)) + 2.0;
    const std::size_t N = n0 + static_cast<std::size_t>(extra);
    if (N > cfg.max_factors)
        throw ConvergenceError("q-trig product needs " + std::to_string(N) + " factors, cap is " +
                               std::to_string(cfg.max_factors));

    kernels::LogSum out = kernels::log_product(1, N + 1, head);
    if (out.sign == 0) return out;

    // prod_{n>N} (1 - q^{n + c_plus}) (1 - q^{n + c_minus}) / (1 - q^{n + c_den})^2
    const double target = std::min(cfg.factor_tol, 1e-16);
    const double dN = static_cast<double>(N);
    const auto a = detail::log_pochhammer_tail(std::exp((dN + 1.0 + c_plus) * lq), lq, target);
    const auto b = detail::log_pochhammer_tail(std::exp((dN + 1.0 + c_minus) * lq), lq, target);
    const auto d = detail::log_pochhammer_tail(std::exp((dN + 1.0 + c_den) * lq), lq, target);
    out.log_abs += a.value + b.value - 2.0 * d.value;
    return out;
}

double to_value(const kernels::LogSum& s, double scale) {
    return s.sign == 0 ? 0.0 : s.sign * scale * std::exp(s.log_abs);
}

}  // namespace

void TrigProductConfig::validate() const {
    if (max_factors == 0) throw DomainError("max_factors must be positive");
    if (!(factor_tol > 0.0)) throw DomainError("factor_tol must be positive");
}

double sin_q_scaled(double x, QParam q, const TrigProductConfig& cfg) {
    const double lq = q.log();
    const auto s = trig_product(x, x - 1.0, -x, 0.0, q, cfg, [x, lq](std::size_t n) {
        const double dn = static_cast<double>(n);
        const double lb = dn * lq;
        return bracket(1.0 + (x - 1.0) / dn, lb) * bracket(1.0 - x / dn, lb);
    });
    return to_value(s, cached_pi_q(q) / (1.0 - q.value()));
}

double cos_q_scaled(double x, QParam q, const TrigProductConfig& cfg) {
    const double lq = q.log();
    const auto s = trig_product(x, x - 0.5, -x - 0.5, -0.5, q, cfg, [x, lq](std::size_t n) {
        const double h = static_cast<double>(n) - 0.5;
        const double lb = h * lq;
        return bracket(1.0 + x / h, lb) * bracket(1.0 - x / h, lb);
    });
    return to_value(s, 1.0);
}

double sin_q_reflection(double x, QParam q) {
    return pi_q(q) / (q_gamma(x, q).value * q_gamma(1.0 - x, q).value);
}

double cos_q_reflection(double x, QParam q) {
    return pi_q(q) / (q_gamma(0.5 + x, q).value * q_gamma(0.5 - x, q).value);
}

double sin_cos_shift_residual(double x, QParam q, const TrigProductConfig& cfg) {
    return sin_q_scaled(x + 0.5, q, cfg) - cos_q_scaled(x, q, cfg);
}

ExtremumScan extremum_scan(QParam q, int k_max, const TrigProductConfig& cfg) {
    if (k_max < 0) throw DomainError("extremum_scan requires k_max >= 0");
    ExtremumScan scan;
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int k = 0; k <= k_max; ++k) {
        auto mag = [&](double x) { return std::fabs(sin_q_scaled(x, q, cfg)); };
        double a = k, b = k + 1.0;
        double c = b - invphi * (b - a), d = a + invphi * (b - a);
        double fc = mag(c), fd = mag(d);
        while (b - a > 1e-10) {
            if (fc > fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - invphi * (b - a);
                fc = mag(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + invphi * (b - a);
                fd = mag(d);
            }
        }
        const double loc = 0.5 * (a + b);
        // an interior maximum must beat both ends of its bracket by a margin
        if (loc - k < 1e-6 || k + 1.0 - loc < 1e-6)
            throw SearchFailure("no interior extremum of sin_q in (" + std::to_string(k) + ", " +
                                std::to_string(k + 1) + ")");
        Extremum e{k, loc, sin_q_scaled(loc, q, cfg), sin_q_scaled(k + 0.5, q, cfg), loc - (k + 0.5)};
        if (!scan.extrema.empty() && std::fabs(e.value) < std::fabs(scan.extrema.back().value))
            scan.amplitude_non_decreasing = false;
        scan.extrema.push_back(e);
    }
    return scan;
}

std::vector<CurvePoint> parametric_curve(QParam q, double x_min, double x_max, std::size_t steps,
                                         const TrigProductConfig& cfg, kernels::Exec exec) {
    if (steps < 2) throw DomainError("parametric_curve requires steps >= 2");
    if (!(x_max > x_min)) throw DomainError("parametric_curve requires x_max > x_min");
    std::vector<CurvePoint> out(steps);
    const double h = (x_max - x_min) / static_cast<double>(steps - 1);
    kernels::sample(
        out,
        [&](std::size_t i) {
            const double x = i + 1 == steps ? x_max : x_min + h * static_cast<double>(i);
            return CurvePoint{x, cos_q_scaled(x, q, cfg), sin_q_scaled(x, q, cfg)};
        },
        exec);
    return out;
}

}  // namespace umbraq

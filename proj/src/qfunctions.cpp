#include "umbraq/qfunctions.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

namespace umbraq {

std::shared_ptr<const UmbralImage> q_image_cached(QParam q, const ToleranceConfig& tol) {
    using Key = std::tuple<double, double, double, std::size_t, std::size_t>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const UmbralImage>> cache;

    const Key key{q.value(), tol.rel_tol, tol.abs_tol, tol.max_product_factors, tol.max_series_terms};
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto img = std::make_shared<const UmbralImage>(q_image(q, tol));
    std::lock_guard lock(mu);
    if (cache.size() > 64) cache.clear();
    return cache.emplace(key, img).first->second;
}

double tricomi_q1(double x, QParam q, const ToleranceConfig& tol) {
    if (x == 0.0) return 1.0;
    return image_series(*q_image_cached(q, tol), x, 0.0, 1, tol).value;
}

double tricomi_qq(double x, QParam q, const ToleranceConfig& tol) {
    if (x == 0.0) return 1.0;
    const double radius = 1.0 / ((1.0 - q.value()) * (1.0 - q.value()));
    if (std::fabs(x) >= radius)
        throw SeriesDivergence("(q,q)-Tricomi series diverges for |x| >= (1-q)^-2 = " + std::to_string(radius));
    long double s = 1.0L, term = 1.0L, prev = std::numeric_limits<long double>::infinity();
    for (std::size_t r = 1; r < tol.max_series_terms; ++r) {
        const long double qr = q_number(static_cast<double>(r), q);
        term *= -static_cast<long double>(x) / (qr * qr);
        s += term;
        const long double thr = std::min<long double>(tol.abs_tol, 1e-3L * tol.rel_tol * std::fabs(s));
        if (std::fabs(term) <= thr && std::fabs(prev) <= thr) return static_cast<double>(s);
        prev = term;
    }
    throw SeriesDivergence("(q,q)-Tricomi series did not settle within max_series_terms");
}

double q_bessel(double mu, double z, QParam q, const ToleranceConfig& tol) {
    if (!(mu >= 0.0)) throw DomainError("q_bessel requires mu >= 0");
    if (!(z >= 0.0)) throw DomainError("q_bessel requires z >= 0");
    if (z == 0.0) return mu == 0.0 ? 1.0 : 0.0;
    const double a = 0.25 * z * z;
    return std::pow(a, 0.5 * mu) * image_series(*q_image_cached(q, tol), a, mu, 1, tol).value;
}

double q_exp(double x, QParam q, EvalMethod method, const ToleranceConfig& tol) {
    return umbral_rational(*q_image_cached(q, tol), x, 0, 1, method, tol);
}

double q_cos(double x, QParam q, const ToleranceConfig& tol, EvalMethod method) {
    return umbral_rational(*q_image_cached(q, tol), x, 0, 2, method, tol);
}

double q_sin(double x, QParam q, const ToleranceConfig& tol, EvalMethod method) {
    return umbral_rational(*q_image_cached(q, tol), x, 1, 2, method, tol);
}

double hermite2(int n, double x, double y) {
    if (n < 0) throw DomainError("hermite2 requires n >= 0");
    // H_{m+1} = x H_m + 2 m y H_{m-1}
    double h0 = 1.0, h1 = x;
    if (n == 0) return h0;
    for (int m = 1; m < n; ++m) {
        const double h2 = x * h1 + 2.0 * m * y * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

double gaussian_derivative(int n, double a, double x) {
    if (!(a > 0.0)) throw DomainError("gaussian_derivative requires a > 0");
    return std::exp(-a * x * x) * hermite2(n, 2.0 * a * x, -a);
}

double q_gaussian_derivative_series(int n, double x, QParam q, const ToleranceConfig& tol) {
    if (n < 0) throw DomainError("derivative order must be >= 0");
    const auto img = q_image_cached(q, tol);
    // d^n/dx^n x^{2r} = (2r)!/(2r-n)! x^{2r-n}
    long double s = 0.0L, prev = std::numeric_limits<long double>::infinity();
    long double inv_rfact = 1.0L;
    for (std::size_t r = 0; r < tol.max_series_terms; ++r) {
        if (r > 0) inv_rfact /= static_cast<long double>(r);
        const long double two_r = 2.0L * static_cast<long double>(r);
        if (two_r < n) continue;
        long double falling = 1.0L;
        for (int i = 0; i < n; ++i) falling *= two_r - i;
        const long double sign = (r % 2 == 0) ? 1.0L : -1.0L;
        const long double t = sign * inv_rfact * img->moment(static_cast<double>(r)) * falling *
                              std::pow(static_cast<long double>(x), two_r - n);
        s += t;
        const long double thr = std::min<long double>(tol.abs_tol, 1e-3L * tol.rel_tol * std::fabs(s));
        if (std::fabs(t) <= thr && std::fabs(prev) <= thr) return static_cast<double>((n % 2 ? -s : s));
        prev = t;
    }
    throw SeriesDivergence("differentiated Tricomi series did not settle");
}

double q_gaussian_derivative(int n, double x, QParam q, const ToleranceConfig& tol) {
    if (n < 0) throw DomainError("derivative order must be >= 0");
    if (std::fabs(x) < kSmallArgument) return q_gaussian_derivative_series(n, x, q, tol);
    if (x < 0.0) {
        // C(x^2) is even
        const double v = q_gaussian_derivative(n, -x, q, tol);
        return n % 2 ? -v : v;
    }
    long double s = 0.0L;
    double fact_n = std::tgamma(n + 1.0);
    for (int r = 0; 2 * r <= n; ++r) {
        const double coef = fact_n * std::pow(2.0, n - 2 * r) / (std::tgamma(n - 2.0 * r + 1.0) * std::tgamma(r + 1.0));
        const double sign = r % 2 ? -1.0 : 1.0;
        s += sign * coef * std::pow(x, -r) * q_bessel(n - r, 2.0 * x, q, tol);
    }
    return static_cast<double>(s);
}

}  // namespace umbraq

#include "umbraq/umbral.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace umbraq {

namespace {

bool is_small_integer(double mu, std::size_t limit) {
    return mu >= 0.0 && mu == std::floor(mu) && mu < static_cast<double>(limit);
}

// Stop once two consecutive terms are negligible and the second is no larger
// than the first.
bool negligible(long double t, long double prev, long double sum, long double abs_sum,
                const ToleranceConfig& tol) {
    const long double thr = std::max<long double>(
        std::min<long double>(tol.abs_tol, 1e-3L * tol.rel_tol * std::fabs(sum)), 1e-19L * abs_sum);
    return std::fabs(t) <= thr && std::fabs(prev) <= thr && std::fabs(t) <= std::fabs(prev);
}

SpectralMeasure build_spectral(QParam q) {
    const double lq = q.log();
    // log (q;q)_inf from the same head/tail split as qGamma
    const std::size_t N = detail::head_length(lq, lq);
    long double log_qinf = 0.0L;
    for (std::size_t n = 1; n <= N; ++n) log_qinf += std::log1p(-std::exp(static_cast<double>(n) * lq));
    log_qinf += detail::log_pochhammer_tail(std::exp(static_cast<double>(N + 1) * lq), lq, 1e-18).value;

    SpectralMeasure m;
    long double log_qj = 0.0L;  // log (q;q)_j
    long double best = -std::numeric_limits<long double>::infinity();
    for (std::size_t j = 0; j < 5000; ++j) {
        const long double dj = static_cast<long double>(j);
        if (j > 0) log_qj += std::log1p(-std::exp(static_cast<long double>(dj * lq)));
        const long double log_w = 0.5L * dj * (dj + 1.0L) * lq - log_qj - log_qinf;
        best = std::max(best, log_w);
        if (log_w < best - 60.0L && j > 4) break;
        const long double sign = (j % 2 == 0) ? 1.0L : -1.0L;
        m.weights.push_back(sign * std::exp(log_w));
        m.nodes.push_back((1.0L - static_cast<long double>(q.value())) * std::exp(dj * lq));
    }
    return m;
}

SeriesSum spectral_image_series(const SpectralMeasure& m, double t, double a, int k) {
    long double s = 0.0L, abs_s = 0.0L;
    for (std::size_t j = 0; j < m.nodes.size(); ++j) {
        const long double node = m.nodes[j];
        const long double e = std::exp(-static_cast<long double>(t) * std::pow(node, k));
        const long double term = m.weights[j] * std::pow(node, a) * e;
        s += term;
        abs_s += std::fabs(term);
    }
    return {static_cast<double>(s), static_cast<double>(abs_s), m.nodes.size()};
}

// Moment series; gives up (terms = 0) once the running absolute sum passes
// `abandon_above`.
SeriesSum moment_image_series(const UmbralImage& image, double t, double a, int k, const ToleranceConfig& tol,
                              double abandon_above) {
    const bool integral_a = a == std::floor(a);
    long double power = 1.0L;  // (-t)^r / r!
    long double s = 0.0L, abs_s = 0.0L, prev = std::numeric_limits<long double>::infinity();
    double m = image.moment(a);
    for (std::size_t r = 0; r < tol.max_series_terms; ++r) {
        if (r > 0) {
            power *= -static_cast<long double>(t) / static_cast<long double>(r);
            const double mu = k * static_cast<double>(r) + a;
            if (integral_a || m == 0.0) {
                m = image.moment(mu);
            } else {
                for (int i = k; i > 0; --i) m *= image.ratio(mu - i);
            }
        }
        const long double term = power * m;
        s += term;
        abs_s += std::fabs(term);
        if (abs_s > abandon_above) return {static_cast<double>(s), static_cast<double>(abs_s), 0};
        if (r > 1 && negligible(term, prev, s, abs_s, tol))
            return {static_cast<double>(s), static_cast<double>(abs_s), r + 1};
        prev = term;
    }
    throw SeriesDivergence("image series for " + image.label() + " did not settle within max_series_terms");
}

}  // namespace

UmbralImage::UmbralImage(std::string label, Moment moment, Moment ratio, double series_gate,
                         std::vector<double> integer_moments, std::optional<SpectralMeasure> spectral)
    : label_(std::move(label)),
      moment_(std::move(moment)),
      ratio_(std::move(ratio)),
      series_gate_(series_gate),
      integer_moments_(std::move(integer_moments)),
      spectral_(std::move(spectral)) {}

double UmbralImage::moment(double mu) const {
    if (is_small_integer(mu, integer_moments_.size())) return integer_moments_[static_cast<std::size_t>(mu)];
    // the table stops at the first underflowed entry
    if (!integer_moments_.empty() && integer_moments_.back() == 0.0 && mu == std::floor(mu) &&
        mu >= static_cast<double>(integer_moments_.size()))
        return 0.0;
    return moment_(mu);
}

std::vector<double> UmbralImage::moment_sequence(double start, int step, std::size_t count) const {
    std::vector<double> out;
    out.reserve(count);
    double mu = start;
    double m = moment(mu);
    for (std::size_t r = 0; r < count; ++r) {
        out.push_back(m);
        for (int i = 0; i < step; ++i) {
            if (is_small_integer(mu + 1.0, integer_moments_.size()) || m == 0.0) {
                m = moment(mu + 1.0);
            } else {
                m *= ratio_(mu);
            }
            mu += 1.0;
        }
    }
    return out;
}

UmbralImage q_image(QParam q, const ToleranceConfig& tol) {
    std::vector<double> table;
    double inv_fact = 1.0;
    for (std::size_t n = 0; n < tol.max_series_terms; ++n) {
        if (n > 0) inv_fact /= q_number(static_cast<double>(n), q);
        table.push_back(inv_fact);
        if (inv_fact == 0.0) break;
    }
    auto moment = [q, tol](double mu) {
        // 1/qGamma(1 + mu), which vanishes at the poles mu = -1, -2, ...
        if (detail::is_nonpositive_integer(1.0 + mu)) return 0.0;
        return 1.0 / q_gamma(1.0 + mu, q, tol).value;
    };
    auto ratio = [q](double mu) { return 1.0 / q_number(mu + 1.0, q); };

    std::optional<SpectralMeasure> spectral;
    // past q ~ 0.95 the weights cancel beyond double precision everywhere
    if (q.value() <= 0.95) spectral = build_spectral(q);

    const std::string label = "c[q=" + std::to_string(q.value()) + "]";
    return UmbralImage(label, moment, ratio, 1.0 / (1.0 + q.value()), std::move(table), std::move(spectral));
}

double UmbralExpSeries::term(int r, double x) const {
    const double w = extra_weight ? extra_weight(r) : 1.0;
    return w * image->moment(r + shift) * std::pow(-x, r);
}

SeriesSum UmbralExpSeries::sum(double x, const ToleranceConfig& tol) const {
    long double s = 0.0L, abs_s = 0.0L, prev = std::numeric_limits<long double>::infinity();
    long double power = 1.0L;
    double mu = shift;
    double m = image->moment(mu);
    for (std::size_t r = 0; r < tol.max_series_terms; ++r) {
        if (r > 0) {
            power *= -static_cast<long double>(x);
            m = (m == 0.0 || mu + 1.0 == std::floor(mu + 1.0)) ? image->moment(mu + 1.0) : m * image->ratio(mu);
            mu += 1.0;
        }
        const long double w = extra_weight ? extra_weight(static_cast<int>(r)) : 1.0;
        const long double t = w * m * power;
        s += t;
        abs_s += std::fabs(t);
        if (r > 1 && negligible(t, prev, s, abs_s, tol))
            return {static_cast<double>(s), static_cast<double>(abs_s), r + 1};
        prev = t;
    }
    throw SeriesDivergence("umbral exponential series failed the ratio test for " + image->label());
}

double umbral_exp(const UmbralImage& image, double x, double shift, const ToleranceConfig& tol) {
    UmbralExpSeries series{&image, shift, [](int r) { return 1.0 / std::tgamma(r + 1.0); }};
    return series.sum(x, tol).value;
}

SeriesSum image_series(const UmbralImage& image, double t, double a, int k, const ToleranceConfig& tol) {
    const SpectralMeasure* spec = image.spectral();
    if (!spec) return moment_image_series(image, t, a, k, tol, std::numeric_limits<double>::infinity());

    const SeriesSum viaSpec = spectral_image_series(*spec, t, a, k);
    const double node0 = static_cast<double>(spec->nodes.front());
    if (!std::isfinite(viaSpec.abs_sum))
        return moment_image_series(image, t, a, k, tol, std::numeric_limits<double>::infinity());
    if (viaSpec.abs_sum <= 1e3 * std::fabs(viaSpec.value) || t * std::pow(node0, k) > 40.0) return viaSpec;
    const SeriesSum viaMoments = moment_image_series(image, t, a, k, tol, viaSpec.abs_sum);
    if (viaMoments.terms == 0) return viaSpec;
    return viaMoments.abs_sum <= viaSpec.abs_sum ? viaMoments : viaSpec;
}

double umbral_rational_series(const UmbralImage& image, double x, int a, int k, const ToleranceConfig& tol) {
    long double s = 0.0L, abs_s = 0.0L, prev = std::numeric_limits<long double>::infinity();
    const long double xk = std::pow(static_cast<long double>(x), k);
    long double power = std::pow(static_cast<long double>(x), a);
    for (std::size_t r = 0; r < tol.max_series_terms; ++r) {
        if (r > 0) power *= -xk;
        const long double t = power * image.moment(static_cast<double>(k * r + a));
        s += t;
        abs_s += std::fabs(t);
        if (r > 1 && std::fabs(t) > std::fabs(prev) && std::fabs(t) > 1e-300L && r > 50)
            throw SeriesDivergence("rational series diverges at x = " + std::to_string(x));
        if (r > 1 && negligible(t, prev, s, abs_s, tol)) return static_cast<double>(s);
        prev = t;
    }
    throw SeriesDivergence("rational series did not converge within max_series_terms");
}

QuadratureResult umbral_rational_integral(const UmbralImage& image, double x, int a, int k,
                                          const ToleranceConfig& tol) {
    const double xk = std::pow(x, k);
    if (xk < 0.0) throw DomainError("Borel route needs x^k >= 0, got x = " + std::to_string(x));
    const double xa = std::pow(x, a);
    auto r = laplace_integral([&](double s) { return image_series(image, s * xk, a, k, tol).value; }, tol);
    r.value *= xa;
    r.abs_error_estimate *= std::fabs(xa);
    return r;
}

double umbral_rational(const UmbralImage& image, double x, int a, int k, EvalMethod method,
                       const ToleranceConfig& tol) {
    if (x == 0.0) return a == 0 ? 1.0 : 0.0;
    const bool inside = std::pow(std::fabs(x), k) < image.series_gate();
    switch (method) {
    case EvalMethod::series:
        if (!inside)
            throw SeriesDivergence("x = " + std::to_string(x) + " lies outside the series gate of " +
                                   image.label());
        return umbral_rational_series(image, x, a, k, tol);
    case EvalMethod::borel_integral:
        return umbral_rational_integral(image, x, a, k, tol).value;
    case EvalMethod::automatic:
        break;
    }
    return inside ? umbral_rational_series(image, x, a, k, tol) : umbral_rational_integral(image, x, a, k, tol).value;
}

double umbral_rational_spectral(const UmbralImage& image, double x, int a, int k) {
    const SpectralMeasure* m = image.spectral();
    if (!m) throw DomainError(image.label() + " has no spectral measure");
    long double s = 0.0L;
    for (std::size_t j = 0; j < m->nodes.size(); ++j) {
        const long double y = static_cast<long double>(x) * m->nodes[j];
        s += m->weights[j] * std::pow(y, a) / (1.0L + std::pow(y, k));
    }
    return static_cast<double>(s);
}

}  // namespace umbraq

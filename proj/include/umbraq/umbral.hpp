#pragma once

// Umbral images: a moment rule mu -> value standing for "operator^mu applied
// to the vacuum", and evaluators turning umbral exponentials and rationals
// into ordinary series or Laplace (Borel) integrals.
//
// The q-image c has moment(mu) = 1/qGamma(1 + mu).  Euler's expansion of
// 1/(q;q)_m gives it a discrete spectral measure,
//     moment(mu) = sum_j w_j a_j^mu,   a_j = (1-q) q^j,
//     w_j = (-1)^j q^{j(j+1)/2} / ((q;q)_j (q;q)_inf),
// so any umbral expression f(c) phi_0 equals sum_j w_j f(a_j).  The
// evaluators use it where the moment series cancels catastrophically (large
// arguments); the direct rational sum serves as an independent oracle.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "umbraq/qcore.hpp"
#include "umbraq/quadrature.hpp"

namespace umbraq {

struct SpectralMeasure {
    std::vector<long double> nodes;    // a_j
    std::vector<long double> weights;  // w_j
};

class UmbralImage {
public:
    using Moment = std::function<double(double)>;

    /// `ratio(mu)` must return moment(mu + 1) / moment(mu); it drives the
    /// moment sequences of the series evaluators.
    UmbralImage(std::string label, Moment moment, Moment ratio, double series_gate = 0.0,
                std::vector<double> integer_moments = {}, std::optional<SpectralMeasure> spectral = {});

    const std::string& label() const noexcept { return label_; }
    double moment(double mu) const;
    double ratio(double mu) const { return ratio_(mu); }

    /// moment(start + step * r) for r = 0..count-1.
    std::vector<double> moment_sequence(double start, int step, std::size_t count) const;

    /// Radius inside which the rational series is trusted (0: never).
    double series_gate() const noexcept { return series_gate_; }
    const SpectralMeasure* spectral() const noexcept { return spectral_ ? &*spectral_ : nullptr; }

private:
    std::string label_;
    Moment moment_;
    Moment ratio_;
    double series_gate_;
    std::vector<double> integer_moments_;
    std::optional<SpectralMeasure> spectral_;
};

/// The q-image: moment(mu) = 1/qGamma(1 + mu), gate (1 + q)^{-1}.
UmbralImage q_image(QParam q, const ToleranceConfig& tol = {});

/// Running state of an alternating-style series: partial sum plus the sum
/// of |terms|, whose ratio measures cancellation.
struct SeriesSum {
    double value = 0.0;
    double abs_sum = 0.0;
    std::size_t terms = 0;
};

/// term(r) = extra_weight(r) * moment(r + shift) * (-x)^r.
struct UmbralExpSeries {
    const UmbralImage* image;
    double shift = 0.0;
    std::function<double(int)> extra_weight;

    double term(int r, double x) const;
    SeriesSum sum(double x, const ToleranceConfig& tol) const;
};

/// sum_r (-x)^r moment(r + shift) / r!
double umbral_exp(const UmbralImage& image, double x, double shift, const ToleranceConfig& tol = {});

/// E(t) = sum_r (-t)^r moment(k r + a) / r!, the entire image series whose
/// Laplace transform realizes 1/(1 + t c^k) c^a.  Chooses between the moment
/// series and the spectral sum by the smaller cancellation.
SeriesSum image_series(const UmbralImage& image, double t, double a, int k, const ToleranceConfig& tol = {});

enum class EvalMethod { series, borel_integral, automatic };

/// x^a c^a / (1 + c^k x^k) phi_0.
double umbral_rational(const UmbralImage& image, double x, int numerator_power, int denominator_power,
                       EvalMethod method = EvalMethod::automatic, const ToleranceConfig& tol = {});

/// Laplace route with its quadrature diagnostics.
QuadratureResult umbral_rational_integral(const UmbralImage& image, double x, int numerator_power,
                                          int denominator_power, const ToleranceConfig& tol = {});

/// Direct alternating series sum_r (-1)^r x^{k r + a} moment(k r + a).
double umbral_rational_series(const UmbralImage& image, double x, int numerator_power, int denominator_power,
                              const ToleranceConfig& tol = {});

/// sum_j w_j (x a_j)^a / (1 + (x a_j)^k); requires a spectral measure.
double umbral_rational_spectral(const UmbralImage& image, double x, int numerator_power, int denominator_power);

}  // namespace umbraq

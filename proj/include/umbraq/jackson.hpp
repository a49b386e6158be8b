#pragma once

// Jackson derivative qD f(x) = (f(x) - f(qx)) / ((1-q) x), on sampled
// functions and exactly on polynomial coefficients, plus the two-variable
// q-Hermite polynomials
//   H_n(x, y) = sum_r [n]_q! y^r x^{n-2r} / ([n-2r]_q! r!) = exp(y qD_x^2) x^n.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "umbraq/qcore.hpp"

namespace umbraq {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);
    static Polynomial monomial(int n, double c = 1.0);

    const std::vector<double>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    double operator()(double x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator*(double s) const;

private:
    void trim();
    std::vector<double> c_;
};

/// Terms keyed by (x power, y power); zero coefficients are dropped.
class BivariatePoly {
public:
    using Key = std::pair<int, int>;

    BivariatePoly() = default;
    void add_term(int x_power, int y_power, double coeff);

    const std::map<Key, double>& terms() const noexcept { return terms_; }
    double coeff(int x_power, int y_power) const;
    double operator()(double x, double y) const;
    /// sum |c| |x|^i |y|^j: the scale against which residuals are judged
    double magnitude(double x, double y) const;
    double max_abs_coeff() const;

    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    BivariatePoly operator*(double s) const;
    /// multiplies by x^i y^j
    BivariatePoly shifted(int i, int j) const;

    BivariatePoly d_x() const;
    BivariatePoly d_y() const;
    BivariatePoly jackson_x(QParam q) const;

private:
    std::map<Key, double> terms_;
};

using RealFunction = std::function<double(double)>;

/// (f(x) - f(qx)) / ((1-q) x); for |x| < 1e-8, the limit f'(0) by central
/// differences.
double jackson_derivative_fn(const RealFunction& f, double x, QParam q);

Polynomial jackson_derivative_poly(const Polynomial& p, QParam q);

/// qD_x qe(lambda x) + lambda qe(lambda x).
double q_exp_eigen_residual(double lambda, double x, QParam q, const ToleranceConfig& tol = {});

enum class TricomiVariant { q1, qq };

/// q1: d/dx [x qD_x C(lambda x)] + lambda C(lambda x), outer derivative by
///     Richardson-extrapolated central differences (h = 1e-5);
/// qq: qD_x [x qD_x C_qq(lambda x)] + lambda C_qq(lambda x).
double tricomi_eigen_residual(TricomiVariant variant, double lambda, double x, QParam q,
                              const ToleranceConfig& tol = {});

/// Closed-form coefficients.
BivariatePoly q_hermite(int n, QParam q);

/// sum_k y^k/k! (qD_x^2)^k x^n built with jackson_derivative_poly.
BivariatePoly q_hermite_operator(int n, QParam q);

/// Residuals at (x, y), each divided by the magnitude of the terms involved:
///   r1 = qD_x H_n - [n] H_{n-1}
///   r2 = d_x H_n - (n/x) H_n + (2y/x) [n][n-1] H_{n-2}
///   r3 = x d_x H_n + 2y qD_x^2 H_n - n H_n
///   ry = d_y H_n - [n][n-1] H_{n-2}
struct HermiteResiduals {
    double r1 = 0.0, r2 = 0.0, r3 = 0.0, ry = 0.0;
};
HermiteResiduals q_hermite_recurrence_residuals(int n, QParam q, double x, double y);

/// Largest coefficient of d_y H_n - qD_x^2 H_n relative to max |coeff H_n|.
double q_heat_defect(int n, QParam q);

/// |sum_{n<=N} t^n H_n(x,y)/[n]_q! - exp(y t^2) qe(-x t)|; the q-exponential
/// follows the sum_r (-x)^r/[r]_q! convention, hence the sign of its argument.
double q_hermite_genfun_residual(double x, double y, double t, QParam q, int N, const ToleranceConfig& tol = {});

}  // namespace umbraq

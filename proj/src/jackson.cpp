#include "umbraq/jackson.hpp"

#include <algorithm>
#include <cmath>

#include "umbraq/qfunctions.hpp"

namespace umbraq {

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int n, double c) {
    if (n < 0) throw DomainError("monomial degree must be >= 0");
    std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double Polynomial::operator()(double x) const {
    double s = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
    return s;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<double> v(std::max(c_.size(), o.c_.size()), 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(double s) const {
    std::vector<double> v = c_;
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
}

void BivariatePoly::add_term(int i, int j, double c) {
    if (i < 0 || j < 0) throw DomainError("negative power in BivariatePoly");
    const double v = (terms_[{i, j}] += c);
    if (v == 0.0) terms_.erase({i, j});
}

double BivariatePoly::coeff(int i, int j) const {
    const auto it = terms_.find({i, j});
    return it == terms_.end() ? 0.0 : it->second;
}

double BivariatePoly::operator()(double x, double y) const {
    double s = 0.0;
    for (const auto& [k, c] : terms_) s += c * std::pow(x, k.first) * std::pow(y, k.second);
    return s;
}

double BivariatePoly::magnitude(double x, double y) const {
    double s = 0.0;
    for (const auto& [k, c] : terms_)
        s += std::fabs(c) * std::pow(std::fabs(x), k.first) * std::pow(std::fabs(y), k.second);
    return s;
}

double BivariatePoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [k, c] : terms_) m = std::max(m, std::fabs(c));
    return m;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    BivariatePoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const { return *this + o * -1.0; }

BivariatePoly BivariatePoly::operator*(double s) const {
    BivariatePoly r;
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
    return r;
}

BivariatePoly BivariatePoly::shifted(int i, int j) const {
    BivariatePoly r;
    for (const auto& [k, c] : terms_) r.add_term(k.first + i, k.second + j, c);
    return r;
}

BivariatePoly BivariatePoly::d_x() const {
    BivariatePoly r;
    for (const auto& [k, c] : terms_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, c * k.first);
    return r;
}

BivariatePoly BivariatePoly::d_y() const {
    BivariatePoly r;
    for (const auto& [k, c] : terms_)
        if (k.second > 0) r.add_term(k.first, k.second - 1, c * k.second);
    return r;
}

BivariatePoly BivariatePoly::jackson_x(QParam q) const {
    BivariatePoly r;
    for (const auto& [k, c] : terms_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, c * q_number(k.first, q));
    return r;
}

double jackson_derivative_fn(const RealFunction& f, double x, QParam q) {
    if (std::fabs(x) < 1e-8) {
        const double h = 1e-5;
        const double d1 = (f(h) - f(-h)) / (2.0 * h);
        const double d2 = (f(0.5 * h) - f(-0.5 * h)) / h;
        return (4.0 * d2 - d1) / 3.0;
    }
    return (f(x) - f(q.value() * x)) / ((1.0 - q.value()) * x);
}

Polynomial jackson_derivative_poly(const Polynomial& p, QParam q) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) return Polynomial();
    std::vector<double> v(c.size() - 1);
    for (std::size_t n = 1; n < c.size(); ++n) v[n - 1] = c[n] * q_number(static_cast<double>(n), q);
    return Polynomial(std::move(v));
}

double q_exp_eigen_residual(double lambda, double x, QParam q, const ToleranceConfig& tol) {
    auto e = [&](double s) { return q_exp(lambda * s, q, EvalMethod::automatic, tol); };
    return jackson_derivative_fn(e, x, q) + lambda * e(x);
}

double tricomi_eigen_residual(TricomiVariant variant, double lambda, double x, QParam q,
                              const ToleranceConfig& tol) {
    if (!(x > 0.0)) throw DomainError("tricomi_eigen_residual requires x > 0");
    RealFunction C;
    if (variant == TricomiVariant::q1)
        C = [&](double s) { return tricomi_q1(lambda * s, q, tol); };
    else
        C = [&](double s) { return tricomi_qq(lambda * s, q, tol); };
    auto inner = [&](double s) { return s * jackson_derivative_fn(C, s, q); };

    double outer;
    if (variant == TricomiVariant::q1) {
        const double h = 1e-5;
        const double d1 = (inner(x + h) - inner(x - h)) / (2.0 * h);
        const double d2 = (inner(x + 0.5 * h) - inner(x - 0.5 * h)) / h;
        outer = (4.0 * d2 - d1) / 3.0;
    } else {
        outer = jackson_derivative_fn(inner, x, q);
    }
    return outer + lambda * C(x);
}

BivariatePoly q_hermite(int n, QParam q) {
    if (n < 0) throw DomainError("q_hermite requires n >= 0");
    BivariatePoly h;
    const double fn = q_factorial(n, q);
    double rfact = 1.0;
    for (int r = 0; 2 * r <= n; ++r) {
        if (r > 0) rfact *= r;
        h.add_term(n - 2 * r, r, fn / (q_factorial(n - 2 * r, q) * rfact));
    }
    return h;
}

BivariatePoly q_hermite_operator(int n, QParam q) {
    if (n < 0) throw DomainError("q_hermite_operator requires n >= 0");
    BivariatePoly h;
    Polynomial p = Polynomial::monomial(n);
    double kfact = 1.0;
    for (int k = 0; p.degree() >= 0; ++k) {
        if (k > 0) kfact *= k;
        const auto& c = p.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0.0) h.add_term(static_cast<int>(i), k, c[i] / kfact);
        p = jackson_derivative_poly(jackson_derivative_poly(p, q), q);
    }
    return h;
}

HermiteResiduals q_hermite_recurrence_residuals(int n, QParam q, double x, double y) {
    if (n < 2) throw DomainError("recurrence residuals need n >= 2");
    if (x == 0.0) throw DomainError("r2 is singular at x = 0");
    const auto H = q_hermite(n, q), H1 = q_hermite(n - 1, q), H2 = q_hermite(n - 2, q);
    const double nq = q_number(n, q), nq1 = q_number(n - 1, q);
    const double dn = static_cast<double>(n);

    auto rel = [x, y](const BivariatePoly& lhs, const BivariatePoly& rhs) {
        const double scale = std::max(lhs.magnitude(x, y) + rhs.magnitude(x, y), 1e-300);
        return std::fabs(lhs(x, y) - rhs(x, y)) / scale;
    };

    HermiteResiduals r;
    r.r1 = rel(H.jackson_x(q), H1 * nq);
    // x r2 = x d_x H - n H + 2y [n][n-1] H_{n-2}
    r.r2 = rel(H.d_x().shifted(1, 0) + H2.shifted(0, 1) * (2.0 * nq * nq1), H * dn);
    r.r3 = rel(H.d_x().shifted(1, 0) + H.jackson_x(q).jackson_x(q).shifted(0, 1) * 2.0, H * dn);
    r.ry = rel(H.d_y(), H2 * (nq * nq1));
    return r;
}

double q_heat_defect(int n, QParam q) {
    const auto H = q_hermite(n, q);
    const auto d = H.d_y() - H.jackson_x(q).jackson_x(q);
    return d.max_abs_coeff() / H.max_abs_coeff();
}

double q_hermite_genfun_residual(double x, double y, double t, QParam q, int N, const ToleranceConfig& tol) {
    if (N < 0) throw DomainError("truncation order must be >= 0");
    if (t == 0.0) return 0.0;
    long double lhs = 0.0L, tn = 1.0L;
    for (int n = 0; n <= N; ++n) {
        if (n > 0) tn *= t;
        lhs += tn * q_hermite(n, q)(x, y) / q_factorial(n, q);
    }
    const double rhs = std::exp(y * t * t) * q_exp(-x * t, q, EvalMethod::series, tol);
    return std::fabs(static_cast<double>(lhs) - rhs);
}

}  // namespace umbraq

#include "umbraq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "umbraq/jackson.hpp"
#include "umbraq/qfunctions.hpp"
#include "umbraq/qtrig.hpp"
#include "umbraq/quadrature.hpp"
#include "umbraq/tsallis.hpp"

namespace umbraq {

namespace {

using std::numbers::pi;

struct Outcome {
    double lhs;
    double rhs;
    std::string note;
};

// Runs `body`, timing it and turning exceptions into failed reports.
IdentityReport timed(const std::string& id, double q, double native_tol, const SuiteConfig& cfg,
                     const std::function<Outcome()>& body) {
    IdentityReport r;
    r.identity_id = id;
    r.q = q;
    r.tolerance = effective_tolerance(native_tol, cfg);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Outcome o = body();
        r.lhs_numeric = o.lhs;
        r.rhs_closed = o.rhs;
        r.abs_residual = std::fabs(o.lhs - o.rhs);
        r.rel_residual = o.rhs != 0.0 ? r.abs_residual / std::fabs(o.rhs) : r.abs_residual;
        r.passed = std::isfinite(r.rel_residual) && r.rel_residual < r.tolerance;
        r.note = o.note;
    } catch (const NonConvergence& e) {
        r.lhs_numeric = e.partial().value;
        r.abs_residual = r.rel_residual = std::numeric_limits<double>::infinity();
        r.note = e.what();
    } catch (const std::exception& e) {
        r.abs_residual = r.rel_residual = std::numeric_limits<double>::infinity();
        r.note = e.what();
    }
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// Residual-type check: lhs is a residual (already normalized), rhs = 0.
IdentityReport residual(const std::string& id, double q, double native_tol, const SuiteConfig& cfg,
                        const std::function<double()>& body, std::string note = {}) {
    return timed(id, q, native_tol, cfg, [&] { return Outcome{body(), 0.0, note}; });
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

double effective_tolerance(double native, const SuiteConfig& cfg) {
    return cfg.threshold ? std::min(native, *cfg.threshold) : native;
}

IdentityReport check_q_gaussian_integral(double q, const SuiteConfig& cfg) {
    return timed("q_gaussian_integral", q, 1e-5, cfg, [&] {
        const QParam Q(q);
        auto f = [&](double x) { return q_exp(x * x, Q, EvalMethod::borel_integral, cfg.numerics); };
        const auto lhs = real_line_integral(f, TailPolicy::algebraic(3.0, 8.0), cfg.quadrature);
        return Outcome{lhs.value, pi / std::sqrt(pi_q(Q, cfg.numerics)), {}};
    });
}

std::pair<IdentityReport, IdentityReport> check_q_fresnel(double q, const SuiteConfig& cfg) {
    auto run = [&](const char* id, bool sine) {
        return timed(id, q, 1e-4, cfg, [&] {
            const QParam Q(q);
            auto f = [&](double y) {
                return sine ? q_sin(y * y, Q, cfg.numerics) : q_cos(y * y, Q, cfg.numerics);
            };
            const auto lhs = oscillatory_halfline_integral(f, TailPolicy::algebraic(3.0, 8.0), cfg.quadrature, 0.05);
            return Outcome{lhs.value, pi / std::sqrt(8.0 * pi_q(Q, cfg.numerics)), {}};
        });
    };
    return {run("q_fresnel_cos", false), run("q_fresnel_sin", true)};
}

double power_integral_rhs(int m, double q, PowerForm form, const ToleranceConfig& tol) {
    if (m < 2) throw DomainError("power integral requires m >= 2");
    const QParam Q(q);
    const double dm = m;
    if (form == PowerForm::naive) return q_gamma((dm - 1.0) / dm, Q, tol).value / dm;
    const double a = 1.0 / dm;
    return classical_gamma(a) * classical_gamma(1.0 - a) / (dm * q_gamma(1.0 - a, Q, tol).value);
}

IdentityReport check_power_integral(int m, double q, const SuiteConfig& cfg, PowerForm form) {
    const std::string id = std::string(form == PowerForm::naive ? "power_integral_naive_m"
                                                                   : "power_integral_m") +
                           std::to_string(m);
    return timed(id, q, 1e-5, cfg, [&] {
        const QParam Q(q);
        auto f = [&](double x) { return q_exp(std::pow(x, m), Q, EvalMethod::borel_integral, cfg.numerics); };
        const auto lhs = halfline_integral(f, TailPolicy::algebraic(3.0, 8.0), cfg.quadrature);
        return Outcome{lhs.value, power_integral_rhs(m, q, form, cfg.numerics), {}};
    });
}

IdentityReport check_tricomi_gaussian(double q, const SuiteConfig& cfg) {
    return timed("tricomi_gaussian", q, 1e-5, cfg, [&] {
        const QParam Q(q);
        auto f = [&](double x) { return tricomi_q1(x * x, Q, cfg.numerics); };
        const auto lhs = real_line_integral(f, TailPolicy::algebraic(3.0, 8.0), cfg.quadrature);
        return Outcome{lhs.value, std::sqrt(pi / pi_q(Q, cfg.numerics)), {}};
    });
}

double borel_chain_inner(double s, double q, const SuiteConfig& cfg) {
    if (!(s > 0.0)) throw DomainError("borel_chain_inner requires s > 0");
    const QParam Q(q);
    auto f = [&](double x) { return tricomi_q1(x * x * s, Q, cfg.numerics); };
    // the integrand has width ~ 1/sqrt(s)
    return real_line_integral(f, TailPolicy::algebraic(3.0, 8.0 / std::sqrt(s)), cfg.quadrature).value;
}

IdentityReport check_borel_chain(double q, const SuiteConfig& cfg) {
    return timed("borel_chain", q, 1e-4, cfg, [&] {
        const QParam Q(q);
        // s = u^2: int_0^inf 2u e^{-u^2} inner(u^2) du
        auto g = [&](double u) {
            if (u == 0.0) return 0.0;
            return 2.0 * u * std::exp(-u * u) * borel_chain_inner(u * u, q, cfg);
        };
        const auto lhs = halfline_integral(g, TailPolicy::exponential(6.0, 1.0), cfg.quadrature);
        return Outcome{lhs.value, pi / std::sqrt(pi_q(Q, cfg.numerics)), {}};
    });
}

std::vector<IdentityReport> check_qtrig(double q, const SuiteConfig& cfg) {
    std::vector<IdentityReport> out;
    out.push_back(residual("sin_q_zeros", q, 1e-300, cfg, [&] {
        double m = 0.0;
        for (int k = 0; k <= 5; ++k) m = std::max(m, std::fabs(sin_q_scaled(k, QParam(q))));
        return m;
    }, "max |sin_q(pi_q k)|, k = 0..5; must vanish exactly"));
    out.push_back(timed("sin_q_half", q, 1e-10, cfg, [&] {
        return Outcome{sin_q_scaled(0.5, QParam(q)), 1.0, {}};
    }));
    out.push_back(residual("sin_cos_shift", q, 1e-9, cfg, [&] {
        double m = 0.0;
        for (int i = 0; i <= 40; ++i) m = std::max(m, std::fabs(sin_cos_shift_residual(0.05 * i, QParam(q))));
        return m;
    }, "max over x in [0, 2] step 0.05"));
    out.push_back(residual("sin_q_reflection", q, 1e-9, cfg, [&] {
        double m = 0.0;
        for (int i = 1; i < 20; ++i) {
            const double x = 0.05 * i;
            m = std::max(m, std::fabs(sin_q_scaled(x, QParam(q)) / sin_q_reflection(x, QParam(q)) - 1.0));
        }
        return m;
    }, "product vs pi_q/(qGamma(x) qGamma(1-x)) on (0, 1)"));
    out.push_back(residual("cos_q_reflection", q, 1e-10, cfg, [&] {
        double m = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double x = -0.45 + 0.1 * i;
            m = std::max(m, std::fabs(cos_q_scaled(x, QParam(q)) / cos_q_reflection(x, QParam(q)) - 1.0));
        }
        return m;
    }, "product vs pi_q/(qGamma(1/2+x) qGamma(1/2-x)) on (-1/2, 1/2)"));
    out.push_back(residual("sin_q_half_integer", q, 1e-9, cfg, [&] {
        double m = 0.0;
        for (int k = 0; k <= 5; ++k) {
            const double expect = (k % 2 ? -1.0 : 1.0) * std::pow(q, -0.5 * k * k);
            m = std::max(m, std::fabs(sin_q_scaled(k + 0.5, QParam(q)) / expect - 1.0));
        }
        return m;
    }, "sin_q(pi_q (k + 1/2)) = (-1)^k q^{-k^2/2}, k = 0..5"));
    out.push_back(residual("sin_q_parity_absence", q, 1.0, cfg, [&] {
        const double d = std::fabs(sin_q_scaled(-0.3, QParam(q)) + sin_q_scaled(0.3, QParam(q)));
        return 1e-3 / d;
    }, "1e-3 / |sin_q(-0.3) + sin_q(0.3)|; below 1 means odd parity is broken"));
    out.push_back(residual("sin_q_amplitude_growth", q, 0.5, cfg, [&] {
        return extremum_scan(QParam(q), 5).amplitude_non_decreasing ? 0.0 : 1.0;
    }, "|extremum| non-decreasing over (k, k+1), k = 0..5"));
    return out;
}

std::vector<IdentityReport> check_jackson(double q, const SuiteConfig& cfg) {
    std::vector<IdentityReport> out;
    const auto& tol = cfg.numerics;
    out.push_back(residual("q_exp_eigen", q, 1e-7, cfg, [&] {
        double m = 0.0;
        for (double lambda : {0.5, 1.0, -0.8})
            for (double x : {0.1, 0.2, 0.4}) m = std::max(m, std::fabs(q_exp_eigen_residual(lambda, x, QParam(q), tol)));
        return m;
    }));
    out.push_back(residual("tricomi_eigen_q1", q, 1e-5, cfg, [&] {
        double m = 0.0;
        for (double lambda : {1.0, 2.0, -1.0})
            for (double x : {0.5, 1.0})
                m = std::max(m, std::fabs(tricomi_eigen_residual(TricomiVariant::q1, lambda, x, QParam(q), tol)));
        return m;
    }));
    out.push_back(residual("tricomi_eigen_qq", q, 1e-7, cfg, [&] {
        double m = 0.0;
        for (double lambda : {1.0, -1.0})
            for (double x : {0.5, 1.0})
                m = std::max(m, std::fabs(tricomi_eigen_residual(TricomiVariant::qq, lambda, x, QParam(q), tol)));
        return m;
    }));
    out.push_back(residual("q_hermite_recurrences", q, 1e-12, cfg, [&] {
        double m = 0.0;
        for (int n = 2; n <= 10; ++n)
            for (auto [x, y] : {std::pair{1.3, -0.7}, std::pair{-0.6, 0.9}}) {
                const auto r = q_hermite_recurrence_residuals(n, QParam(q), x, y);
                m = std::max({m, r.r1, r.r2, r.r3, r.ry});
            }
        return m;
    }, "max of qD, d/dx, mixed and d/dy recurrences, n = 2..10"));
    out.push_back(residual("q_hermite_operator", q, 1e-12, cfg, [&] {
        double m = 0.0;
        for (int n = 0; n <= 10; ++n) {
            const auto a = q_hermite(n, QParam(q));
            m = std::max(m, (a - q_hermite_operator(n, QParam(q))).max_abs_coeff() / a.max_abs_coeff());
        }
        return m;
    }, "closed form vs exp(y qD^2) x^n, n = 0..10"));
    out.push_back(residual("q_heat", q, 1e-12, cfg, [&] {
        double m = 0.0;
        for (int n = 0; n <= 10; ++n) m = std::max(m, q_heat_defect(n, QParam(q)));
        return m;
    }));
    out.push_back(residual("q_hermite_genfun", q, 1e-8, cfg, [&] {
        double m = 0.0;
        for (double t : {-0.2, -0.1, 0.1, 0.2})
            m = std::max(m, q_hermite_genfun_residual(0.5, 0.3, t, QParam(q), 30, tol));
        return m;
    }, "N = 30, x = 0.5, y = 0.3"));
    return out;
}

IdentityReport check_q_gaussian_derivatives(double q, const SuiteConfig& cfg) {
    return residual("q_gaussian_derivative", q, 1e-6, cfg, [&] {
        double m = 0.0;
        for (int n = 0; n <= 5; ++n)
            for (int i = 0; i <= 17; ++i) {
                const double x = 0.3 + 0.1 * i;
                m = std::max(m, std::fabs(q_gaussian_derivative(n, x, QParam(q), cfg.numerics) -
                                          q_gaussian_derivative_series(n, x, QParam(q), cfg.numerics)));
            }
        return m;
    }, "Hermite/q-Bessel expansion vs differentiated series, n <= 5, x in [0.3, 2]");
}

std::vector<IdentityReport> check_tsallis(const SuiteConfig& cfg) {
    std::vector<IdentityReport> out;
    ToleranceConfig tight = cfg.quadrature;
    tight.rel_tol = std::min(tight.rel_tol, 1e-12);
    for (double Q : {0.25, 0.5, 1.0}) {
        out.push_back(timed("tsallis_gaussian_Q" + fmt(Q), 0.0, 1e-8, cfg, [&] {
            const auto r = tsallis_gaussian_integral(TsallisParam(Q), tight);
            return Outcome{r.numeric.value, r.closed, {}};
        }));
    }
    out.push_back(residual("tsallis_genfun", 0.0, 1e-9, cfg, [&] {
        double m = 0.0;
        for (double Q : {0.25, 0.5, 1.0})
            for (double x : {-0.3, 0.1, 0.2, 0.3})
                for (double y : {0.0, 0.5, 1.0}) m = std::max(m, tsallis_genfun_residual(x, y, TsallisParam(Q), 20));
        return m;
    }, "N = 20, |x| <= 0.3"));
    return out;
}

IdentityReport check_rhs_continuity(const std::vector<double>& q_list, const SuiteConfig& cfg) {
    return residual("rhs_continuity", 0.0, 0.1, cfg, [&] {
        if (q_list.size() < 2) return 0.0;
        const auto [lo, hi] = std::minmax_element(q_list.begin(), q_list.end());
        std::vector<std::function<double(double)>> forms = {
            [&](double q) { return pi / std::sqrt(pi_q(QParam(q), cfg.numerics)); },
            [&](double q) { return pi / std::sqrt(8.0 * pi_q(QParam(q), cfg.numerics)); },
            [&](double q) { return std::sqrt(pi / pi_q(QParam(q), cfg.numerics)); },
        };
        for (int m = 2; m <= 4; ++m)
            forms.push_back([m, &cfg](double q) { return power_integral_rhs(m, q, PowerForm::corrected, cfg.numerics); });
        double worst = 0.0;
        for (const auto& f : forms) {
            double prev = f(*lo);
            for (double q = *lo + 0.01; q < *hi + 0.005; q += 0.01) {
                const double v = f(std::min(q, *hi));
                worst = std::max(worst, std::fabs(v - prev) / std::fabs(prev));
                prev = v;
            }
        }
        return worst;
    }, "largest relative jump of a closed form between q steps of 0.01");
}

std::vector<IdentityReport> run_suite(const std::vector<double>& q_list, const SuiteConfig& cfg) {
    std::vector<IdentityReport> out;
    if (q_list.empty()) return out;

    std::vector<std::function<std::vector<IdentityReport>()>> jobs;
    for (double q : q_list) {
        // validate eagerly so a bad q fails the whole suite loudly
        (void)QParam(q);
        jobs.push_back([q, &cfg] { return std::vector{check_q_gaussian_integral(q, cfg)}; });
        jobs.push_back([q, &cfg] {
            auto [c, s] = check_q_fresnel(q, cfg);
            return std::vector{c, s};
        });
        for (int m = 2; m <= 4; ++m)
            jobs.push_back([q, m, &cfg] { return std::vector{check_power_integral(m, q, cfg, PowerForm::corrected)}; });
        jobs.push_back([q, &cfg] { return std::vector{check_tricomi_gaussian(q, cfg)}; });
        jobs.push_back([q, &cfg] { return std::vector{check_borel_chain(q, cfg)}; });
        jobs.push_back([q, &cfg] { return check_qtrig(q, cfg); });
        jobs.push_back([q, &cfg] { return check_jackson(q, cfg); });
        jobs.push_back([q, &cfg] { return std::vector{check_q_gaussian_derivatives(q, cfg)}; });
    }
    jobs.push_back([&cfg] { return check_tsallis(cfg); });
    jobs.push_back([&q_list, &cfg] { return std::vector{check_rhs_continuity(q_list, cfg)}; });

    std::vector<std::vector<IdentityReport>> results(jobs.size());
    kernels::sample(results, [&](std::size_t i) { return jobs[i](); }, cfg.exec);
    for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    std::stable_sort(out.begin(), out.end(), [](const IdentityReport& a, const IdentityReport& b) {
        return a.identity_id != b.identity_id ? a.identity_id < b.identity_id : a.q < b.q;
    });
    return out;
}

bool all_passed(const std::vector<IdentityReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed; });
}

}  // namespace umbraq

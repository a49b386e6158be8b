// umbraq: evaluate q-functions, emit sine-q/cosine-q plot data, run the
// identity suite.  Exit status: 0 ok, 1 numerical failure or failed
// identities, 2 configuration error.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "umbraq/jackson.hpp"
#include "umbraq/qcore.hpp"
#include "umbraq/qfunctions.hpp"
#include "umbraq/qtrig.hpp"
#include "umbraq/report_io.hpp"
#include "umbraq/tsallis.hpp"
#include "umbraq/verify.hpp"

using namespace umbraq;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_number(const std::string& s, const char* what) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || p != end || s.empty()) throw ConfigError(std::string("bad ") + what + ": '" + s + "'");
    return v;
}

std::vector<double> parse_q_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const double q = parse_number(item, "q value");
        (void)QParam(q);  // validation
        out.push_back(q);
    }
    if (out.empty()) throw ConfigError("--q needs at least one value");
    return out;
}

std::pair<double, double> parse_range(const std::string& s) {
    const auto c = s.find(':');
    if (c == std::string::npos) throw ConfigError("--range expects a:b, got '" + s + "'");
    const double a = parse_number(s.substr(0, c), "range start"), b = parse_number(s.substr(c + 1), "range end");
    if (!(b > a)) throw ConfigError("--range needs a < b");
    return {a, b};
}

struct Options {
    std::string q = "0.4,0.6,0.9";
    std::optional<double> x, mu, rel_tol, abs_tol;
    std::optional<int> n;
    std::string range;
    std::size_t steps = 600;
    std::string out;
    std::string format;
    std::string function;
    std::string kind = "trig";
};

ToleranceConfig tolerances(const Options& o) {
    ToleranceConfig t;
    if (o.rel_tol) t.rel_tol = *o.rel_tol;
    if (o.abs_tol) t.abs_tol = *o.abs_tol;
    if (const char* env = std::getenv("UMBRAQ_MAX_FACTORS")) {
        const double v = parse_number(env, "UMBRAQ_MAX_FACTORS");
        if (!(v >= 1.0)) throw ConfigError("UMBRAQ_MAX_FACTORS must be a positive integer");
        t.max_product_factors = static_cast<std::size_t>(v);
    }
    try {
        t.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return t;
}

// Writes to --out when given, stdout otherwise.
void emit(const Options& o, const std::function<void(std::ostream&)>& body) {
    if (o.out.empty()) {
        body(std::cout);
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw ConfigError("cannot open '" + o.out + "' for writing");
    body(f);
}

std::string hermite_string(const BivariatePoly& h) {
    std::vector<std::pair<BivariatePoly::Key, double>> terms(h.terms().begin(), h.terms().end());
    // descending x power
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first.first > b.first.first; });
    std::string s;
    for (const auto& [k, c] : terms) {
        std::string t;
        const bool unit = c == 1.0 && (k.first > 0 || k.second > 0);
        if (!unit) t = format_number(c);
        auto factor = [&t](const char* v, int p) {
            if (p == 0) return;
            if (!t.empty()) t += "*";
            t += v;
            if (p > 1) t += "^" + std::to_string(p);
        };
        factor("x", k.first);
        factor("y", k.second);
        s += (s.empty() ? "" : " + ") + t;
    }
    return s.empty() ? "0" : s;
}

double need(const std::optional<double>& v, const char* flag, const std::string& fn) {
    if (!v) throw ConfigError(fn + " needs " + flag);
    return *v;
}

int need_n(const std::optional<int>& v, const std::string& fn) {
    if (!v || *v < 0) throw ConfigError(fn + " needs --n >= 0");
    return *v;
}

int cmd_eval(const Options& o) {
    const auto tol = tolerances(o);
    const std::string& fn = o.function;
    static const std::vector<std::string> names = {
        "q_number",   "q_factorial",  "q_gamma",    "pi_q",   "pi_q_wallis", "q_exp",
        "tricomi_q1", "tricomi_qq",   "q_bessel",   "q_cos",  "q_sin",       "sin_q",
        "cos_q",      "q_hermite",    "tsallis_exp", "q_gaussian_derivative"};
    if (std::find(names.begin(), names.end(), fn) == names.end()) {
        std::string all;
        for (const auto& n : names) all += " " + n;
        throw ConfigError("unknown function '" + fn + "'; known:" + all);
    }
    // tsallis_exp takes its own parameter, not a base q
    if (fn == "tsallis_exp") {
        std::stringstream ss(o.q);
        std::string item;
        while (std::getline(ss, item, ','))
            std::cout << format_number(tsallis_exp(need(o.x, "--x", fn), parse_number(item, "q value"))) << '\n';
        return 0;
    }
    const auto qs = parse_q_list(o.q);
    const bool many = qs.size() > 1;
    TrigProductConfig trig;
    trig.max_factors = tol.max_product_factors;
    for (double qv : qs) {
        const QParam q(qv);
        if (many) std::cout << "q=" << format_number(qv) << '\t';
        if (fn == "q_number") {
            std::cout << format_number(q_number(need(o.x, "--x", fn), q));
        } else if (fn == "q_factorial") {
            std::cout << format_number(q_factorial(need_n(o.n, fn), q));
        } else if (fn == "q_gamma") {
            const auto g = q_gamma(need(o.x, "--x", fn), q, tol);
            std::cout << format_number(g.value) << "\ttruncation_bound=" << format_number(g.truncation_error_bound)
                      << "\tfactors=" << g.factors_used;
        } else if (fn == "pi_q") {
            const auto p = pi_q_detailed(q, tol);
            std::cout << format_number(p.value) << "\ttruncation_bound=" << format_number(p.truncation_error_bound)
                      << "\tfactors=" << p.factors_used;
        } else if (fn == "pi_q_wallis") {
            std::cout << format_number(pi_q_wallis(q, tol));
        } else if (fn == "q_exp") {
            const double x = need(o.x, "--x", fn);
            const auto img = q_image_cached(q, tol);
            if (std::fabs(x) < img->series_gate()) {
                std::cout << format_number(umbral_rational_series(*img, x, 0, 1, tol)) << "\tmethod=series";
            } else {
                const auto r = umbral_rational_integral(*img, x, 0, 1, tol);
                std::cout << format_number(r.value) << "\tquadrature_error=" << format_number(r.abs_error_estimate)
                          << "\tmethod=borel_integral";
            }
        } else if (fn == "tricomi_q1") {
            std::cout << format_number(tricomi_q1(need(o.x, "--x", fn), q, tol));
        } else if (fn == "tricomi_qq") {
            std::cout << format_number(tricomi_qq(need(o.x, "--x", fn), q, tol));
        } else if (fn == "q_bessel") {
            std::cout << format_number(q_bessel(need(o.mu, "--mu", fn), need(o.x, "--x", fn), q, tol));
        } else if (fn == "q_cos") {
            std::cout << format_number(q_cos(need(o.x, "--x", fn), q, tol));
        } else if (fn == "q_sin") {
            std::cout << format_number(q_sin(need(o.x, "--x", fn), q, tol));
        } else if (fn == "sin_q") {
            std::cout << format_number(sin_q_scaled(need(o.x, "--x", fn), q, trig));
        } else if (fn == "cos_q") {
            std::cout << format_number(cos_q_scaled(need(o.x, "--x", fn), q, trig));
        } else if (fn == "q_hermite") {
            std::cout << hermite_string(q_hermite(need_n(o.n, fn), q));
        } else if (fn == "q_gaussian_derivative") {
            std::cout << format_number(q_gaussian_derivative(need_n(o.n, fn), need(o.x, "--x", fn), q, tol));
        }
        std::cout << '\n';
    }
    return 0;
}

int cmd_plot(const Options& o) {
    const auto tol = tolerances(o);
    const auto qs = parse_q_list(o.q);
    if (o.steps < 1) throw ConfigError("--steps must be >= 1");
    const std::string format = o.format.empty() ? "csv" : o.format;
    if (format != "csv" && format != "svg") throw ConfigError("plot supports --format csv or svg");
    if (o.kind != "trig" && o.kind != "parametric") throw ConfigError("plot kind must be trig or parametric");
    const bool parametric = o.kind == "parametric";
    const auto [a, b] = o.range.empty() ? std::pair{0.0, parametric ? 2.0 : 6.0} : parse_range(o.range);

    TrigProductConfig cfg;
    cfg.max_factors = tol.max_product_factors;
    std::vector<std::vector<CurvePoint>> curves;
    for (double q : qs) curves.push_back(parametric_curve(QParam(q), a, b, o.steps + 1, cfg));

    if (format == "csv") {
        std::vector<std::string> header = {"x"};
        for (double q : qs) {
            const std::string tag = "_q" + format_number(q);
            if (parametric) {
                header.push_back("cos_q" + tag);
                header.push_back("sin_q" + tag);
            } else {
                header.push_back("sin_q" + tag);
                header.push_back("cos_q" + tag);
            }
        }
        std::vector<std::vector<double>> rows(o.steps + 1);
        for (std::size_t i = 0; i <= o.steps; ++i) {
            rows[i].push_back(curves[0][i].x);
            for (const auto& c : curves) {
                if (parametric) {
                    rows[i].push_back(c[i].cos_q);
                    rows[i].push_back(c[i].sin_q);
                } else {
                    rows[i].push_back(c[i].sin_q);
                    rows[i].push_back(c[i].cos_q);
                }
            }
        }
        emit(o, [&](std::ostream& os) { write_csv(os, header, rows); });
        return 0;
    }

    std::vector<SvgSeries> series;
    for (std::size_t k = 0; k < qs.size(); ++k) {
        const std::string tag = " q=" + format_number(qs[k]);
        if (parametric) {
            SvgSeries s{"(cos_q, sin_q)" + tag, {}};
            for (const auto& p : curves[k]) s.points.emplace_back(p.cos_q, p.sin_q);
            series.push_back(std::move(s));
        } else {
            SvgSeries s{"sin_q" + tag, {}}, c{"cos_q" + tag, {}};
            for (const auto& p : curves[k]) {
                s.points.emplace_back(p.x, p.sin_q);
                c.points.emplace_back(p.x, p.cos_q);
            }
            series.push_back(std::move(s));
            series.push_back(std::move(c));
        }
    }
    emit(o, [&](std::ostream& os) {
        write_svg(os, series, parametric ? "parametric cosine-q / sine-q" : "sine-q and cosine-q", parametric);
    });
    return 0;
}

int cmd_verify(const Options& o) {
    SuiteConfig cfg;
    const auto tol = tolerances(o);
    cfg.numerics.max_product_factors = cfg.quadrature.max_product_factors = tol.max_product_factors;
    if (o.abs_tol) cfg.numerics.abs_tol = *o.abs_tol;
    if (o.rel_tol) cfg.threshold = *o.rel_tol;
    const auto qs = parse_q_list(o.q);
    const std::string format = o.format.empty() ? "json" : o.format;
    if (format != "json" && format != "plain") throw ConfigError("verify supports --format json or plain");

    const auto reports = run_suite(qs, cfg);
    if (format == "json") {
        const auto doc = reports_to_json(qs, reports);
        emit(o, [&](std::ostream& os) { os << doc; });
    } else {
        emit(o, [&](std::ostream& os) {
            for (const auto& r : reports) {
                char line[256];
                std::snprintf(line, sizeof line, "%s  %-28s q=%-5s rel=%-10.3g tol=%-8.1g %6lld ms", r.passed ? "PASS" : "FAIL",
                              r.identity_id.c_str(), r.q == 0.0 ? "-" : format_number(r.q).c_str(), r.rel_residual,
                              r.tolerance, static_cast<long long>(r.runtime_ms));
                os << line << (r.passed || r.note.empty() ? "" : "  " + r.note) << '\n';
            }
        });
    }
    std::size_t failed = 0;
    for (const auto& r : reports) failed += !r.passed;
    std::cerr << reports.size() - failed << "/" << reports.size() << " identities passed\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"umbraq: umbral q-calculus numerics"};
    app.require_subcommand(1);
    Options o;

    auto common = [&o](CLI::App* c) {
        c->add_option("--q", o.q, "q value or comma-separated list")->capture_default_str();
        c->add_option("--rel-tol", o.rel_tol, "relative tolerance");
        c->add_option("--abs-tol", o.abs_tol, "absolute tolerance");
        c->add_option("--out", o.out, "output file (default stdout)");
        c->add_option("--format", o.format, "csv|svg (plot), json|plain (verify)");
    };

    auto* eval = app.add_subcommand("eval", "evaluate one function");
    eval->add_option("function", o.function, "function name")->required();
    eval->add_option("--x", o.x, "argument");
    eval->add_option("--n", o.n, "integer order");
    eval->add_option("--mu", o.mu, "Bessel order");
    common(eval);

    auto* plot = app.add_subcommand("plot", "sine-q / cosine-q samples");
    plot->add_option("kind", o.kind, "trig (x, sin_q, cos_q) or parametric (cos_q, sin_q)")->capture_default_str();
    plot->add_option("--range", o.range, "x range a:b");
    plot->add_option("--steps", o.steps, "number of intervals")->capture_default_str();
    common(plot);

    auto* verify = app.add_subcommand("verify", "run the identity suite");
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*eval) return cmd_eval(o);
        if (*plot) return cmd_plot(o);
        if (*verify) return cmd_verify(o);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

#include "umbraq/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace umbraq {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod 15-point abscissae; odd indices are the Gauss 7-point nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    double resabs = std::fabs(resk);
    std::array<double, 7> f1{}, f2{};
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        resk += kWgk[j] * (f1[j] + f2[j]);
        resabs += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1[j] + f2[j]);
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - mean);
    for (std::size_t j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));

    const double ah = std::fabs(half);
    resk *= half;
    resabs *= ah;
    resasc *= ah;
    double err = std::fabs((resk - resg * half));
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    err = std::max(err, 50.0 * kEps * resabs);
    return {a, b, resk, err};
}

struct Counted {
    const Integrand& f;
    std::size_t count = 0;
    double operator()(double x) {
        ++count;
        return f(x);
    }
};

double target_error(const ToleranceConfig& tol, double value) {
    return std::max(tol.abs_tol, tol.rel_tol * std::fabs(value));
}

// Adaptive bisection driven by the largest panel error.
QuadratureResult adaptive(const Integrand& f, double a, double b, const ToleranceConfig& tol,
                          double scale_hint = 0.0) {
    QuadratureResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<Panel> heap;
    Panel first = gk15(f, a, b);
    out.evaluations = 15;
    double total = first.value, err = first.error;
    heap.push(first);
    bool stalled = false;
    while (err > target_error(tol, std::max(std::fabs(total), scale_hint))) {
        if (heap.size() >= kMaxIntervals) {
            stalled = true;
            break;
        }
        const Panel p = heap.top();
        const double mid = 0.5 * (p.a + p.b);
        if (std::fabs(p.b - p.a) <= 100.0 * kEps * std::max(std::fabs(mid), std::numeric_limits<double>::min())) {
            stalled = true;
            break;
        }
        heap.pop();
        const Panel l = gk15(f, p.a, mid);
        const Panel r = gk15(f, mid, p.b);
        out.evaluations += 30;
        total += l.value + r.value - p.value;
        err += l.error + r.error - p.error;
        heap.push(l);
        heap.push(r);
    }
    // re-sum to shed the drift from incremental updates
    total = 0.0;
    err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    out.value = total;
    out.abs_error_estimate = err;
    out.converged = !stalled || err <= target_error(tol, std::max(std::fabs(total), scale_hint));
    return out;
}

[[noreturn]] void fail(const char* what, const QuadratureResult& r) {
    throw NonConvergence(std::string(what) + ": error estimate " + std::to_string(r.abs_error_estimate) +
                             " above tolerance",
                         r);
}

// Scaled envelope of |f| just inside x = L (both models bound |f| beyond L).
double envelope(const Integrand& f, double L, const TailPolicy& tail, double sign) {
    double e = 0.0;
    for (int i = 0; i < 5; ++i) {
        if (tail.model == TailPolicy::Model::algebraic) {
            const double x = L * (1.0 - 0.05 * i);
            e = std::max(e, std::fabs(f(sign * x)) * std::pow(x / L, tail.power));
        } else {
            const double x = L - 0.5 * i / tail.rate;
            if (x <= 0.0) break;
            e = std::max(e, std::fabs(f(sign * x)) * std::exp(-tail.rate * (L - x)));
        }
    }
    return e;
}

// Mass beyond L implied by the tail model, given the envelope at L.
double tail_mass(double env, double L, const TailPolicy& tail) {
    if (tail.model == TailPolicy::Model::algebraic) return env * L / (tail.power - 1.0);
    return env / tail.rate;
}

// Extends [start, L] outward in doubling segments until the tail model bound
// falls below tolerance.  `sign` = +1 integrates to +inf, -1 to -inf.
struct TailWalk {
    double value = 0.0;
    double error = 0.0;
    double tail_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
};

TailWalk walk_outward(const Integrand& f, double L, const TailPolicy& tail, const ToleranceConfig& tol,
                      double sign, double scale) {
    TailWalk w;
    // the model's prediction is anchored at the first envelope, so a slightly
    // too slow decay is caught after a few doublings
    double first_env = -1.0;
    const double L0 = L;
    while (true) {
        const double env = envelope(f, L, tail, sign);
        w.evaluations += 5;
        const double mass = tail_mass(env, L, tail);
        if (first_env < 0.0) {
            first_env = env;
        } else {
            const double predicted = tail.model == TailPolicy::Model::algebraic
                                         ? first_env * std::pow(L0 / L, tail.power)
                                         : first_env * std::exp(-tail.rate * (L - L0));
            if (env > 10.0 * predicted && mass > tol.abs_tol)
                throw TailModelViolation("integrand decays slower than the declared tail model at x = " +
                                         std::to_string(sign * L));
        }
        const double target = 0.5 * target_error(tol, std::max(std::fabs(w.value), scale));
        if (mass <= target) {
            // signed model estimate of the remaining mass
            if (tail.model == TailPolicy::Model::algebraic) w.tail_estimate = tail_mass(f(sign * L), L, tail);
            w.error += mass;
            return w;
        }
        if (2.0 * L > kMaxCutoff) {
            w.error += mass;
            w.converged = false;
            return w;
        }
        auto seg = sign > 0 ? adaptive(f, L, 2.0 * L, tol, std::max(std::fabs(w.value), scale))
                            : adaptive(f, -2.0 * L, -L, tol, std::max(std::fabs(w.value), scale));
        w.value += seg.value;
        w.error += seg.abs_error_estimate;
        w.evaluations += seg.evaluations;
        w.converged = w.converged && seg.converged;
        L *= 2.0;
    }
}

}  // namespace

void TailPolicy::validate() const {
    if (!(cutoff > 0.0)) throw DomainError("tail cutoff must be positive");
    if (model == Model::algebraic && !(power > 1.0))
        throw DomainError("algebraic tail power must exceed 1 for integrability");
    if (model == Model::exponential && !(rate > 0.0)) throw DomainError("exponential tail rate must be positive");
}

QuadratureResult integrate(const Integrand& f, double a, double b, const ToleranceConfig& tol) {
    auto r = adaptive(f, a, b, tol);
    if (!r.converged) fail("integrate", r);
    return r;
}

double gauss_laguerre(const Integrand& f) {
    struct Rule {
        std::array<double, 32> x{}, w{};
        Rule() {
            // Newton iteration on L_n with the standard asymptotic starting points.
            constexpr int n = 32;
            double z = 0.0;
            for (int i = 0; i < n; ++i) {
                if (i == 0)
                    z = 3.0 / (1.0 + 2.4 * n);
                else if (i == 1)
                    z += 15.0 / (1.0 + 2.5 * n);
                else
                    z += (1.0 + 2.55 * (i - 1)) / (1.9 * (i - 1)) * (z - x[i - 2]);
                double pp = 0.0, p2 = 0.0;
                for (int it = 0; it < 100; ++it) {
                    double p1 = 1.0;
                    p2 = 0.0;
                    for (int j = 0; j < n; ++j) {
                        const double p3 = p2;
                        p2 = p1;
                        p1 = ((2 * j + 1 - z) * p2 - j * p3) / (j + 1);
                    }
                    pp = (n * p1 - n * p2) / z;
                    const double z1 = z;
                    z = z1 - p1 / pp;
                    if (std::fabs(z - z1) <= 1e-15 * z) break;
                }
                x[i] = z;
                w[i] = -1.0 / (pp * n * p2);
            }
        }
    };
    static const Rule rule;
    double s = 0.0;
    for (std::size_t i = 0; i < 32; ++i) s += rule.w[i] * f(rule.x[i]);
    return s;
}

QuadratureResult laplace_integral(const Integrand& f, const ToleranceConfig& tol) {
    Counted cf{f};
    const Integrand g = [&cf](double s) {
        const double v = cf(s);
        return v == 0.0 ? 0.0 : std::exp(-s) * v;
    };
    // Relative accuracy is measured against the Laguerre estimate of
    // int e^{-s} |f|: when f cancels, that mass, not the tiny result, sets
    // the attainable error.
    const double mass = gauss_laguerre([&cf](double s) { return std::fabs(cf(s)); });
    const auto tail = TailPolicy::exponential(50.0, 1.0);
    auto head = adaptive(g, 0.0, tail.cutoff, tol, mass);
    auto walk = walk_outward(g, tail.cutoff, tail, tol, 1.0, std::max(std::fabs(head.value), mass));
    QuadratureResult out;
    out.value = head.value + walk.value + walk.tail_estimate;
    out.abs_error_estimate = head.abs_error_estimate + walk.error;
    out.evaluations = cf.count;
    out.converged = head.converged && walk.converged;
    if (!out.converged) fail("laplace_integral", out);
    return out;
}

QuadratureResult halfline_integral(const Integrand& f, const TailPolicy& tail, const ToleranceConfig& tol) {
    tail.validate();
    Counted cf{f};
    const Integrand g = [&cf](double x) { return cf(x); };
    auto head = adaptive(g, 0.0, tail.cutoff, tol);
    auto walk = walk_outward(g, tail.cutoff, tail, tol, 1.0, std::fabs(head.value));
    QuadratureResult out;
    out.value = head.value + walk.value + walk.tail_estimate;
    out.abs_error_estimate = head.abs_error_estimate + walk.error;
    out.evaluations = cf.count;
    out.converged = head.converged && walk.converged;
    if (!out.converged) fail("halfline_integral", out);
    return out;
}

QuadratureResult real_line_integral(const Integrand& f, const TailPolicy& tail, const ToleranceConfig& tol) {
    tail.validate();
    Counted cf{f};
    const Integrand g = [&cf](double x) { return cf(x); };
    const double c = tail.cutoff;
    auto head = adaptive(g, -c, c, tol);
    auto right = walk_outward(g, c, tail, tol, 1.0, std::fabs(head.value));
    auto left = walk_outward(g, c, tail, tol, -1.0, std::fabs(head.value));
    QuadratureResult out;
    out.value = head.value + right.value + right.tail_estimate + left.value + left.tail_estimate;
    out.abs_error_estimate = head.abs_error_estimate + right.error + left.error;
    out.evaluations = cf.count;
    out.converged = head.converged && right.converged && left.converged;
    if (!out.converged) fail("real_line_integral", out);
    return out;
}

Extrapolation wynn_epsilon(const std::vector<double>& s) {
    const std::size_t n = s.size();
    if (n == 0) return {0.0, 0.0};
    if (n < 3) return {s.back(), n > 1 ? std::fabs(s[n - 1] - s[n - 2]) : 0.0};
    // eps[k][j]: column k, row j
    std::vector<std::vector<double>> eps(n + 1);
    eps[0].assign(n + 1, 0.0);  // column -1
    eps[1] = s;                 // column 0
    double best = s.back(), prev_best = s[n - 2];
    for (std::size_t k = 2; k <= n; ++k) {
        const std::size_t rows = n - (k - 1);
        eps[k].resize(rows);
        for (std::size_t j = 0; j < rows; ++j) {
            const double diff = eps[k - 1][j + 1] - eps[k - 1][j];
            if (diff == 0.0) return {best, std::fabs(best - prev_best)};
            eps[k][j] = eps[k - 2][j + 1] + 1.0 / diff;
        }
        if (k % 2 == 1) {  // even epsilon column
            prev_best = rows >= 2 ? eps[k][rows - 2] : best;
            best = eps[k][rows - 1];
        }
    }
    return {best, std::fabs(best - prev_best)};
}

QuadratureResult oscillatory_halfline_integral(const Integrand& f, const TailPolicy& tail,
                                               const ToleranceConfig& tol, double scan_step) {
    tail.validate();
    if (!(scan_step > 0.0)) throw DomainError("scan_step must be positive");
    Counted cf{f};
    const Integrand g = [&cf](double x) { return cf(x); };

    QuadratureResult out;
    double err = 0.0;
    double prev = 0.0;
    double h = scan_step;
    double x = 0.0;
    double fx = g(0.0);
    std::vector<double> partial;      // partial sums at consecutive zeros
    std::vector<double> zero_gaps;
    double sum = 0.0;
    constexpr std::size_t kMaxTerms = 20000;
    const double chunk = 64.0 * scan_step;

    auto emit = [&](double to) {
        auto seg = adaptive(g, prev, to, tol, std::fabs(sum));
        sum += seg.value;
        err += seg.abs_error_estimate;
        if (!seg.converged) fail("oscillatory_halfline_integral", {sum, err, cf.count, false});
        prev = to;
    };

    for (std::size_t term = 0; term < kMaxTerms; ++term) {
        // advance to the next sign change or the end of a non-oscillating chunk
        bool found = false;
        while (x - prev < std::max(chunk, 8.0 * h)) {
            const double xn = x + h;
            const double fn = g(xn);
            if ((fx < 0.0 && fn > 0.0) || (fx > 0.0 && fn < 0.0)) {
                double lo = x, hi = xn, flo = fx;
                for (int it = 0; it < 100 && hi - lo > 4.0 * kEps * std::max(1.0, std::fabs(hi)); ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = g(mid);
                    if ((fm < 0.0) == (flo < 0.0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                const double z = 0.5 * (lo + hi);
                if (!partial.empty()) zero_gaps.push_back(z - prev);
                emit(z);
                x = xn;
                fx = fn;
                partial.push_back(sum);
                found = true;
                if (!zero_gaps.empty()) h = std::min(h, 0.25 * zero_gaps.back());
                break;
            }
            x = xn;
            fx = fn;
        }
        if (!found) {
            emit(x);
            partial.clear();
        }

        // the tail model bounds whatever lies beyond the current point
        const double env = envelope(g, prev, tail, 1.0);
        const double mass = tail_mass(env, prev, tail);
        if (prev >= tail.cutoff && mass <= 0.5 * target_error(tol, sum)) {
            out.value = sum;
            out.abs_error_estimate = err + mass;
            out.converged = true;
            out.evaluations = cf.count;
            return out;
        }
        // alternating regime: extrapolate the partial sums
        if (partial.size() >= 12) {
            std::vector<double> recent(partial.end() - 12, partial.end());
            const auto ex = wynn_epsilon(recent);
            std::vector<double> shorter(partial.end() - 11, partial.end());
            const auto ex2 = wynn_epsilon(shorter);
            const double change = std::fabs(ex.value - ex2.value) + ex.change;
            if (change <= 0.5 * target_error(tol, ex.value)) {
                out.value = ex.value;
                out.abs_error_estimate = err + change;
                out.converged = true;
                out.evaluations = cf.count;
                return out;
            }
        }
    }
    fail("oscillatory_halfline_integral", {sum, err, cf.count, false});
}

}  // namespace umbraq

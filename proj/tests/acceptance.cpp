// Acceptance table: one PASS/FAIL line per criterion.
//   acceptance [--criterion N] [--cli path/to/umbraq]
// The CLI path may also come from UMBRAQ_CLI; criteria 11 and 12 drive it.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "umbraq/qcore.hpp"
#include "umbraq/qtrig.hpp"
#include "umbraq/tsallis.hpp"
#include "umbraq/verify.hpp"

using namespace umbraq;

namespace {

std::string g_cli;

struct Outcome {
    bool pass = true;
    std::vector<std::string> detail;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        detail.push_back(std::string(ok ? "ok   " : "MISS ") + what);
    }
    void info(const std::string& what) { detail.push_back("info " + what); }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

void require_report(Outcome& o, const IdentityReport& r) {
    o.require(r.passed, r.identity_id + " q=" + num(r.q) + " rel=" + num(r.rel_residual) + " abs=" +
                            num(r.abs_residual) + " tol=" + num(r.tolerance) +
                            (r.note.empty() ? "" : " (" + r.note + ")"));
}

struct Run {
    int exit_code = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    Run r;
    if (g_cli.empty()) return r;
    const std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

// ---------------------------------------------------------------------------

Outcome c1() {
    Outcome o;
    double worst = 0.0;
    for (double q : {0.3, 0.5, 0.7, 0.9}) {
        const QParam Q(q);
        for (int n = 0; n <= 20; ++n) worst = std::max(worst, rel(q_gamma(n + 1.0, Q).value, q_factorial(n, Q)));
    }
    o.require(worst <= 1e-10, "qGamma(n+1) = [n]! for n <= 20, max rel " + num(worst));
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> ux(0.0, 5.0), uq(0.3, 0.9);
    worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        double x = ux(rng);
        if (x == 0.0) x = 0.5;
        const QParam Q(uq(rng));
        worst = std::max(worst, rel(q_gamma(x + 1.0, Q).value, q_number(x, Q) * q_gamma(x, Q).value));
    }
    o.require(worst <= 1e-10, "functional equation on 100 random x in (0, 5), max rel " + num(worst));
    return o;
}

Outcome c2() {
    Outcome o;
    double worst = 0.0;
    for (int i = 0; i <= 15; ++i) {
        const QParam Q(0.2 + 0.05 * i);
        worst = std::max(worst, rel(pi_q(Q), pi_q_wallis(Q)));
    }
    o.require(worst <= 1e-10, "(qGamma(1/2))^2 vs q-Wallis product, q = 0.2..0.95, max rel " + num(worst));
    const double p = pi_q(QParam(0.9999));
    o.require(std::fabs(p - std::numbers::pi) <= 1e-2, "pi_q(0.9999) = " + num(p));
    return o;
}

Outcome c3() {
    Outcome o;
    for (double q : {0.4, 0.6, 0.9}) require_report(o, check_q_gaussian_integral(q));
    return o;
}

Outcome c4() {
    Outcome o;
    for (double q : {0.4, 0.6}) {
        const auto [c, s] = check_q_fresnel(q);
        require_report(o, c);
        require_report(o, s);
    }
    const double closed = std::numbers::pi / std::sqrt(8.0 * pi_q(QParam(0.9999)));
    o.require(std::fabs(closed - std::sqrt(std::numbers::pi / 8.0)) <= 1e-2,
              "closed form at q = 0.9999: " + num(closed));
    return o;
}

Outcome c5() {
    Outcome o;
    for (double q : {0.5, 0.7})
        for (int m : {2, 3, 4}) {
            require_report(o, check_power_integral(m, q, {}, PowerForm::naive));
            const auto c = check_power_integral(m, q, {}, PowerForm::corrected);
            o.info("corrected form m=" + std::to_string(m) + " q=" + num(q) + " rel=" + num(c.rel_residual) +
                   (c.passed ? " holds" : " fails"));
        }
    return o;
}

Outcome c6() {
    Outcome o;
    for (double q : {0.3, 0.5, 0.7}) {
        require_report(o, check_tricomi_gaussian(q));
        require_report(o, check_borel_chain(q));
    }
    return o;
}

Outcome c7() {
    Outcome o;
    for (double q : {0.4, 0.6, 0.9}) {
        for (const auto& r : check_qtrig(q)) require_report(o, r);
        const auto scan = extremum_scan(QParam(q), 1);
        const auto& e = scan.extrema.at(1);
        const double target = std::pow(q, -0.5);
        o.require(std::fabs(std::fabs(e.value) - target) <= 1e-6,
                  "extremum on (1, 2) at x = " + num(e.location) + ": |sin_q| = " + num(std::fabs(e.value)) +
                      " vs q^-1/2 = " + num(target));
        o.info("sin_q(3/2) = " + num(e.half_integer_value) + ", -q^-1/2 = " + num(-target));
    }
    return o;
}

Outcome c8() {
    Outcome o;
    for (double q : {0.4, 0.6, 0.9})
        for (const auto& r : check_jackson(q)) require_report(o, r);
    return o;
}

Outcome c9() {
    Outcome o;
    for (double q : {0.4, 0.7}) require_report(o, check_q_gaussian_derivatives(q));
    return o;
}

Outcome c10() {
    Outcome o;
    for (const auto& r : check_tsallis()) require_report(o, r);
    const double one = tsallis_gaussian_integral(TsallisParam(1.0)).closed;
    o.require(std::fabs(one - 4.0 / 3.0) <= 1e-10, "Q = 1: " + num(one));
    const double small = tsallis_gaussian_integral(TsallisParam(0.01)).closed;
    o.require(std::fabs(small - std::sqrt(std::numbers::pi)) <= 1e-2, "Q = 0.01: " + num(small));
    return o;
}

Outcome c11() {
    Outcome o;
    if (g_cli.empty()) {
        o.require(false, "no CLI path (--cli or UMBRAQ_CLI)");
        return o;
    }
    const auto trig = run_cli("plot trig --q 0.4,0.6,0.9 --range 0:6 --steps 600");
    auto lines = split(trig.out, '\n');
    o.require(trig.exit_code == 0 && lines.size() == 602, "plot trig: exit " + std::to_string(trig.exit_code) +
                                                              ", " + std::to_string(lines.size()) + " lines");
    if (!lines.empty()) {
        const auto head = split(lines[0], ',');
        o.require(head.size() == 7 && head[0] == "x", "trig header: " + lines[0]);
    }

    const auto para = run_cli("plot parametric --q 0.9999 --range 0:1 --steps 200");
    lines = split(para.out, '\n');
    o.require(para.exit_code == 0 && lines.size() == 202, "plot parametric: exit " +
                                                              std::to_string(para.exit_code) + ", " +
                                                              std::to_string(lines.size()) + " lines");
    if (lines.size() > 1) {
        const auto head = split(lines[0], ',');
        int ic = -1, is = -1;
        for (int i = 0; i < static_cast<int>(head.size()); ++i) {
            if (head[i].rfind("cos_q", 0) == 0) ic = i;
            if (head[i].rfind("sin_q", 0) == 0) is = i;
        }
        o.require(ic >= 0 && is >= 0, "parametric header: " + lines[0]);
        if (ic >= 0 && is >= 0) {
            double dev = 0.0;
            for (std::size_t i = 1; i < lines.size(); ++i) {
                const auto f = split(lines[i], ',');
                dev = std::max(dev, std::fabs(std::hypot(std::stod(f.at(ic)), std::stod(f.at(is))) - 1.0));
            }
            o.require(dev < 0.05, "q = 0.9999 radial deviation on [0, 1]: " + num(dev));
        }
    }
    return o;
}

Outcome c12() {
    Outcome o;
    if (g_cli.empty()) {
        o.require(false, "no CLI path (--cli or UMBRAQ_CLI)");
        return o;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = run_cli("verify --q 0.4,0.6,0.9");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(r.exit_code == 0, "verify exit code " + std::to_string(r.exit_code));
    o.require(secs < 300.0, "verify wall time " + num(secs) + " s");
    if (r.exit_code != 0) o.info(r.out.substr(0, 4000));
    return o;
}

struct Criterion {
    std::function<Outcome()> run;
    double budget_s;  // <= 0: no runtime bound
    const char* title;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (const char* env = std::getenv("UMBRAQ_CLI")) g_cli = env;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else if (a == "--cli" && i + 1 < argc)
            g_cli = argv[++i];
        else {
            std::cerr << "usage: acceptance [--criterion N] [--cli path]\n";
            return 2;
        }
    }

    const std::map<int, Criterion> table = {
        {1, {c1, 1.0, "q-Gamma correctness"}},
        {2, {c2, 5.0, "pi_q dual formula"}},
        {3, {c3, 30.0, "q-Gaussian integral"}},
        {4, {c4, 60.0, "q-Fresnel integrals"}},
        {5, {c5, 0.0, "power integral"}},
        {6, {c6, 0.0, "Tricomi-Gaussian and Borel chain"}},
        {7, {c7, 0.0, "q-trig structure"}},
        {8, {c8, 0.0, "Jackson / q-Hermite battery"}},
        {9, {c9, 0.0, "q-Gaussian derivatives"}},
        {10, {c10, 0.0, "Tsallis"}},
        {11, {c11, 0.0, "plot output"}},
        {12, {c12, 0.0, "verify suite"}},
    };
    if (only != 0 && !table.count(only)) {
        std::cerr << "no criterion " << only << "\n";
        return 2;
    }

    bool all = true;
    for (const auto& [id, c] : table) {
        if (only != 0 && id != only) continue;
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0.0) o.require(secs < c.budget_s, "runtime " + num(secs) + " s < " + num(c.budget_s) + " s");
        all = all && o.pass;
        std::printf("%s criterion %2d  %-34s %8.2f s\n", o.pass ? "PASS" : "FAIL", id, c.title, secs);
        for (const auto& d : o.detail) std::printf("      %s\n", d.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}

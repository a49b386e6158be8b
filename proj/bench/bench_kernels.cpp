// Serial vs OpenMP timings for the two parallel kernels: the log-product
// behind qGamma / q-trig at q close to 1, and curve sampling.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "umbraq/kernels.hpp"
#include "umbraq/qtrig.hpp"

using namespace umbraq;
using Clock = std::chrono::steady_clock;

template <class F>
double best_ms(F&& f, int reps = 5) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
    }
    return best;
}

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    const double lq = std::log(0.9999);
    auto factor = [lq](std::size_t n) {
        const double dn = static_cast<double>(n);
        return std::expm1((dn + 1.0) * lq) / std::expm1((dn + 0.5) * lq);
    };
    for (std::size_t N : {10000u, 100000u, 1000000u}) {
        kernels::LogSum s, p;
        const double ts = best_ms([&] { s = kernels::log_product_serial(0, N, factor); });
        const double tp = best_ms([&] { p = kernels::log_product_parallel(0, N, factor); });
        std::printf("log_product N=%-8zu serial %8.3f ms  parallel %8.3f ms  |diff| %.2e\n", N, ts, tp,
                    std::fabs(s.log_abs - p.log_abs));
    }

    const QParam q(0.99);
    for (std::size_t steps : {64u, 512u}) {
        std::vector<CurvePoint> a, b;
        const double ts = best_ms([&] { a = parametric_curve(q, 0.0, 4.0, steps, {}, kernels::Exec::serial); }, 3);
        const double tp = best_ms([&] { b = parametric_curve(q, 0.0, 4.0, steps, {}, kernels::Exec::parallel); }, 3);
        double diff = 0.0;
        for (std::size_t i = 0; i < steps; ++i) diff = std::max(diff, std::fabs(a[i].sin_q - b[i].sin_q));
        std::printf("parametric_curve steps=%-5zu serial %8.3f ms  parallel %8.3f ms  |diff| %.2e\n", steps, ts, tp,
                    diff);
    }
}

#pragma once

// Data-parallel kernels shared by the infinite-product and sampling code.
// Every kernel has a serial reference and an OpenMP variant; the OpenMP
// variant splits the index range into a fixed number of chunks and combines
// the partial results in chunk order, so its output does not depend on the
// thread count.

#include <cmath>
#include <cstddef>
#include <vector>

#include <omp.h>

namespace umbraq::kernels {

enum class Exec { serial, parallel, automatic };

/// Sum of log|factor| with the product's sign carried separately.
struct LogSum {
    double log_abs = 0.0;
    int sign = 1;  // 0 when some factor vanished exactly

    LogSum& operator+=(const LogSum& o) {
        log_abs += o.log_abs;
        sign *= o.sign;
        return *this;
    }
};

inline constexpr std::size_t kParallelThreshold = 4096;
inline constexpr std::size_t kChunks = 64;

/// Neumaier-compensated sum of log|factor(n)| for n in [begin, end).
template <class Factor>
LogSum log_product_serial(std::size_t begin, std::size_t end, Factor&& factor) {
    LogSum out;
    double sum = 0.0, comp = 0.0;
    for (std::size_t n = begin; n < end; ++n) {
        const double f = factor(n);
        if (f == 0.0) return {0.0, 0};
        if (f < 0.0) out.sign = -out.sign;
        const double term = std::log(std::fabs(f));
        const double t = sum + term;
        comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    out.log_abs = sum + comp;
    return out;
}

template <class Factor>
LogSum log_product_parallel(std::size_t begin, std::size_t end, Factor&& factor) {
    if (end <= begin) return {};
    const std::size_t count = end - begin;
    const std::size_t chunk = (count + kChunks - 1) / kChunks;
    std::vector<LogSum> partial(kChunks);
#pragma omp parallel for schedule(static)
    for (std::size_t c = 0; c < kChunks; ++c) {
        const std::size_t lo = begin + c * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo < hi) partial[c] = log_product_serial(lo, hi, factor);
    }
    LogSum out;
    for (const auto& p : partial) {
        if (p.sign == 0) return {0.0, 0};
        out += p;
    }
    return out;
}

template <class Factor>
LogSum log_product(std::size_t begin, std::size_t end, Factor&& factor, Exec exec = Exec::automatic) {
    const bool par = exec == Exec::parallel ||
                     (exec == Exec::automatic && end > begin && end - begin >= kParallelThreshold);
    return par ? log_product_parallel(begin, end, factor) : log_product_serial(begin, end, factor);
}

/// out[i] = fn(i) for i in [0, out.size()).
template <class Fn, class T>
void sample_serial(std::vector<T>& out, Fn&& fn) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fn(i);
}

template <class Fn, class T>
void sample_parallel(std::vector<T>& out, Fn&& fn) {
    const long n = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
}

template <class Fn, class T>
void sample(std::vector<T>& out, Fn&& fn, Exec exec = Exec::automatic) {
    if (exec == Exec::serial)
        sample_serial(out, fn);
    else
        sample_parallel(out, fn);
}

}  // namespace umbraq::kernels

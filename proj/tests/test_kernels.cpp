#include <cmath>
#include <vector>

#include "doctest.h"
#include "umbraq/kernels.hpp"

using namespace umbraq::kernels;

TEST_CASE("log_product: serial and parallel agree, sign and zero handling") {
    auto f = [](std::size_t n) { return (n % 3 == 0 ? -1.0 : 1.0) * (1.0 + 1.0 / (n + 1.0)); };
    const std::size_t N = 20000;
    const auto s = log_product_serial(0, N, f);
    const auto p = log_product_parallel(0, N, f);
    CHECK(s.sign == p.sign);
    CHECK(std::fabs(s.log_abs - p.log_abs) < 1e-11);
    // prod (1 + 1/(n+1)) telescopes to N + 1
    CHECK(s.log_abs == doctest::Approx(std::log(N + 1.0)).epsilon(1e-13));
    // 6667 negative factors (n = 0, 3, ..., 19998)
    CHECK(s.sign == -1);

    auto with_zero = [](std::size_t n) { return n == 777 ? 0.0 : 2.0; };
    CHECK(log_product_serial(0, 1000, with_zero).sign == 0);
    CHECK(log_product_parallel(0, 1000, with_zero).sign == 0);
    CHECK(log_product(0, 0, f).log_abs == 0.0);
}

TEST_CASE("sample: serial and parallel fill identically") {
    std::vector<double> a(1000), b(1000);
    auto fn = [](std::size_t i) { return std::sin(0.01 * i); };
    sample(a, fn, Exec::serial);
    sample(b, fn, Exec::parallel);
    CHECK(a == b);
}

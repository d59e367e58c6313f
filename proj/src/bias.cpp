#include "cube/bias.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cube {

namespace {

int ceil_log2(std::int64_t t) {
    int k = 0;
    std::int64_t v = 1;
    while (v < t) {
        v <<= 1;
        ++k;
    }
    return k;
}

}  // namespace

DyadicBias make_bias(std::int64_t t, std::int64_t m) {
    if (m < 1 || m > 62)
        throw std::invalid_argument("make_bias: m must be in [1, 62], got " + std::to_string(m));
    if (t < 1)
        throw std::invalid_argument("make_bias: t must be positive, got " + std::to_string(t));
    const std::int64_t half = std::int64_t{1} << (m - 1);
    if (t > half)
        throw std::invalid_argument("make_bias: t=" + std::to_string(t) + ", m=" + std::to_string(m) +
                                    " gives p > 1/2; route p > 1/2 through dual_function");
    DyadicBias b;
    b.t = t;
    b.m = m;
    b.p = static_cast<double>(t) / std::ldexp(1.0, static_cast<int>(m));
    b.L = static_cast<int>(m) - ceil_log2(t);
    return b;
}

DyadicApprox dyadic_approx(double p_target, int m_max) {
    if (!(p_target > 0.0 && p_target <= 0.5))
        throw std::invalid_argument("dyadic_approx: p_target must be in (0, 1/2]");
    if (m_max < 1)
        throw std::invalid_argument("dyadic_approx: m_max must be >= 1");

    // t/2^m and p_target are both exact doubles, so errors compare exactly
    // at these scales; ties resolve to smaller m, then smaller t.
    double best_err = std::numeric_limits<double>::infinity();
    std::int64_t best_t = 1, best_m = 1;
    for (int m = 1; m <= m_max; ++m) {
        const double scale = std::ldexp(1.0, m);
        // closest t to p_target * 2^m, clamped to [1, 2^(m-1)]
        const std::int64_t half = std::int64_t{1} << (m - 1);
        std::int64_t t0 = static_cast<std::int64_t>(std::llround(p_target * scale));
        for (std::int64_t t = t0 - 1; t <= t0 + 1; ++t) {
            if (t < 1 || t > half) continue;
            const double err = std::fabs(static_cast<double>(t) / scale - p_target);
            if (err < best_err) {
                best_err = err;
                best_t = t;
                best_m = m;
            }
        }
        if (best_err == 0.0) break;  // smaller m wins ties; nothing can beat 0
    }
    return DyadicApprox{make_bias(best_t, best_m), best_err};
}

}  // namespace cube

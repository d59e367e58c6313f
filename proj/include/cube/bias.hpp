#pragma once

#include <cstdint>

namespace cube {

/// Measure parameter p = t / 2^m with p <= 1/2. The pair (t, m) is the
/// source of truth and is deliberately not reduced to lowest terms:
/// (t=2, m=2) and (t=1, m=1) describe the same p but different reductions.
struct DyadicBias {
    std::int64_t t = 1;
    std::int64_t m = 1;
    double p = 0.5;
    int L = 1;  // floor(log2(1/p)) = m - ceil(log2 t)

    bool is_uniform() const { return t * 2 == (std::int64_t{1} << m); }
};

/// Throws std::invalid_argument unless m >= 1 and 1 <= t <= 2^(m-1).
DyadicBias make_bias(std::int64_t t, std::int64_t m);

/// Uniform measure as a bias value (t=1, m=1).
inline DyadicBias uniform_bias() { return make_bias(1, 1); }

struct DyadicApprox {
    DyadicBias bias;
    double achieved_error = 0.0;
};

/// Best dyadic t/2^m with m <= m_max for a target p in (0, 1/2].
/// Ties broken by smaller m, then smaller t.
DyadicApprox dyadic_approx(double p_target, int m_max);

}  // namespace cube

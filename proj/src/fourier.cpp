#include "cube/fourier.hpp"

#include <cmath>
#include <stdexcept>

namespace cube {

double character(Mask subset, Mask point, double p) {
    const int in = popcount(subset & point);
    const int out = popcount(subset & ~point);
    const double neg = -std::sqrt((1.0 - p) / p);
    const double pos = std::sqrt(p / (1.0 - p));
    return std::pow(neg, in) * std::pow(pos, out);
}

Spectrum transform(const CubeFunction& f, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("transform: p must be in (0, 1)");
    const int n = f.n();
    std::vector<double> a = f.values();
    const double r = std::sqrt(p * (1.0 - p));
    // Per-coordinate butterfly: the pair (f0, f1) at x_i = 0/1 maps to
    // ((1-p) f0 + p f1, sqrt(p(1-p)) (f0 - f1)); the second slot picks up
    // the character factor for i in S.
    for (int b = 0; b < n; ++b) {
        const std::size_t bit = std::size_t{1} << b;
        for (std::size_t lo = 0; lo < a.size(); lo += 2 * bit) {
            for (std::size_t i = lo; i < lo + bit; ++i) {
                const double f0 = a[i];
                const double f1 = a[i + bit];
                a[i] = (1.0 - p) * f0 + p * f1;
                a[i + bit] = r * (f0 - f1);
            }
        }
    }
    return Spectrum{n, p, std::move(a)};
}

Spectrum transform(const CubeFunction& f, const DyadicBias& bias) {
    return transform(f, bias.p);
}

CubeFunction inverse_transform(const Spectrum& s) {
    const double p = s.p;
    std::vector<double> a = s.coeffs;
    const double pos = std::sqrt(p / (1.0 - p));
    const double neg = std::sqrt((1.0 - p) / p);
    for (int b = 0; b < s.n; ++b) {
        const std::size_t bit = std::size_t{1} << b;
        for (std::size_t lo = 0; lo < a.size(); lo += 2 * bit) {
            for (std::size_t i = lo; i < lo + bit; ++i) {
                const double c0 = a[i];
                const double c1 = a[i + bit];
                a[i] = c0 + c1 * pos;
                a[i + bit] = c0 - c1 * neg;
            }
        }
    }
    return CubeFunction(s.n, std::move(a));
}

double level_weight(const Spectrum& s, int d) {
    double w = 0.0;
    for (Mask S = 0; S < s.coeffs.size(); ++S)
        if (popcount(S) == d) w += s.coeffs[S] * s.coeffs[S];
    return w;
}

Spectrum noise(const Spectrum& s, double delta) {
    Spectrum out = s;
    std::vector<double> scale(static_cast<std::size_t>(s.n) + 1, 1.0);
    for (int k = 1; k <= s.n; ++k) scale[k] = scale[k - 1] * delta;
    for (Mask S = 0; S < out.coeffs.size(); ++S) out.coeffs[S] *= scale[popcount(S)];
    return out;
}

double q_norm(const CubeFunction& f, double q, double p) {
    if (q < 1.0) throw std::invalid_argument("q_norm: q must be >= 1");
    const auto w = weights_by_popcount(p, f.n());
    double e = 0.0;
    for (Mask x = 0; x < f.size(); ++x) e += w[popcount(x)] * std::pow(std::fabs(f(x)), q);
    return std::pow(e, 1.0 / q);
}

}  // namespace cube

#include "cube/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cube {

std::int64_t bin_value(Mask block, int m) {
    // In-block coordinate j carries binary weight 2^(m-j); with the LSB
    // convention this is a bit reversal of the local mask.
    std::int64_t v = 0;
    for (int j = 1; j <= m; ++j)
        if ((block >> (j - 1)) & 1u) v += std::int64_t{1} << (m - j);
    return v;
}

int h_threshold(Mask block, const DyadicBias& bias) {
    return bin_value(block, static_cast<int>(bias.m)) >= (std::int64_t{1} << bias.m) - bias.t ? 1 : 0;
}

ReducedFunction::ReducedFunction(CubeFunction base, DyadicBias bias, int dense_cap)
    : base_(std::move(base)), bias_(bias) {
    const int m = width();
    h_table_.resize(std::size_t{1} << m);
    for (Mask b = 0; b < h_table_.size(); ++b)
        h_table_[b] = static_cast<std::uint8_t>(h_threshold(b, bias_));

    const int mn = total_dim();
    if (mn <= dense_cap) {
        std::vector<double> v(std::size_t{1} << mn);
        for (Mask y = 0; y < v.size(); ++y) v[y] = base_(project(y));
        dense_.emplace(mn, std::move(v));
    }
}

Mask ReducedFunction::project(Mask y) const {
    const int m = width();
    const Mask block_mask = (Mask{1} << m) - 1;
    Mask x = 0;
    for (int i = 0; i < blocks(); ++i)
        x |= Mask{h_table_[(y >> (i * m)) & block_mask]} << i;
    return x;
}

double ReducedFunction::operator()(Mask y) const {
    return base_(project(y));
}

const CubeFunction& ReducedFunction::dense() const {
    if (!dense_)
        throw std::runtime_error("ReducedFunction: dense form unavailable, total dimension " +
                                 std::to_string(total_dim()) + " exceeds the dense cap");
    return *dense_;
}

ReducedFunction reduce(const CubeFunction& f, const DyadicBias& bias, int dense_cap) {
    return ReducedFunction(f, bias, dense_cap);
}

BlockDecomposition decompose_subset(Mask S, int n, int m) {
    BlockDecomposition d;
    d.S = S;
    d.block_masks.resize(n);
    d.s.resize(n, 0);
    const Mask block_mask = (Mask{1} << m) - 1;
    for (int i = 0; i < n; ++i) {
        const Mask local = (S >> (i * m)) & block_mask;
        d.block_masks[i] = local;
        if (local) {
            d.s[i] = 64 - std::countl_zero(local);  // highest in-block coordinate
            d.S_prime |= Mask{1} << i;
        }
    }
    d.k = popcount(d.S_prime);
    return d;
}

std::int64_t a_factor(int j, const DyadicBias& bias) {
    if (j < 1 || j > bias.m) throw std::invalid_argument("a_factor: j must be in [1, m]");
    const std::int64_t mod = std::int64_t{1} << (bias.m - j + 1);
    const std::int64_t r = bias.t % mod;
    return std::min(r, mod - r);
}

PredictedCoefficient predicted_coefficient(const Spectrum& spec_f, Mask S, const DyadicBias& bias) {
    const int n = spec_f.n;
    const int m = static_cast<int>(bias.m);
    if (S >> (n * m))
        throw std::invalid_argument("predicted_coefficient: S exceeds dimension mn");

    PredictedCoefficient out;
    if (S == 0) {
        out.magnitude = std::fabs(spec_f.coeffs[0]);
        out.sign_known = true;
        out.signed_value = spec_f.coeffs[0];
        return out;
    }

    const auto d = decompose_subset(S, n, m);
    const double ratio = std::sqrt(bias.p / (1.0 - bias.p));
    double factor = 1.0;
    bool all_low = true;
    for (int i = 0; i < n; ++i) {
        if (!d.block_masks[i]) continue;
        factor *= static_cast<double>(a_factor(d.s[i], bias)) / static_cast<double>(bias.t);
        if (d.s[i] > bias.L) all_low = false;
    }
    const double base_coeff = spec_f.coeffs[d.S_prime];
    out.magnitude = factor * std::pow(ratio, d.k) * std::fabs(base_coeff);
    if (all_low) {
        out.sign_known = true;
        const int sign = ((d.k + popcount(S)) % 2 == 0) ? 1 : -1;
        out.signed_value = sign * std::pow(ratio, d.k) * base_coeff;
    }
    return out;
}

double level_weight_lower_bound(const Spectrum& spec_f, int d, const DyadicBias& bias) {
    const double factor = bias.p * bias.L / (1.0 - bias.p);
    return std::pow(factor, d) * level_weight(spec_f, d);
}

}  // namespace cube

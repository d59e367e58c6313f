#include "cube/function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cube {

double point_weight(double p, Mask point, int n) {
    const int k = popcount(point);
    return std::pow(p, k) * std::pow(1.0 - p, n - k);
}

std::vector<double> weights_by_popcount(double p, int n) {
    std::vector<double> w(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        w[k] = std::pow(p, k) * std::pow(1.0 - p, n - k);
    return w;
}

CubeFunction::CubeFunction(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    if (n < 0 || n > 30)
        throw std::invalid_argument("CubeFunction: dimension out of range");
    if (values_.size() != (std::size_t{1} << n))
        throw std::invalid_argument("CubeFunction: expected 2^n values");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("CubeFunction: non-finite value");
    recheck_boolean();
}

void CubeFunction::recheck_boolean() {
    boolean_ = true;
    for (double v : values_) {
        if (v != 0.0 && v != 1.0) {
            boolean_ = false;
            break;
        }
    }
}

CubeFunction CubeFunction::constant(int n, double c) {
    return CubeFunction(n, std::vector<double>(std::size_t{1} << n, c));
}

CubeFunction CubeFunction::from_truth_table(int n, std::uint64_t table) {
    if (n > 6) throw std::invalid_argument("from_truth_table: n > 6 does not fit a 64-bit table");
    std::vector<double> v(std::size_t{1} << n);
    for (Mask x = 0; x < v.size(); ++x) v[x] = static_cast<double>((table >> x) & 1u);
    return CubeFunction(n, std::move(v));
}

double CubeFunction::expectation(double p) const {
    const auto w = weights_by_popcount(p, n_);
    double e = 0.0;
    for (Mask x = 0; x < values_.size(); ++x) e += w[popcount(x)] * values_[x];
    return e;
}

CubeFunction named_family(const std::string& name, int n, int param) {
    if (n < 1) throw std::invalid_argument("named_family: n must be >= 1");
    const std::size_t size = std::size_t{1} << n;
    std::vector<double> v(size, 0.0);

    if (name == "dictator") {
        for (Mask x = 0; x < size; ++x) v[x] = static_cast<double>(x & 1u);
    } else if (name == "and") {
        v[size - 1] = 1.0;
    } else if (name == "or") {
        for (Mask x = 1; x < size; ++x) v[x] = 1.0;
    } else if (name == "parity") {
        for (Mask x = 0; x < size; ++x) v[x] = static_cast<double>(popcount(x) & 1);
    } else if (name == "majority") {
        for (Mask x = 0; x < size; ++x) v[x] = popcount(x) * 2 > n ? 1.0 : 0.0;
    } else if (name == "threshold") {
        const int k = param;
        if (k < 0 || k > n) throw std::invalid_argument("named_family: threshold needs 0 <= k <= n");
        for (Mask x = 0; x < size; ++x) v[x] = popcount(x) > k ? 1.0 : 0.0;
    } else if (name == "tribes") {
        const int w = param;
        if (w < 1 || w > n) throw std::invalid_argument("named_family: tribes needs width in [1, n]");
        for (Mask x = 0; x < size; ++x) {
            bool any = false;
            for (int start = 0; start < n && !any; start += w) {
                const int end = std::min(start + w, n);
                bool all = true;
                for (int i = start; i < end; ++i) all = all && ((x >> i) & 1u);
                any = all;
            }
            v[x] = any ? 1.0 : 0.0;
        }
    } else {
        throw std::invalid_argument("named_family: unknown family '" + name + "'");
    }
    return CubeFunction(n, std::move(v));
}

CubeFunction dual_function(const CubeFunction& f) {
    const Mask full = (Mask{1} << f.n()) - 1;
    std::vector<double> v(f.size());
    for (Mask x = 0; x <= full; ++x) v[x] = f(x ^ full);
    return CubeFunction(f.n(), std::move(v));
}

}  // namespace cube

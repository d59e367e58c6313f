#include "cube/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cube {
namespace oracle {

double naive_coefficient(const CubeFunction& f, Mask S, double p) {
    const int n = f.n();
    double sum = 0.0;
    for (Mask T = 0; T < f.size(); ++T) {
        const int ones = popcount(T);
        const double weight = std::pow(p, ones) * std::pow(1.0 - p, n - ones);
        // character from the definition, factor by factor
        const int in = popcount(S & T);
        const int out = popcount(S) - in;
        double u = 1.0;
        for (int c = 0; c < in; ++c) u *= -std::sqrt((1.0 - p) / p);
        for (int c = 0; c < out; ++c) u *= std::sqrt(p / (1.0 - p));
        sum += weight * f(T) * u;
    }
    return sum;
}

std::int64_t character_sum(Mask S, const DyadicBias& bias) {
    if (S == 0) throw std::invalid_argument("character_sum: S must be nonempty");
    const int m = static_cast<int>(bias.m);
    if (S >> m) throw std::invalid_argument("character_sum: S must be a subset of {1..m}");

    const std::int64_t threshold = (std::int64_t{1} << m) - bias.t;
    std::int64_t sum = 0;
    for (Mask y = 0; y < (Mask{1} << m); ++y) {
        // Bin with in-block coordinate 1 as the MSB
        std::int64_t bin = 0;
        for (int j = 1; j <= m; ++j)
            if ((y >> (j - 1)) & 1u) bin += std::int64_t{1} << (m - j);
        if (bin < threshold) continue;
        sum += (popcount(S & y) % 2 == 0) ? 1 : -1;
    }

    // a_s(t) for s = max(S), from the definition
    const int s = 64 - std::countl_zero(S);
    const std::int64_t mod = std::int64_t{1} << (m - s + 1);
    const std::int64_t r = bias.t % mod;
    const std::int64_t a = std::min(r, mod - r);
    if (std::llabs(sum) != a)
        throw std::logic_error("character_sum: |sum| != a_s(t) for t=" + std::to_string(bias.t) +
                               " m=" + std::to_string(m) + " S=" + std::to_string(S));
    if (s <= bias.L) {
        const std::int64_t expected = (popcount(S) % 2 == 0 ? 1 : -1) * bias.t;
        if (sum != expected)
            throw std::logic_error("character_sum: signed form failed for t=" +
                                   std::to_string(bias.t) + " m=" + std::to_string(m) +
                                   " S=" + std::to_string(S));
    }
    return sum;
}

std::vector<std::uint64_t> monotone_tables(int n) {
    if (n < 0 || n > 5)
        throw std::invalid_argument("monotone_tables: n must be in [0, 5]");
    // A monotone table on n variables is a pair (f0, f1) of monotone tables
    // on n-1 variables with f0 <= f1 pointwise (restrictions at x_n = 0/1).
    std::vector<std::uint64_t> cur = {0u, 1u};  // n = 0
    for (int k = 1; k <= n; ++k) {
        const int half = 1 << (k - 1);
        std::vector<std::uint64_t> next;
        for (std::uint64_t f0 : cur)
            for (std::uint64_t f1 : cur)
                if ((f0 & ~f1) == 0) next.push_back(f0 | (f1 << half));
        std::sort(next.begin(), next.end());
        cur = std::move(next);
    }
    return cur;
}

InstanceStream::InstanceStream(Kind kind, int n, std::uint64_t seed, std::size_t count)
    : kind_(kind), n_(n), seed_(seed), count_(count) {
    switch (kind_) {
        case Kind::ExhaustiveBoolean:
            if (n < 0 || n > 4)
                throw std::invalid_argument("InstanceStream: exhaustive-boolean capped at n = 4");
            count_ = std::size_t{1} << (std::size_t{1} << n);
            break;
        case Kind::ExhaustiveMonotone:
            tables_ = monotone_tables(n);
            count_ = tables_.size();
            break;
        default:
            break;
    }
    reset();
}

void InstanceStream::reset() {
    index_ = 0;
    rng_.seed(seed_);
}

std::optional<CubeFunction> InstanceStream::next() {
    if (index_ >= count_) return std::nullopt;
    const std::size_t i = index_++;
    switch (kind_) {
        case Kind::ExhaustiveBoolean:
            return CubeFunction::from_truth_table(n_, i);
        case Kind::ExhaustiveMonotone:
            return CubeFunction::from_truth_table(n_, tables_[i]);
        case Kind::RandomBoolean: {
            std::vector<double> v(std::size_t{1} << n_);
            for (auto& x : v) x = static_cast<double>(rng_() & 1u);
            return CubeFunction(n_, std::move(v));
        }
        case Kind::RandomReal:
        default: {
            std::uniform_real_distribution<double> dist(-1.0, 1.0);
            std::vector<double> v(std::size_t{1} << n_);
            for (auto& x : v) x = dist(rng_);
            return CubeFunction(n_, std::move(v));
        }
    }
}

InstanceStream enumerate_boolean(int n) { return InstanceStream(Kind::ExhaustiveBoolean, n); }

InstanceStream enumerate_monotone(int n) { return InstanceStream(Kind::ExhaustiveMonotone, n); }

CubeFunction random_instance(Kind kind, int n, std::uint64_t seed) {
    InstanceStream s(kind, n, seed, 1);
    return *s.next();
}

}  // namespace oracle
}  // namespace cube

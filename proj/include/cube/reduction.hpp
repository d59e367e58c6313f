#pragma once

#include <optional>
#include <vector>

#include "cube/bias.hpp"
#include "cube/fourier.hpp"
#include "cube/function.hpp"

namespace cube {

inline constexpr int kDefaultDenseCap = 26;

/// Bin(y^i) with within-block coordinate 1 as the most significant bit:
/// `block` is an m-bit local mask (coordinate j of the block <-> bit j-1).
std::int64_t bin_value(Mask block, int m);

/// 1 iff Bin(block) >= 2^m - t.
int h_threshold(Mask block, const DyadicBias& bias);

/// g = Red(f) on {0,1}^{mn}: block i of y occupies global coordinates
/// (i-1)m+1 .. im and collapses to the bit h(y^i).
class ReducedFunction {
  public:
    ReducedFunction(CubeFunction base, DyadicBias bias, int dense_cap = kDefaultDenseCap);

    const CubeFunction& base() const { return base_; }
    const DyadicBias& bias() const { return bias_; }
    int blocks() const { return base_.n(); }
    int width() const { return static_cast<int>(bias_.m); }
    int total_dim() const { return blocks() * width(); }

    /// Implicit evaluator, valid at any size.
    double operator()(Mask y) const;
    /// Base-cube point h(y^1), ..., h(y^n) for a point of the big cube.
    Mask project(Mask y) const;

    bool has_dense() const { return dense_.has_value(); }
    /// Dense table; throws if total_dim exceeded the dense cap.
    const CubeFunction& dense() const;

  private:
    CubeFunction base_;
    DyadicBias bias_;
    std::vector<std::uint8_t> h_table_;  // h per local block mask
    std::optional<CubeFunction> dense_;
};

ReducedFunction reduce(const CubeFunction& f, const DyadicBias& bias,
                       int dense_cap = kDefaultDenseCap);

/// Per-block view of a subset S of {1..mn}.
struct BlockDecomposition {
    Mask S = 0;
    std::vector<Mask> block_masks;  // local mask per block, size n
    std::vector<int> s;             // s_i = max in-block coordinate, 0 if empty
    Mask S_prime = 0;               // {i : S_i nonempty} as a subset of {1..n}
    int k = 0;                      // |S'|
};

BlockDecomposition decompose_subset(Mask S, int n, int m);

/// a_j(t) = min(t mod 2^{m-j+1}, 2^{m-j+1} - t mod 2^{m-j+1}), 1 <= j <= m.
std::int64_t a_factor(int j, const DyadicBias& bias);

struct PredictedCoefficient {
    double magnitude = 0.0;
    bool sign_known = false;
    double signed_value = 0.0;  // meaningful only when sign_known
};

/// Predicted g^(S) from the spectrum of f: magnitude
/// (prod a_{s_i}(t)/t) (sqrt(p/(1-p)))^k |f^(S')| always, and the signed
/// value (-sqrt(p/(1-p)))^k (-1)^|S| f^(S') whenever every s_i <= L.
/// S = 0 returns f^(0) exactly (expectation preservation).
PredictedCoefficient predicted_coefficient(const Spectrum& spec_f, Mask S, const DyadicBias& bias);

/// Right side of the level-weight lower bound:
/// ((p L)/(1-p))^d * sum_{|S|=d} f^(S)^2.
double level_weight_lower_bound(const Spectrum& spec_f, int d, const DyadicBias& bias);

}  // namespace cube

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cube/bias.hpp"

namespace cube {

// Points of {0,1}^n and subsets of {1..n} share one representation:
// coordinate i <-> bit i-1 of the mask (coordinate 1 is the LSB).
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline bool has_coord(Mask m, int i) { return (m >> (i - 1)) & 1u; }

inline Mask with_coord(Mask m, int i) { return m | (Mask{1} << (i - 1)); }

inline Mask flip_coord(Mask m, int i) { return m ^ (Mask{1} << (i - 1)); }

/// mu_p weight of a point: p^|x| (1-p)^(n-|x|).
double point_weight(double p, Mask point, int n);

/// Per-popcount weights p^k (1-p)^(n-k), k = 0..n.
std::vector<double> weights_by_popcount(double p, int n);

/// Real-valued function on {0,1}^n as a dense table indexed by point mask.
class CubeFunction {
  public:
    CubeFunction() = default;
    CubeFunction(int n, std::vector<double> values);

    static CubeFunction constant(int n, double c);
    /// Boolean function from a truth-table bitmask (bit k = f(point k)), n <= 6.
    static CubeFunction from_truth_table(int n, std::uint64_t table);

    int n() const { return n_; }
    std::size_t size() const { return values_.size(); }
    double operator()(Mask point) const { return values_[point]; }
    double& operator[](Mask point) { return values_[point]; }
    double operator[](Mask point) const { return values_[point]; }
    const std::vector<double>& values() const { return values_; }
    bool is_boolean() const { return boolean_; }

    /// E_{mu_p}[f].
    double expectation(double p) const;

    void recheck_boolean();

  private:
    int n_ = 0;
    std::vector<double> values_;
    bool boolean_ = false;
};

/// Families: dictator, and, or, parity, majority, threshold (1_{sum x_i > k}), tribes.
/// `param` is the threshold k or the tribe width; ignored elsewhere.
CubeFunction named_family(const std::string& name, int n, int param = -1);

/// f'(x) = f(1-x_1, ..., 1-x_n). Involution; flips the measure mu_p -> mu_{1-p},
/// with spectra satisfying f'^(S) = (-1)^|S| f^(S) across the flip.
CubeFunction dual_function(const CubeFunction& f);

}  // namespace cube

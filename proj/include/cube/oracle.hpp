#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cube/bias.hpp"
#include "cube/function.hpp"

namespace cube {
// Independent brute-force ground truth. Nothing here shares a code path
// with the transform or the reduction beyond the domain types.
namespace oracle {

/// Direct 2^n-term weighted sum E_{mu_p}[f u_S], computed from the
/// character definition.
double naive_coefficient(const CubeFunction& f, Mask S, double p);

/// sum over {y : Bin(y) >= 2^m - t} of the uniform-measure character
/// (-1)^|S cap y|, as an exact integer. Verifies the two closed forms
/// (magnitude a_{max(S)}(t); signed (-1)^|S| t when max(S) <= L) and
/// throws std::logic_error if either fails.
std::int64_t character_sum(Mask S, const DyadicBias& bias);

/// All monotone truth tables at dimension n (n <= 5), built recursively
/// from ordered pairs (f0, f1) with f0 <= f1 pointwise.
std::vector<std::uint64_t> monotone_tables(int n);

enum class Kind { ExhaustiveBoolean, ExhaustiveMonotone, RandomBoolean, RandomReal };

/// Deterministic instance source: exhaustive streams enumerate each object
/// exactly once; random streams replay exactly under (kind, n, seed, count).
class InstanceStream {
  public:
    InstanceStream(Kind kind, int n, std::uint64_t seed = 0, std::size_t count = 0);

    std::optional<CubeFunction> next();
    std::size_t count() const { return count_; }
    void reset();

  private:
    Kind kind_;
    int n_;
    std::uint64_t seed_;
    std::size_t count_;
    std::size_t index_ = 0;
    std::mt19937_64 rng_;
    std::vector<std::uint64_t> tables_;  // exhaustive-monotone only
};

InstanceStream enumerate_boolean(int n);
InstanceStream enumerate_monotone(int n);

CubeFunction random_instance(Kind kind, int n, std::uint64_t seed);

}  // namespace oracle
}  // namespace cube

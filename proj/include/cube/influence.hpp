#pragma once

#include <vector>

#include "cube/bias.hpp"
#include "cube/function.hpp"
#include "cube/reduction.hpp"
#include "cube/report.hpp"

namespace cube {

/// I_i(f) = Pr_{x ~ mu_p}[f(x) != f(x xor e_i)]. Requires a {0,1}-valued f.
double influence(const CubeFunction& f, int i, double p);

/// All n influences.
std::vector<double> influence_vector(const CubeFunction& f, double p);

double influence_sum(const CubeFunction& f, double p);
double influence_square_sum(const CubeFunction& f, double p);

/// true iff f(x) >= f(y) whenever x >= y coordinatewise (checked on the
/// n 2^(n-1) single-bit covers).
bool is_monotone(const CubeFunction& f);

struct BoundarySummary {
    double measure_A = 0.0;         // mu_p(A)
    double measure_boundary = 0.0;  // mu_p(dA), dA = union of the A_i
    std::vector<double> directional;  // mu_p(A_i) = mass of {x in A : x xor e_i not in A}
    double directional_sum() const;
    double directional_square_sum() const;
};

BoundarySummary boundary_sets(const CubeFunction& A, double p);

/// Influence transfer: sum_i I_i(g) <= 6 p L sum_i I_i(f).
InequalityReport fk_bound_check(const CubeFunction& f, const DyadicBias& bias,
                                int dense_cap = kDefaultDenseCap);

struct SquaresBoundReport {
    InequalityReport aggregate;  // sum I_i(g)^2 <= 12 p^2 L sum I_i(f)^2
    struct Row {
        int block = 0;     // i, 1-based
        int position = 0;  // j within the block, 1-based
        double lhs = 0.0;  // I_{(i-1)m+j}(g)
        double rhs = 0.0;  // 2p I_i(f) for j <= L, 2^(2-j) I_i(f) for j > L
        bool holds = false;
    };
    std::vector<Row> per_coordinate;
    bool per_coordinate_holds() const;
};

SquaresBoundReport squares_bound_check(const CubeFunction& f, const DyadicBias& bias,
                                       int dense_cap = kDefaultDenseCap);

/// First-level transfer: sum_i g^({i})^2 <= 3 (p L / (1-p)) sum_i f^({i})^2.
InequalityReport first_level_transfer_check(const CubeFunction& f, const DyadicBias& bias,
                                            int dense_cap = kDefaultDenseCap);

}  // namespace cube

#pragma once

#include <vector>

#include "cube/bias.hpp"
#include "cube/fourier.hpp"
#include "cube/function.hpp"
#include "cube/influence.hpp"
#include "cube/report.hpp"

namespace cube {

// The log arguments in phi/psi and the BKS/correlation bounds are natural
// logs (the statements anchor them at e); floor(log(1/p)) alone is base 2.

/// ||T_delta f||_2 <= ||f||_{1 + (1-p)/(pL) delta^2} for
/// 0 <= delta <= sqrt(pL/(1-p)). Out-of-hypothesis delta is computed and
/// flagged in the note rather than rejected.
InequalityReport hypercontractivity_check(const CubeFunction& f, double delta,
                                          const DyadicBias& bias);

/// For f with spectrum vanishing above level d and q >= 2:
/// ||f||_q <= ((1-p)/(pL) (q-1))^{d/2} ||f||_2.
InequalityReport low_degree_norm_check(const CubeFunction& f, double q, int d,
                                       const DyadicBias& bias);

/// Level-weight transfer: level_weight(g, d) >= ((pL)/(1-p))^d level_weight(f, d).
InequalityReport level_d_transfer_check(const CubeFunction& f, int d, const DyadicBias& bias,
                                        int dense_cap = kDefaultDenseCap);

struct TalagrandBoundaryReport {
    InequalityReport main;  // ratio-only, c = 1 at the supplied alpha
    // Explicit-constant steps of the transfer; these do get verdicts.
    InequalityReport boundary_step;   // mu_{1/2}(dB) <= mu_p(dA)
    InequalityReport influence_step;  // sum_j mu_{1/2}(B_j) <= 3 L sum_i mu_p(A_i)
    bool transfer_checked = false;    // false when mn exceeded the dense cap
};

/// Boundary-influence product against (c/L) phi(mu(A)(1-mu(A))) psi(3L sum mu(A_i)^2),
/// phi(x) = x^2 [ln(e/x)]^(1-alpha), psi(x) = [ln(e/x)]^alpha.
TalagrandBoundaryReport talagrand_boundary_report(const CubeFunction& A, const DyadicBias& bias,
                                                  double alpha = 0.5,
                                                  int dense_cap = kDefaultDenseCap);

/// Balanced-threshold boundary quantities A = {sum x_i > floor(np)},
/// computed from exact log-space binomials (valid up to n ~ 10^6).
struct TightnessRow {
    std::int64_t n = 0;
    double p = 0.0;
    double measure_A = 0.0;         // P[Bin(n,p) > floor(np)]
    double measure_boundary = 0.0;  // P[Bin(n,p) = floor(np)+1]
    double directional = 0.0;       // p P[Bin(n-1,p) = floor(np)]
    double boundary_asymptotic = 0.0;     // 1/sqrt(2 pi n p (1-p))
    double directional_asymptotic = 0.0;  // sqrt(p/(2 pi n (1-p)))
    double boundary_ratio = 0.0;
    double directional_ratio = 0.0;
    double product = 0.0;             // mu(dA) sum_i mu(A_i) = n mu(dA) mu(A_i)
    double square_sum = 0.0;          // sum_i mu(A_i)^2 = n mu(A_i)^2
    double square_sum_limit = 0.0;    // p/(2 pi (1-p))
    double square_sum_ratio = 0.0;
};

TightnessRow threshold_tightness_row(std::int64_t n, const DyadicBias& bias);
std::vector<TightnessRow> threshold_tightness_table(const std::vector<std::int64_t>& ns,
                                                    const DyadicBias& bias);

/// Ratio-only level-d bound for monotone Boolean f, d >= 2:
/// sum_{|S|=d} f^(S)^2 against
/// ((1-p)/(pL))^{d-1} p(1-p) sum I_i^2 ln^{d-1}(e/(p^2 L sum I_i^2)).
InequalityReport bks_ratio(const CubeFunction& f, int d, const DyadicBias& bias);

struct CorrelationReport {
    InequalityReport harris_kleitman;  // mu(A cap B) - mu(A) mu(B) >= 0, verdict
    InequalityReport talagrand;        // ratio-only vs phi(L sum I_i(A) I_i(B))
};

CorrelationReport correlation_report(const CubeFunction& A, const CubeFunction& B,
                                     const DyadicBias& bias);

/// sum_i f^({i})^2 <= E[f](1 - E[f]) for Boolean f.
InequalityReport first_level_parseval_check(const CubeFunction& f, const DyadicBias& bias);

/// log-space binomial pmf: P[Bin(n, p) = k].
double binomial_pmf(std::int64_t n, double p, std::int64_t k);
/// P[Bin(n, p) > k].
double binomial_upper_tail(std::int64_t n, double p, std::int64_t k);

}  // namespace cube

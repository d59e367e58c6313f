#include "cube/inequality.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cube/reduction.hpp"

namespace cube {

namespace {

constexpr double kLogClamp = 1e-300;  // keeps ln(e/x) finite for x -> 0+

double phi_boundary(double x, double alpha) {
    const double xc = std::max(x, kLogClamp);
    return xc * xc * std::pow(std::log(std::numbers::e / xc), 1.0 - alpha);
}

double psi_boundary(double x, double alpha) {
    const double xc = std::max(x, kLogClamp);
    return std::pow(std::log(std::numbers::e / xc), alpha);
}

}  // namespace

InequalityReport hypercontractivity_check(const CubeFunction& f, double delta,
                                          const DyadicBias& bias) {
    const double pL = bias.p * bias.L;
    const double delta_max = std::sqrt(pL / (1.0 - bias.p));
    const double q = 1.0 + (1.0 - bias.p) / pL * delta * delta;

    const Spectrum s = transform(f, bias.p);
    double lhs2 = 0.0;
    for (Mask S = 0; S < s.coeffs.size(); ++S) {
        const double c = std::pow(delta, popcount(S)) * s.coeffs[S];
        lhs2 += c * c;
    }
    const double lhs = std::sqrt(lhs2);
    const double rhs = q_norm(f, q, bias.p);

    auto r = make_upper_report("hypercontractivity", lhs, rhs);
    r.params = {{"t", double(bias.t)}, {"m", double(bias.m)}, {"p", bias.p},
                {"delta", delta}, {"q", q}};
    if (!(delta >= 0.0 && delta <= delta_max + kVerdictSlack))
        r.note = "out-of-hypothesis delta (allowed range [0, " + std::to_string(delta_max) + "])";
    return r;
}

InequalityReport low_degree_norm_check(const CubeFunction& f, double q, int d,
                                       const DyadicBias& bias) {
    if (q < 2.0) throw std::invalid_argument("low_degree_norm_check: q must be >= 2");
    const Spectrum s = transform(f, bias.p);
    for (Mask S = 0; S < s.coeffs.size(); ++S)
        if (popcount(S) > d && std::fabs(s.coeffs[S]) > 1e-10)
            throw std::invalid_argument(
                "low_degree_norm_check: spectrum does not vanish above level d");

    const double lhs = q_norm(f, q, bias.p);
    const double factor = (1.0 - bias.p) / (bias.p * bias.L) * (q - 1.0);
    const double rhs = std::pow(factor, d / 2.0) * q_norm(f, 2.0, bias.p);
    auto r = make_upper_report("low-degree-norm", lhs, rhs);
    r.params = {{"t", double(bias.t)}, {"m", double(bias.m)}, {"p", bias.p},
                {"q", q}, {"d", double(d)}};
    return r;
}

InequalityReport level_d_transfer_check(const CubeFunction& f, int d, const DyadicBias& bias,
                                        int dense_cap) {
    const ReducedFunction g = reduce(f, bias, dense_cap);
    const Spectrum sf = transform(f, bias.p);
    const Spectrum sg = transform(g.dense(), 0.5);
    const double lhs = level_weight(sg, d);
    const double rhs = level_weight_lower_bound(sf, d, bias);
    auto r = make_lower_report("level-weight-transfer", lhs, rhs);
    r.params = {{"t", double(bias.t)}, {"m", double(bias.m)}, {"p", bias.p}, {"d", double(d)}};
    return r;
}

TalagrandBoundaryReport talagrand_boundary_report(const CubeFunction& A, const DyadicBias& bias,
                                                  double alpha, int dense_cap) {
    if (!is_monotone(A))
        throw std::invalid_argument("talagrand_boundary_report: A must be monotone");
    const BoundarySummary bd = boundary_sets(A, bias.p);
    if (bd.measure_A <= 0.0 || bd.measure_A >= 1.0)
        throw std::invalid_argument("talagrand_boundary_report: mu_p(A) must be in (0, 1)");

    TalagrandBoundaryReport out;
    const double lhs = bd.measure_boundary * bd.directional_sum();
    const double rhs = 1.0 / bias.L *
                       phi_boundary(bd.measure_A * (1.0 - bd.measure_A), alpha) *
                       psi_boundary(3.0 * bias.L * bd.directional_square_sum(), alpha);
    out.main = make_ratio_report("talagrand-boundary", lhs, rhs);
    out.main.params = {{"t", double(bias.t)}, {"m", double(bias.m)}, {"p", bias.p},
                       {"alpha", alpha}};

    if (A.n() * bias.m <= dense_cap) {
        const ReducedFunction g = reduce(A, bias, dense_cap);
        const BoundarySummary bB = boundary_sets(g.dense(), 0.5);
        out.boundary_step =
            make_upper_report("boundary-containment", bB.measure_boundary, bd.measure_boundary);
        out.influence_step = make_upper_report("directional-sum-transfer", bB.directional_sum(),
                                               3.0 * bias.L * bd.directional_sum());
        out.transfer_checked = true;
    }
    return out;
}

double binomial_pmf(std::int64_t n, double p, std::int64_t k) {
    if (k < 0 || k > n) return 0.0;
    const double logp = std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
                        std::lgamma(double(n - k) + 1.0) + double(k) * std::log(p) +
                        double(n - k) * std::log1p(-p);
    return std::exp(logp);
}

double binomial_upper_tail(std::int64_t n, double p, std::int64_t k) {
    double sum = 0.0;
    for (std::int64_t j = n; j > k; --j) sum += binomial_pmf(n, p, j);
    return sum;
}

TightnessRow threshold_tightness_row(std::int64_t n, const DyadicBias& bias) {
    if (n < 1) throw std::invalid_argument("threshold_tightness_row: n must be >= 1");
    const double p = bias.p;
    const std::int64_t k0 = static_cast<std::int64_t>(std::floor(double(n) * p));

    TightnessRow row;
    row.n = n;
    row.p = p;
    row.measure_A = binomial_upper_tail(n, p, k0);
    row.measure_boundary = binomial_pmf(n, p, k0 + 1);
    row.directional = p * binomial_pmf(n - 1, p, k0);
    row.boundary_asymptotic = 1.0 / std::sqrt(2.0 * std::numbers::pi * double(n) * p * (1.0 - p));
    row.directional_asymptotic = std::sqrt(p / (2.0 * std::numbers::pi * double(n) * (1.0 - p)));
    row.boundary_ratio = row.measure_boundary / row.boundary_asymptotic;
    row.directional_ratio = row.directional / row.directional_asymptotic;
    row.product = row.measure_boundary * double(n) * row.directional;
    row.square_sum = double(n) * row.directional * row.directional;
    row.square_sum_limit = p / (2.0 * std::numbers::pi * (1.0 - p));
    row.square_sum_ratio = row.square_sum / row.square_sum_limit;
    return row;
}

std::vector<TightnessRow> threshold_tightness_table(const std::vector<std::int64_t>& ns,
                                                    const DyadicBias& bias) {
    std::vector<TightnessRow> rows;
    rows.reserve(ns.size());
    for (std::int64_t n : ns) rows.push_back(threshold_tightness_row(n, bias));
    return rows;
}

InequalityReport bks_ratio(const CubeFunction& f, int d, const DyadicBias& bias) {
    if (!f.is_boolean()) throw std::invalid_argument("bks_ratio: requires a Boolean function");
    if (!is_monotone(f)) throw std::invalid_argument("bks_ratio: requires a monotone function");
    if (d < 2) throw std::invalid_argument("bks_ratio: d must be >= 2");

    const Spectrum s = transform(f, bias.p);
    const double lhs = level_weight(s, d);
    const double si2 = influence_square_sum(f, bias.p);
    const double arg = std::max(bias.p * bias.p * bias.L * si2, kLogClamp);
    const double rhs = std::pow((1.0 - bias.p) / (bias.p * bias.L), d - 1) * bias.p *
                       (1.0 - bias.p) * si2 *
                       std::pow(std::log(std::numbers::e / arg), d - 1);
    auto r = make_ratio_report("bks-level-d", lhs, rhs);
    r.params = {{"t", double(bias.t)}, {"m", double(bias.m)}, {"p", bias.p}, {"d", double(d)}};
    return r;
}

CorrelationReport correlation_report(const CubeFunction& A, const CubeFunction& B,
                                     const DyadicBias& bias) {
    if (!A.is_boolean() || !B.is_boolean())
        throw std::invalid_argument("correlation_report: requires Boolean functions");
    if (!is_monotone(A) || !is_monotone(B))
        throw std::invalid_argument("correlation_report: requires monotone functions");
    if (A.n() != B.n()) throw std::invalid_argument("correlation_report: dimension mismatch");

    const auto w = weights_by_popcount(bias.p, A.n());
    double muA = 0.0, muB = 0.0, muAB = 0.0;
    for (Mask x = 0; x < A.size(); ++x) {
        const double wx = w[popcount(x)];
        if (A(x) == 1.0) muA += wx;
        if (B(x) == 1.0) muB += wx;
        if (A(x) == 1.0 && B(x) == 1.0) muAB += wx;
    }
    const double lhs = muAB - muA * muB;

    CorrelationReport out;
    out.harris_kleitman = make_lower_report("harris-kleitman", lhs, 0.0);
    out.harris_kleitman.params = {{"t", double(bias.t)}, {"m", double(bias.m)}, {"p", bias.p}};

    const auto infA = influence_vector(A, bias.p);
    const auto infB = influence_vector(B, bias.p);
    double cross = 0.0;
    for (int i = 0; i < A.n(); ++i) cross += infA[i] * infB[i];
    const double x = bias.L * cross;
    const double rhs = x == 0.0 ? 0.0 : x / std::log(std::numbers::e / std::max(x, kLogClamp));
    out.talagrand = make_ratio_report("talagrand-correlation", lhs, rhs);
    out.talagrand.params = out.harris_kleitman.params;
    return out;
}

InequalityReport first_level_parseval_check(const CubeFunction& f, const DyadicBias& bias) {
    if (!f.is_boolean())
        throw std::invalid_argument("first_level_parseval_check: requires a Boolean function");
    const Spectrum s = transform(f, bias.p);
    const double ef = s.coeffs[0];
    auto r = make_upper_report("first-level-parseval", level_weight(s, 1), ef * (1.0 - ef));
    r.params = {{"t", double(bias.t)}, {"m", double(bias.m)}, {"p", bias.p}};
    return r;
}

}  // namespace cube

#include "cube/influence.hpp"

#include <cmath>
#include <stdexcept>

#include "cube/fourier.hpp"

namespace cube {

namespace {

void require_boolean(const CubeFunction& f, const char* who) {
    if (!f.is_boolean())
        throw std::invalid_argument(std::string(who) + ": requires a {0,1}-valued function");
}

}  // namespace

double influence(const CubeFunction& f, int i, double p) {
    require_boolean(f, "influence");
    if (i < 1 || i > f.n()) throw std::invalid_argument("influence: coordinate out of range");
    const auto w = weights_by_popcount(p, f.n());
    double total = 0.0;
    for (Mask x = 0; x < f.size(); ++x)
        if (f(x) != f(flip_coord(x, i))) total += w[popcount(x)];
    return total;
}

std::vector<double> influence_vector(const CubeFunction& f, double p) {
    require_boolean(f, "influence_vector");
    const auto w = weights_by_popcount(p, f.n());
    std::vector<double> inf(f.n(), 0.0);
    for (Mask x = 0; x < f.size(); ++x) {
        const double wx = w[popcount(x)];
        for (int i = 1; i <= f.n(); ++i)
            if (f(x) != f(flip_coord(x, i))) inf[i - 1] += wx;
    }
    return inf;
}

double influence_sum(const CubeFunction& f, double p) {
    double s = 0.0;
    for (double v : influence_vector(f, p)) s += v;
    return s;
}

double influence_square_sum(const CubeFunction& f, double p) {
    double s = 0.0;
    for (double v : influence_vector(f, p)) s += v * v;
    return s;
}

bool is_monotone(const CubeFunction& f) {
    for (Mask x = 0; x < f.size(); ++x)
        for (int i = 1; i <= f.n(); ++i)
            if (!has_coord(x, i) && f(with_coord(x, i)) < f(x)) return false;
    return true;
}

double BoundarySummary::directional_sum() const {
    double s = 0.0;
    for (double v : directional) s += v;
    return s;
}

double BoundarySummary::directional_square_sum() const {
    double s = 0.0;
    for (double v : directional) s += v * v;
    return s;
}

BoundarySummary boundary_sets(const CubeFunction& A, double p) {
    require_boolean(A, "boundary_sets");
    const auto w = weights_by_popcount(p, A.n());
    BoundarySummary out;
    out.directional.assign(A.n(), 0.0);
    for (Mask x = 0; x < A.size(); ++x) {
        if (A(x) != 1.0) continue;
        const double wx = w[popcount(x)];
        out.measure_A += wx;
        bool on_boundary = false;
        for (int i = 1; i <= A.n(); ++i) {
            if (A(flip_coord(x, i)) == 0.0) {
                out.directional[i - 1] += wx;
                on_boundary = true;
            }
        }
        if (on_boundary) out.measure_boundary += wx;
    }
    return out;
}

InequalityReport fk_bound_check(const CubeFunction& f, const DyadicBias& bias, int dense_cap) {
    require_boolean(f, "fk_bound_check");
    const ReducedFunction g = reduce(f, bias, dense_cap);
    const double lhs = influence_sum(g.dense(), 0.5);
    const double rhs = 6.0 * bias.p * bias.L * influence_sum(f, bias.p);
    auto r = make_upper_report("influence-sum-transfer", lhs, rhs);
    r.params = {{"t", double(bias.t)}, {"m", double(bias.m)}, {"p", bias.p}};
    return r;
}

SquaresBoundReport squares_bound_check(const CubeFunction& f, const DyadicBias& bias,
                                       int dense_cap) {
    require_boolean(f, "squares_bound_check");
    const ReducedFunction g = reduce(f, bias, dense_cap);
    const int m = g.width();
    const auto inf_f = influence_vector(f, bias.p);
    const auto inf_g = influence_vector(g.dense(), 0.5);

    SquaresBoundReport out;
    double lhs = 0.0, rhs_f = 0.0;
    for (double v : inf_g) lhs += v * v;
    for (double v : inf_f) rhs_f += v * v;
    out.aggregate = make_upper_report("influence-square-transfer", lhs,
                                      12.0 * bias.p * bias.p * bias.L * rhs_f);
    out.aggregate.params = {{"t", double(bias.t)}, {"m", double(bias.m)}, {"p", bias.p}};

    for (int i = 1; i <= f.n(); ++i) {
        for (int j = 1; j <= m; ++j) {
            SquaresBoundReport::Row row;
            row.block = i;
            row.position = j;
            row.lhs = inf_g[(i - 1) * m + j - 1];
            row.rhs = (j <= bias.L ? 2.0 * bias.p : std::ldexp(1.0, 2 - j)) * inf_f[i - 1];
            row.holds = row.lhs <= row.rhs + kVerdictSlack;
            out.per_coordinate.push_back(row);
        }
    }
    return out;
}

bool SquaresBoundReport::per_coordinate_holds() const {
    for (const auto& row : per_coordinate)
        if (!row.holds) return false;
    return true;
}

InequalityReport first_level_transfer_check(const CubeFunction& f, const DyadicBias& bias,
                                            int dense_cap) {
    const ReducedFunction g = reduce(f, bias, dense_cap);
    const Spectrum sf = transform(f, bias.p);
    const Spectrum sg = transform(g.dense(), 0.5);
    const double lhs = level_weight(sg, 1);
    const double rhs = 3.0 * (bias.p * bias.L / (1.0 - bias.p)) * level_weight(sf, 1);
    auto r = make_upper_report("first-level-transfer", lhs, rhs);
    r.params = {{"t", double(bias.t)}, {"m", double(bias.m)}, {"p", bias.p}};
    return r;
}

}  // namespace cube

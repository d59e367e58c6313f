#include "cube/suite.hpp"

#include <atomic>
#include <cmath>
#include <sstream>

#include "cube/fourier.hpp"
#include "cube/function.hpp"
#include "cube/inequality.hpp"
#include "cube/influence.hpp"
#include "cube/oracle.hpp"
#include "cube/parallel.hpp"
#include "cube/reduction.hpp"

namespace cube {

std::vector<DyadicBias> bias_grid(int m_max) {
    std::vector<DyadicBias> grid;
    for (int m = 1; m <= m_max; ++m)
        for (std::int64_t t = 1; t <= (std::int64_t{1} << (m - 1)); ++t)
            grid.push_back(make_bias(t, m));
    return grid;
}

namespace {

struct Failure {
    std::size_t count = 0;
    std::string first;

    void add(const std::string& what) {
        if (count++ == 0) first = what;
    }
    bool ok() const { return count == 0; }
    std::string detail(const std::string& ok_msg) const {
        if (ok()) return ok_msg;
        std::ostringstream os;
        os << count << " failure(s); first: " << first;
        return os.str();
    }
};

std::string instance_tag(const DyadicBias& b, int n, const std::string& extra = "") {
    std::ostringstream os;
    os << "t=" << b.t << " m=" << b.m << " n=" << n;
    if (!extra.empty()) os << ' ' << extra;
    return os.str();
}

/// u_{S'} with S' = {1} as a value table under mu_p; meets the level-weight bound with equality.
CubeFunction dictator_character(double p) {
    return CubeFunction(1, {character(1, 0, p), character(1, 1, p)});
}

// Criterion 1: predicted vs actual coefficients of g.
CriterionResult criterion_coefficients() {
    Failure fail;
    std::size_t checked = 0;
    std::uint64_t seed = 1;
    for (const auto& bias : bias_grid(3)) {
        for (int n = 1; n <= 2; ++n) {
            std::vector<CubeFunction> fs;
            auto exhaustive = oracle::enumerate_boolean(n);
            while (auto f = exhaustive.next()) fs.push_back(*f);
            for (int r = 0; r < 100; ++r)
                fs.push_back(oracle::random_instance(oracle::Kind::RandomReal, n, seed++));

            for (const auto& f : fs) {
                const Spectrum sf = transform(f, bias.p);
                const ReducedFunction g = reduce(f, bias);
                const Spectrum sg = transform(g.dense(), 0.5);
                for (Mask S = 0; S < sg.coeffs.size(); ++S) {
                    const auto pc = predicted_coefficient(sf, S, bias);
                    ++checked;
                    if (std::fabs(std::fabs(sg.coeffs[S]) - pc.magnitude) >= 1e-10)
                        fail.add(instance_tag(bias, n, "S=" + std::to_string(S) + " magnitude"));
                    if (pc.sign_known && std::fabs(sg.coeffs[S] - pc.signed_value) >= 1e-10)
                        fail.add(instance_tag(bias, n, "S=" + std::to_string(S) + " sign"));
                }
            }
        }
    }
    return {1, "coefficient prediction exactness", fail.ok(),
            fail.detail(std::to_string(checked) + " coefficients checked")};
}

// Criterion 2: character-sum identities, exact integer arithmetic.
CriterionResult criterion_character_sums() {
    Failure fail;
    std::size_t checked = 0;
    for (int m = 1; m <= 6; ++m) {
        for (std::int64_t t = 1; t <= (std::int64_t{1} << (m - 1)); ++t) {
            const auto bias = make_bias(t, m);
            for (Mask S = 1; S < (Mask{1} << m); ++S) {
                ++checked;
                try {
                    oracle::character_sum(S, bias);  // throws if either identity fails
                } catch (const std::exception& e) {
                    fail.add(e.what());
                }
            }
        }
    }
    return {2, "character-sum identities", fail.ok(),
            fail.detail(std::to_string(checked) + " sums checked")};
}

// Criterion 3: level-weight lower bound, plus the equality instance.
CriterionResult criterion_level_transfer() {
    Failure fail;
    std::uint64_t seed = 100;
    for (const auto& bias : bias_grid(3)) {
        for (int n = 1; n <= 2; ++n) {
            std::vector<CubeFunction> fs;
            auto exhaustive = oracle::enumerate_boolean(n);
            while (auto f = exhaustive.next()) fs.push_back(*f);
            for (int r = 0; r < 100; ++r)
                fs.push_back(oracle::random_instance(oracle::Kind::RandomReal, n, seed++));
            for (const auto& f : fs)
                for (int d = 1; d <= n; ++d)
                    if (!level_d_transfer_check(f, d, bias).holds())
                        fail.add(instance_tag(bias, n, "d=" + std::to_string(d)));
        }
    }

    const auto bias = make_bias(1, 2);
    const auto eq = level_d_transfer_check(dictator_character(bias.p), 1, bias);
    if (std::fabs(eq.lhs - eq.rhs) >= 1e-12)
        fail.add("equality case t=1 m=2 d=1: lhs=" + std::to_string(eq.lhs) +
                 " rhs=" + std::to_string(eq.rhs));
    return {3, "level-weight transfer never violated", fail.ok(),
            fail.detail("equality case slack " + std::to_string(std::fabs(eq.lhs - eq.rhs)))};
}

// Criterion 4: influence transfer bounds (constants 6, 12, per-coordinate, 3).
CriterionResult criterion_influence_transfer() {
    Failure fail;
    auto check = [&](const CubeFunction& f, const DyadicBias& bias) {
        if (!fk_bound_check(f, bias).holds()) fail.add(instance_tag(bias, f.n(), "sum"));
        const auto sq = squares_bound_check(f, bias);
        if (!sq.aggregate.holds()) fail.add(instance_tag(bias, f.n(), "squares"));
        if (!sq.per_coordinate_holds()) fail.add(instance_tag(bias, f.n(), "per-coordinate"));
        if (!first_level_transfer_check(f, bias).holds())
            fail.add(instance_tag(bias, f.n(), "first-level"));
    };
    for (const auto& bias : bias_grid(3)) {
        for (int n = 1; n <= 3; ++n) {
            auto monotone = oracle::enumerate_monotone(n);
            while (auto f = monotone.next()) check(*f, bias);
        }
        auto all2 = oracle::enumerate_boolean(2);
        while (auto f = all2.next()) check(*f, bias);
    }
    return {4, "influence transfer bounds", fail.ok(), fail.detail("all instances hold")};
}

// Criterion 5: biased hypercontractivity and the low-degree norm bound.
CriterionResult criterion_hypercontractivity(int jobs) {
    Failure fail;
    std::atomic<std::size_t> violations{0};

    auto delta_grid = [](const DyadicBias& bias) {
        const double dmax = std::sqrt(bias.p * bias.L / (1.0 - bias.p));
        std::vector<double> grid(20);
        for (int i = 0; i < 20; ++i) grid[i] = dmax * i / 19.0;
        return grid;
    };
    auto check_function = [&](const CubeFunction& f, const DyadicBias& bias,
                              const std::vector<double>& grid) {
        for (double delta : grid)
            if (!hypercontractivity_check(f, delta, bias).holds()) ++violations;
    };

    for (const auto& bias : bias_grid(4)) {
        const auto grid = delta_grid(bias);
        for (int n = 1; n <= 4; ++n) {
            const std::size_t tables = std::size_t{1} << (std::size_t{1} << n);
            parallel_for(tables, jobs, [&](std::size_t begin, std::size_t end) {
                for (std::size_t tt = begin; tt < end; ++tt)
                    check_function(CubeFunction::from_truth_table(n, tt), bias, grid);
            });
            for (int r = 0; r < 250; ++r)
                check_function(
                    oracle::random_instance(oracle::Kind::RandomReal, n, 1000 + 250 * n + r),
                    bias, grid);
        }
    }
    // uniform-measure side at n = 8
    {
        const auto uniform = uniform_bias();
        const auto grid = delta_grid(uniform);
        parallel_for(1000, jobs, [&](std::size_t begin, std::size_t end) {
            for (std::size_t r = begin; r < end; ++r)
                check_function(oracle::random_instance(oracle::Kind::RandomReal, 8, 5000 + r),
                               uniform, grid);
        });
    }
    if (violations > 0) fail.add(std::to_string(violations.load()) + " hypercontractivity violations");

    // low-degree truncations
    std::uint64_t seed = 9000;
    for (const auto& bias : bias_grid(4)) {
        for (int d = 1; d <= 3; ++d) {
            for (int n = d; n <= 6; n += 2) {
                for (int r = 0; r < 5; ++r) {
                    const CubeFunction base =
                        oracle::random_instance(oracle::Kind::RandomReal, n, seed++);
                    Spectrum s = transform(base, bias.p);
                    for (Mask S = 0; S < s.coeffs.size(); ++S)
                        if (popcount(S) > d) s.coeffs[S] = 0.0;
                    const CubeFunction f = inverse_transform(s);
                    for (double q : {2.0, 2.5, 3.0, 4.0})
                        if (!low_degree_norm_check(f, q, d, bias).holds())
                            fail.add(instance_tag(bias, n,
                                                  "low-degree d=" + std::to_string(d) +
                                                      " q=" + std::to_string(q)));
                }
            }
        }
    }
    return {5, "hypercontractivity and low-degree norms", fail.ok(),
            fail.detail("all instances hold")};
}

// Criterion 6: explicit-constant boundary transfer steps.
CriterionResult criterion_boundary_transfer() {
    Failure fail;
    for (const auto& bias : bias_grid(3)) {
        auto monotone = oracle::enumerate_monotone(3);
        while (auto A = monotone.next()) {
            const double mu = A->expectation(bias.p);
            if (mu <= 0.0 || mu >= 1.0) continue;
            const auto report = talagrand_boundary_report(*A, bias);
            if (!report.transfer_checked) fail.add(instance_tag(bias, 3, "dense cap"));
            if (!report.boundary_step.holds()) fail.add(instance_tag(bias, 3, "boundary step"));
            if (!report.influence_step.holds()) fail.add(instance_tag(bias, 3, "influence step"));
        }
    }
    return {6, "boundary transfer steps", fail.ok(), fail.detail("all monotone sets hold")};
}

// Criterion 7: threshold tightness, exact binomials vs enumeration and local CLT.
CriterionResult criterion_tightness() {
    Failure fail;
    for (const auto& bias : {make_bias(1, 1), make_bias(1, 2), make_bias(3, 3), make_bias(1, 3)}) {
        for (int n = 1; n <= 12; ++n) {
            const auto row = threshold_tightness_row(n, bias);
            const int k0 = static_cast<int>(std::floor(n * bias.p));
            const CubeFunction A = named_family("threshold", n, k0);
            const auto bd = boundary_sets(A, bias.p);
            const double ai = n > 0 ? bd.directional[0] : 0.0;
            if (std::fabs(row.measure_A - bd.measure_A) >= 1e-12 ||
                std::fabs(row.measure_boundary - bd.measure_boundary) >= 1e-12 ||
                std::fabs(row.directional - ai) >= 1e-12)
                fail.add(instance_tag(bias, n, "binomial vs enumeration"));
        }
    }
    for (const auto& bias : {make_bias(1, 2), make_bias(1, 3)}) {
        const auto row = threshold_tightness_row(10000, bias);
        if (!(row.boundary_ratio >= 0.95 && row.boundary_ratio <= 1.05))
            fail.add("n=1e4 p=" + std::to_string(bias.p) +
                     " boundary ratio " + std::to_string(row.boundary_ratio));
        if (!(row.square_sum_ratio >= 0.9 && row.square_sum_ratio <= 1.1))
            fail.add("n=1e4 p=" + std::to_string(bias.p) +
                     " square-sum ratio " + std::to_string(row.square_sum_ratio));
    }
    return {7, "threshold tightness table", fail.ok(), fail.detail("exact and CLT columns agree")};
}

// Criterion 8: first-level Parseval bound and Harris-Kleitman positivity.
CriterionResult criterion_parseval_harris(int jobs) {
    Failure fail;
    std::atomic<std::size_t> violations{0};
    for (const auto& bias : bias_grid(4)) {
        parallel_for(std::size_t{1} << 16, jobs, [&](std::size_t begin, std::size_t end) {
            for (std::size_t tt = begin; tt < end; ++tt)
                if (!first_level_parseval_check(CubeFunction::from_truth_table(4, tt), bias)
                         .holds())
                    ++violations;
        });
    }
    if (violations > 0) fail.add(std::to_string(violations.load()) + " first-level violations");

    const auto monotone3 = oracle::monotone_tables(3);
    for (const auto& bias : bias_grid(4))
        for (std::uint64_t ta : monotone3)
            for (std::uint64_t tb : monotone3)
                if (!correlation_report(CubeFunction::from_truth_table(3, ta),
                                        CubeFunction::from_truth_table(3, tb), bias)
                         .harris_kleitman.holds())
                    fail.add(instance_tag(bias, 3, "harris-kleitman"));
    return {8, "first-level bound and correlation positivity", fail.ok(),
            fail.detail("all instances hold")};
}

// Criterion 9: structural invariants of the transform and the reduction.
CriterionResult criterion_structural() {
    Failure fail;

    // orthonormality, exhaustive for n <= 3, all dyadic p with m <= 4
    for (const auto& bias : bias_grid(4)) {
        for (int n = 1; n <= 3; ++n) {
            const auto w = weights_by_popcount(bias.p, n);
            for (Mask S = 0; S < (Mask{1} << n); ++S) {
                for (Mask R = 0; R < (Mask{1} << n); ++R) {
                    double e = 0.0;
                    for (Mask T = 0; T < (Mask{1} << n); ++T)
                        e += w[popcount(T)] * character(S, T, bias.p) * character(R, T, bias.p);
                    const double expect = S == R ? 1.0 : 0.0;
                    if (std::fabs(e - expect) >= 1e-10)
                        fail.add(instance_tag(bias, n, "orthonormality"));
                }
            }
        }
    }

    std::uint64_t seed = 40000;
    for (const auto& bias : {make_bias(1, 1), make_bias(1, 2), make_bias(3, 3), make_bias(5, 4)}) {
        for (int r = 0; r < 20; ++r) {
            const CubeFunction f = oracle::random_instance(oracle::Kind::RandomReal, 6, seed++);
            const Spectrum s = transform(f, bias.p);

            double parseval = 0.0, ef2 = 0.0;
            const auto w = weights_by_popcount(bias.p, 6);
            for (Mask S = 0; S < s.coeffs.size(); ++S) parseval += s.coeffs[S] * s.coeffs[S];
            for (Mask x = 0; x < f.size(); ++x) ef2 += w[popcount(x)] * f(x) * f(x);
            if (std::fabs(parseval - ef2) >= 1e-10) fail.add(instance_tag(bias, 6, "parseval"));

            const CubeFunction back = inverse_transform(s);
            for (Mask x = 0; x < f.size(); ++x)
                if (std::fabs(back(x) - f(x)) >= 1e-12)
                    fail.add(instance_tag(bias, 6, "round-trip"));
        }
    }

    // expectation and norm preservation of the reduction, mn <= 16
    seed = 50000;
    for (const auto& bias : bias_grid(4)) {
        for (int n = 1; n * bias.m <= 16 && n <= 4; ++n) {
            for (int r = 0; r < 5; ++r) {
                const CubeFunction f = oracle::random_instance(oracle::Kind::RandomReal, n, seed++);
                const ReducedFunction g = reduce(f, bias);
                if (std::fabs(g.dense().expectation(0.5) - f.expectation(bias.p)) >= 1e-12)
                    fail.add(instance_tag(bias, n, "expectation"));
                for (double q : {1.0, 2.0, 3.0, 4.0})
                    if (std::fabs(q_norm(g.dense(), q, 0.5) - q_norm(f, q, bias.p)) >= 1e-10)
                        fail.add(instance_tag(bias, n, "q-norm q=" + std::to_string(q)));
            }
        }
    }

    // dual-function spectrum flip across the measure change
    seed = 60000;
    for (const auto& bias : bias_grid(3)) {
        for (int n = 1; n <= 3; ++n) {
            std::vector<CubeFunction> fs;
            auto exhaustive = oracle::enumerate_boolean(std::min(n, 3));
            while (auto f = exhaustive.next())
                if (f->n() == n) fs.push_back(*f);
            for (int r = 0; r < 10; ++r)
                fs.push_back(oracle::random_instance(oracle::Kind::RandomReal, n, seed++));
            for (const auto& f : fs) {
                const Spectrum sf = transform(f, bias.p);
                const Spectrum sd = transform(dual_function(f), 1.0 - bias.p);
                for (Mask S = 0; S < sf.coeffs.size(); ++S) {
                    const double expect = (popcount(S) % 2 == 0 ? 1.0 : -1.0) * sf.coeffs[S];
                    if (std::fabs(sd.coeffs[S] - expect) >= 1e-10)
                        fail.add(instance_tag(bias, n, "dual flip"));
                }
            }
        }
    }

    return {9, "structural invariants", fail.ok(), fail.detail("all invariants hold")};
}

// Criterion 10: Dedekind counts from the monotone stream.
CriterionResult criterion_dedekind() {
    Failure fail;
    const std::size_t expect[] = {20, 168, 7581};
    for (int n = 3; n <= 5; ++n) {
        auto stream = oracle::enumerate_monotone(n);
        if (stream.count() != expect[n - 3])
            fail.add("n=" + std::to_string(n) + ": got " + std::to_string(stream.count()));
    }
    return {10, "Dedekind counts", fail.ok(), fail.detail("20 / 168 / 7581")};
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(int jobs) {
    std::vector<CriterionResult> results;
    results.push_back(criterion_coefficients());
    results.push_back(criterion_character_sums());
    results.push_back(criterion_level_transfer());
    results.push_back(criterion_influence_transfer());
    results.push_back(criterion_hypercontractivity(jobs));
    results.push_back(criterion_boundary_transfer());
    results.push_back(criterion_tightness());
    results.push_back(criterion_parseval_harris(jobs));
    results.push_back(criterion_structural());
    results.push_back(criterion_dedekind());
    return results;
}

}  // namespace cube

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cube/fourier.hpp"
#include "cube/function.hpp"
#include "cube/inequality.hpp"
#include "cube/oracle.hpp"
#include "cube/suite.hpp"

using namespace cube;

TEST_CASE("hypercontractivity: norms, hypothesis flag, exhaustive validity") {
    const auto bias = make_bias(1, 2);  // pL/(1-p) = 2/3
    const auto f = named_family("majority", 3);

    auto r = hypercontractivity_check(f, 0.5, bias);
    CHECK(r.verdict == Verdict::Holds);
    CHECK(r.params.at("q") == doctest::Approx(1.0 + 1.5 * 0.25).epsilon(1e-12));
    CHECK(r.note.empty());

    // delta beyond sqrt(pL/(1-p)) is computed but flagged
    r = hypercontractivity_check(f, 0.99, bias);
    CHECK_FALSE(r.note.empty());

    for (const auto& b : {make_bias(1, 2), make_bias(3, 3)}) {
        auto stream = oracle::enumerate_boolean(2);
        while (auto g = stream.next()) {
            for (double delta : {0.0, 0.3, std::sqrt(b.p * b.L / (1.0 - b.p))})
                CHECK(hypercontractivity_check(*g, delta, b).holds());
        }
    }
}

TEST_CASE("hypercontractivity is exact at delta = 0") {
    // T_0 f is the constant E[f]; the bound degrades to |E[f]| <= ||f||_1
    const auto bias = make_bias(3, 3);
    const auto f = oracle::random_instance(oracle::Kind::RandomReal, 4, 17);
    const auto r = hypercontractivity_check(f, 0.0, bias);
    CHECK(r.lhs == doctest::Approx(std::fabs(f.expectation(bias.p))).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(q_norm(f, 1.0, bias.p)).epsilon(1e-12));
}

TEST_CASE("low-degree norm bound accepts only genuinely low-degree input") {
    const auto bias = make_bias(1, 2);
    // dictator has degree 1
    const auto r = low_degree_norm_check(named_family("dictator", 2), 3.0, 1, bias);
    CHECK(r.verdict == Verdict::Holds);
    // majority of 3 has full degree
    CHECK_THROWS_AS(low_degree_norm_check(named_family("majority", 3), 3.0, 1, bias),
                    std::invalid_argument);
}

TEST_CASE("low-degree norm bound on random degree-d functions") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    const auto bias = make_bias(1, 3);
    for (int d = 1; d <= 2; ++d) {
        for (int r = 0; r < 20; ++r) {
            Spectrum s{3, bias.p, std::vector<double>(8, 0.0)};
            for (Mask S = 0; S < 8; ++S)
                if (popcount(S) <= d) s.coeffs[S] = coeff(rng);
            const auto f = inverse_transform(s);
            for (double q : {2.0, 2.5, 3.0, 4.0})
                CHECK(low_degree_norm_check(f, q, d, bias).holds());
        }
    }
}

TEST_CASE("level-d transfer: equality witness at d = 1") {
    const auto bias = make_bias(1, 2);
    CubeFunction f(1, {character(1, 0, bias.p), character(1, 1, bias.p)});
    const auto r = level_d_transfer_check(f, 1, bias);
    CHECK(r.lhs == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(r.verdict == Verdict::Holds);
}

TEST_CASE("level-d transfer on exhaustive Boolean instances") {
    for (const auto& bias : {make_bias(1, 2), make_bias(3, 3)}) {
        auto stream = oracle::enumerate_boolean(2);
        while (auto f = stream.next())
            for (int d = 0; d <= 2; ++d) CHECK(level_d_transfer_check(*f, d, bias).holds());
    }
}

TEST_CASE("talagrand boundary report on a half-space") {
    const auto bias = make_bias(1, 2);
    const auto rep = talagrand_boundary_report(named_family("dictator", 2), bias);
    CHECK(rep.main.verdict == Verdict::RatioOnly);
    // lhs = mu(dA) sum_i mu(A_i) = p * p
    CHECK(rep.main.lhs == doctest::Approx(bias.p * bias.p).epsilon(1e-12));
    CHECK(rep.main.rhs > 0.0);
    CHECK(rep.transfer_checked);
    CHECK(rep.boundary_step.holds());
    CHECK(rep.influence_step.holds());
}

TEST_CASE("talagrand boundary rejects degenerate or non-monotone sets") {
    const auto bias = make_bias(1, 2);
    CHECK_THROWS_AS(talagrand_boundary_report(CubeFunction::constant(2, 0.0), bias),
                    std::invalid_argument);
    CHECK_THROWS_AS(talagrand_boundary_report(CubeFunction::constant(2, 1.0), bias),
                    std::invalid_argument);
    CHECK_THROWS_AS(talagrand_boundary_report(named_family("parity", 2), bias),
                    std::invalid_argument);
}

TEST_CASE("talagrand transfer steps hold for all monotone sets at n = 3") {
    for (const auto& bias : {make_bias(1, 2), make_bias(3, 3)}) {
        auto stream = oracle::enumerate_monotone(3);
        while (auto f = stream.next()) {
            if (f->expectation(bias.p) <= 0.0 || f->expectation(bias.p) >= 1.0) continue;
            const auto rep = talagrand_boundary_report(*f, bias);
            CHECK(rep.transfer_checked);
            CHECK(rep.boundary_step.holds());
            CHECK(rep.influence_step.holds());
        }
    }
}

TEST_CASE("binomial helpers in log space") {
    CHECK(binomial_pmf(4, 0.5, 2) == doctest::Approx(6.0 / 16.0).epsilon(1e-12));
    CHECK(binomial_pmf(3, 0.25, 0) == doctest::Approx(27.0 / 64.0).epsilon(1e-12));
    double total = 0.0;
    for (int k = 0; k <= 10; ++k) total += binomial_pmf(10, 0.3, k);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(binomial_upper_tail(10, 0.3, 10) == 0.0);
    CHECK(binomial_upper_tail(2, 0.5, 0) == doctest::Approx(0.75).epsilon(1e-12));
    // stays finite and sane far beyond double factorials
    CHECK(binomial_pmf(1000000, 0.25, 250000) ==
          doctest::Approx(1.0 / std::sqrt(2 * std::numbers::pi * 1e6 * 0.25 * 0.75))
              .epsilon(1e-3));
}

TEST_CASE("threshold tightness row matches exact binomials and the asymptote") {
    const auto bias = make_bias(1, 2);
    const auto row = threshold_tightness_row(8, bias);
    CHECK(row.n == 8);
    CHECK(row.p == 0.25);
    CHECK(row.measure_A == doctest::Approx(binomial_upper_tail(8, 0.25, 2)).epsilon(1e-12));
    CHECK(row.measure_boundary == doctest::Approx(binomial_pmf(8, 0.25, 3)).epsilon(1e-12));
    CHECK(row.directional == doctest::Approx(0.25 * binomial_pmf(7, 0.25, 2)).epsilon(1e-12));
    CHECK(row.product == doctest::Approx(row.measure_boundary * 8 * row.directional)
                             .epsilon(1e-12));
    CHECK(row.square_sum == doctest::Approx(8 * row.directional * row.directional)
                                .epsilon(1e-12));

    // ratios approach 1 as n grows
    const auto big = threshold_tightness_row(100000, bias);
    CHECK(big.boundary_ratio == doctest::Approx(1.0).epsilon(0.01));
    CHECK(big.directional_ratio == doctest::Approx(1.0).epsilon(0.01));
    CHECK(big.square_sum_ratio == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("tightness rows agree with brute force at small n") {
    const auto bias = make_bias(1, 2);
    for (std::int64_t n : {3, 4, 5}) {
        const auto row = threshold_tightness_row(n, bias);
        const auto f = named_family("threshold", static_cast<int>(n),
                                    static_cast<std::int64_t>(n) / 4);
        const auto b = boundary_sets(f, bias.p);
        CHECK(row.measure_A == doctest::Approx(b.measure_A).epsilon(1e-12));
        CHECK(row.measure_boundary == doctest::Approx(b.measure_boundary).epsilon(1e-12));
        CHECK(n * row.directional == doctest::Approx(b.directional_sum()).epsilon(1e-12));
    }
}

TEST_CASE("bks ratio demands monotone Boolean input of degree at least two") {
    const auto bias = make_bias(1, 2);
    CHECK_THROWS_AS(bks_ratio(named_family("parity", 3), 2, bias), std::invalid_argument);
    CHECK_THROWS_AS(bks_ratio(CubeFunction::constant(2, 0.3), 2, bias), std::invalid_argument);
    CHECK_THROWS_AS(bks_ratio(named_family("majority", 3), 1, bias), std::invalid_argument);

    const auto r = bks_ratio(named_family("majority", 3), 2, bias);
    CHECK(r.verdict == Verdict::RatioOnly);
    const auto s = transform(named_family("majority", 3), bias.p);
    CHECK(r.lhs == doctest::Approx(level_weight(s, 2)).epsilon(1e-12));
    CHECK(r.rhs > 0.0);
    CHECK(r.ratio == doctest::Approx(r.lhs / r.rhs).epsilon(1e-12));
}

TEST_CASE("correlation report: nested and disjoint events") {
    const auto bias = make_bias(1, 2);
    const auto dict = named_family("dictator", 2);

    // A = B = {x1 = 1}: covariance p(1-p)
    auto rep = correlation_report(dict, dict, bias);
    CHECK(rep.harris_kleitman.lhs == doctest::Approx(bias.p * (1 - bias.p)).epsilon(1e-12));
    CHECK(rep.harris_kleitman.verdict == Verdict::Holds);
    CHECK(rep.talagrand.verdict == Verdict::RatioOnly);

    // independent events have zero covariance
    std::vector<double> second{0, 0, 1, 1};  // {x2 = 1}
    rep = correlation_report(dict, CubeFunction(2, second), bias);
    CHECK(rep.harris_kleitman.lhs == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(rep.harris_kleitman.holds());
}

TEST_CASE("harris-kleitman holds for every monotone pair at n = 3") {
    const auto bias = make_bias(3, 3);
    const auto tables = oracle::monotone_tables(3);
    for (auto ta : tables) {
        for (auto tb : tables) {
            const auto A = CubeFunction::from_truth_table(3, ta);
            const auto B = CubeFunction::from_truth_table(3, tb);
            CHECK(correlation_report(A, B, bias).harris_kleitman.holds());
        }
    }
}

TEST_CASE("first-level Parseval bound, with equality for dictators") {
    const auto bias = make_bias(1, 2);
    const auto r = first_level_parseval_check(named_family("dictator", 2), bias);
    CHECK(r.lhs == doctest::Approx(bias.p * (1 - bias.p)).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(bias.p * (1 - bias.p)).epsilon(1e-12));
    CHECK(r.verdict == Verdict::Holds);

    auto stream = oracle::enumerate_boolean(3);
    while (auto f = stream.next()) CHECK(first_level_parseval_check(*f, bias).holds());
}

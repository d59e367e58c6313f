// Command-line surface for the biased-cube toolkit: transforms, the
// blow-up reduction, and the inequality verification sweeps.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cube/bias.hpp"
#include "cube/fourier.hpp"
#include "cube/function.hpp"
#include "cube/inequality.hpp"
#include "cube/influence.hpp"
#include "cube/io.hpp"
#include "cube/oracle.hpp"
#include "cube/reduction.hpp"
#include "cube/suite.hpp"

namespace {

using nlohmann::json;

struct Options {
    std::string family;
    int family_param = -1;
    std::string input;
    std::string family_b;
    int family_param_b = -1;
    std::string input_b;
    int n = 3;
    std::int64_t t = 0;
    std::int64_t m = 0;
    double p = -1.0;
    int m_max = 0;
    int d = 1;
    int delta_points = 20;
    double q = 2.0;
    double alpha = 0.5;
    std::string out;
    std::string format = "json";
    double tol = 1e-10;
    int dense_cap = cube::kDefaultDenseCap;
    std::uint64_t seed = 0;
    int jobs = 0;
};

struct BiasChoice {
    cube::DyadicBias bias;
    double approx_error = 0.0;
    bool approximated = false;
};

BiasChoice resolve_bias(const Options& opt) {
    if (opt.t > 0 && opt.m > 0) return {cube::make_bias(opt.t, opt.m), 0.0, false};
    if (opt.p > 0.0) {
        if (opt.m_max <= 0)
            throw CLI::ValidationError("--p requires --m-max (the approximation is made explicit)");
        const auto a = cube::dyadic_approx(opt.p, opt.m_max);
        return {a.bias, a.achieved_error, true};
    }
    throw CLI::ValidationError("need a bias: --t and --m, or --p with --m-max");
}

cube::CubeFunction load_function(const std::string& family, int family_param,
                                 const std::string& input, int n) {
    if (!input.empty()) return cube::io::read_function_file(input).function;
    if (!family.empty()) return cube::named_family(family, n, family_param);
    throw CLI::ValidationError("need a function: --family or --input");
}

void emit(const Options& opt, const json& j, const std::string& csv) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!opt.out.empty()) {
        file.open(opt.out);
        if (!file) throw std::runtime_error("cannot open output file: " + opt.out);
        os = &file;
    }
    if (opt.format == "csv")
        *os << csv;
    else
        *os << j.dump(2) << '\n';
}

json bias_header(const BiasChoice& bc) {
    json j{{"t", bc.bias.t}, {"m", bc.bias.m}, {"p", bc.bias.p}, {"L", bc.bias.L}};
    if (bc.approximated) j["dyadic_approx_error"] = bc.approx_error;
    return j;
}

int verdict_exit(const std::vector<cube::InequalityReport>& reports) {
    for (const auto& r : reports)
        if (r.verdict == cube::Verdict::Violated) return 1;
    return 0;
}

std::string reports_csv(const std::vector<cube::InequalityReport>& reports) {
    std::ostringstream os;
    cube::io::reports_to_csv(reports, os);
    return os.str();
}

int cmd_spectrum(const Options& opt) {
    const auto bc = resolve_bias(opt);
    const auto f = load_function(opt.family, opt.family_param, opt.input, opt.n);
    const auto s = cube::transform(f, bc.bias.p);
    std::ostringstream csv;
    cube::io::spectrum_to_csv(s, csv);
    json j = cube::io::spectrum_to_json(s);
    j["bias"] = bias_header(bc);
    emit(opt, j, csv.str());
    return 0;
}

int cmd_reduce(const Options& opt) {
    const auto bc = resolve_bias(opt);
    const auto f = load_function(opt.family, opt.family_param, opt.input, opt.n);
    const auto g = cube::reduce(f, bc.bias, opt.dense_cap);
    json j{{"bias", bias_header(bc)},
           {"blocks", g.blocks()},
           {"width", g.width()},
           {"total_dim", g.total_dim()}};
    std::string csv;
    if (g.has_dense()) {
        j["function"] = cube::io::write_function(g.dense(), std::nullopt);
        std::ostringstream os;
        os << "point,value\n";
        for (cube::Mask y = 0; y < g.dense().size(); ++y)
            os << y << ',' << cube::io::format_double(g.dense()(y)) << '\n';
        csv = os.str();
    } else {
        j["dense"] = false;
        j["note"] = "total dimension exceeds the dense cap; implicit evaluator only";
        csv = "total_dim,dense\n" + std::to_string(g.total_dim()) + ",false\n";
    }
    emit(opt, j, csv);
    return 0;
}

int cmd_verify_coeffs(const Options& opt) {
    const auto bc = resolve_bias(opt);
    const auto f = load_function(opt.family, opt.family_param, opt.input, opt.n);
    const auto sf = cube::transform(f, bc.bias.p);
    const auto g = cube::reduce(f, bc.bias, opt.dense_cap);
    const auto sg = cube::transform(g.dense(), 0.5);

    std::ostringstream csv;
    csv << "subset_mask,predicted,actual,abs_diff,sign_known\n";
    json rows = json::array();
    std::size_t violations = 0;
    double max_diff = 0.0;
    for (cube::Mask S = 0; S < sg.coeffs.size(); ++S) {
        const auto pc = cube::predicted_coefficient(sf, S, bc.bias);
        const double actual = sg.coeffs[S];
        const double diff = pc.sign_known ? std::fabs(actual - pc.signed_value)
                                          : std::fabs(std::fabs(actual) - pc.magnitude);
        max_diff = std::max(max_diff, diff);
        if (diff >= opt.tol) ++violations;
        const double predicted = pc.sign_known ? pc.signed_value : pc.magnitude;
        csv << S << ',' << cube::io::format_double(predicted) << ','
            << cube::io::format_double(actual) << ',' << cube::io::format_double(diff) << ','
            << (pc.sign_known ? 1 : 0) << '\n';
        rows.push_back({{"S", S},
                        {"predicted", predicted},
                        {"actual", actual},
                        {"abs_diff", diff},
                        {"sign_known", pc.sign_known}});
    }
    json j{{"bias", bias_header(bc)},
           {"max_abs_diff", max_diff},
           {"violations", violations},
           {"rows", rows}};
    emit(opt, j, csv.str());
    return violations == 0 ? 0 : 1;
}

int cmd_verify_levels(const Options& opt) {
    const auto bc = resolve_bias(opt);
    const auto f = load_function(opt.family, opt.family_param, opt.input, opt.n);
    std::vector<cube::InequalityReport> reports;
    for (int d = 1; d <= f.n(); ++d)
        reports.push_back(cube::level_d_transfer_check(f, d, bc.bias, opt.dense_cap));
    json j{{"bias", bias_header(bc)}, {"reports", json::array()}};
    for (const auto& r : reports) j["reports"].push_back(cube::io::report_to_json(r));
    emit(opt, j, reports_csv(reports));
    return verdict_exit(reports);
}

int cmd_verify_influence(const Options& opt) {
    const auto bc = resolve_bias(opt);
    const auto f = load_function(opt.family, opt.family_param, opt.input, opt.n);
    std::vector<cube::InequalityReport> reports;
    reports.push_back(cube::fk_bound_check(f, bc.bias, opt.dense_cap));
    const auto sq = cube::squares_bound_check(f, bc.bias, opt.dense_cap);
    reports.push_back(sq.aggregate);
    reports.push_back(cube::first_level_transfer_check(f, bc.bias, opt.dense_cap));

    json per_coord = json::array();
    bool per_coord_ok = true;
    for (const auto& row : sq.per_coordinate) {
        per_coord.push_back({{"block", row.block},
                             {"position", row.position},
                             {"lhs", row.lhs},
                             {"rhs", row.rhs},
                             {"holds", row.holds}});
        per_coord_ok = per_coord_ok && row.holds;
    }
    json j{{"bias", bias_header(bc)}, {"reports", json::array()}, {"per_coordinate", per_coord}};
    for (const auto& r : reports) j["reports"].push_back(cube::io::report_to_json(r));
    emit(opt, j, reports_csv(reports));
    return (verdict_exit(reports) == 0 && per_coord_ok) ? 0 : 1;
}

int cmd_hyper(const Options& opt) {
    const auto bc = resolve_bias(opt);
    const auto f = load_function(opt.family, opt.family_param, opt.input, opt.n);
    const double dmax = std::sqrt(bc.bias.p * bc.bias.L / (1.0 - bc.bias.p));
    std::vector<cube::InequalityReport> reports;
    const int points = std::max(opt.delta_points, 2);
    for (int i = 0; i < points; ++i)
        reports.push_back(
            cube::hypercontractivity_check(f, dmax * i / (points - 1), bc.bias));
    json j{{"bias", bias_header(bc)}, {"reports", json::array()}};
    for (const auto& r : reports) j["reports"].push_back(cube::io::report_to_json(r));
    emit(opt, j, reports_csv(reports));
    return verdict_exit(reports);
}

int cmd_boundary(const Options& opt) {
    const auto bc = resolve_bias(opt);
    const auto f = load_function(opt.family, opt.family_param, opt.input, opt.n);
    const auto report = cube::talagrand_boundary_report(f, bc.bias, opt.alpha, opt.dense_cap);
    std::vector<cube::InequalityReport> reports{report.main};
    if (report.transfer_checked) {
        reports.push_back(report.boundary_step);
        reports.push_back(report.influence_step);
    }
    json j{{"bias", bias_header(bc)},
           {"transfer_checked", report.transfer_checked},
           {"reports", json::array()}};
    for (const auto& r : reports) j["reports"].push_back(cube::io::report_to_json(r));
    emit(opt, j, reports_csv(reports));
    return verdict_exit(reports);
}

int cmd_correlation(const Options& opt) {
    const auto bc = resolve_bias(opt);
    const auto A = load_function(opt.family, opt.family_param, opt.input, opt.n);
    const auto B = load_function(opt.family_b.empty() ? opt.family : opt.family_b,
                                 opt.family_param_b < 0 ? opt.family_param : opt.family_param_b,
                                 opt.input_b, opt.n);
    const auto report = cube::correlation_report(A, B, bc.bias);
    std::vector<cube::InequalityReport> reports{report.harris_kleitman, report.talagrand};
    json j{{"bias", bias_header(bc)}, {"reports", json::array()}};
    for (const auto& r : reports) j["reports"].push_back(cube::io::report_to_json(r));
    emit(opt, j, reports_csv(reports));
    return verdict_exit(reports);
}

int cmd_bks(const Options& opt) {
    const auto bc = resolve_bias(opt);
    const auto f = load_function(opt.family, opt.family_param, opt.input, opt.n);
    const auto report = cube::bks_ratio(f, opt.d, bc.bias);
    std::vector<cube::InequalityReport> reports{report};
    json j{{"bias", bias_header(bc)}, {"report", cube::io::report_to_json(report)}};
    emit(opt, j, reports_csv(reports));
    return 0;  // ratio-only, never a verdict violation
}

int cmd_tightness(const Options& opt, const std::vector<std::int64_t>& ns) {
    const auto bc = resolve_bias(opt);
    const auto rows = cube::threshold_tightness_table(
        ns.empty() ? std::vector<std::int64_t>{opt.n} : ns, bc.bias);
    std::ostringstream csv;
    cube::io::tightness_to_csv(rows, csv);
    json j{{"bias", bias_header(bc)}, {"rows", cube::io::tightness_to_json(rows)}};
    emit(opt, j, csv.str());
    return 0;
}

int cmd_suite(const Options& opt) {
    const auto results = cube::run_acceptance_suite(opt.jobs);
    bool all_passed = true;
    std::ostringstream csv;
    csv << "id,name,passed,detail\n";
    json rows = json::array();
    for (const auto& r : results) {
        std::cerr << '[' << (r.passed ? "PASS" : "FAIL") << "] criterion " << r.id << ": "
                  << r.name << " — " << r.detail << '\n';
        csv << r.id << ',' << r.name << ',' << (r.passed ? 1 : 0) << ',' << r.detail << '\n';
        rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        all_passed = all_passed && r.passed;
    }
    if (!opt.out.empty()) emit(opt, rows, csv.str());
    return all_passed ? 0 : 1;
}

void add_bias_flags(CLI::App* app, Options& opt) {
    app->add_option("--t", opt.t, "numerator of the dyadic bias p = t/2^m");
    app->add_option("--m", opt.m, "dyadic exponent of the bias");
    app->add_option("--p", opt.p, "non-dyadic target bias, approximated (requires --m-max)");
    app->add_option("--m-max", opt.m_max, "largest m allowed when approximating --p");
}

void add_function_flags(CLI::App* app, Options& opt) {
    app->add_option("--family", opt.family,
                    "named family: dictator, and, or, parity, majority, threshold, tribes");
    app->add_option("--param", opt.family_param, "family parameter (threshold k, tribe width)");
    app->add_option("--n", opt.n, "dimension for named families (default 3)");
    app->add_option("--input", opt.input, "JSON function file (overrides --family)");
}

void add_output_flags(CLI::App* app, Options& opt) {
    app->add_option("--out", opt.out, "output path (default stdout)");
    app->add_option("--format", opt.format, "json or csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"biased-cube Fourier toolkit: reduction, spectra, and inequality checks"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--tol", opt.tol, "comparison tolerance (default 1e-10)");
    app.add_option("--dense-cap", opt.dense_cap, "largest mn kept as a dense table (default 26)");
    app.add_option("--seed", opt.seed, "random seed for generated instances");
    app.add_option("--jobs", opt.jobs, "worker threads for sweeps (default: machine parallelism)");

    auto* spectrum = app.add_subcommand("spectrum", "transform a function and export its spectrum");
    auto* reduce_cmd = app.add_subcommand("reduce", "emit the blown-up function g");
    auto* verify = app.add_subcommand("verify", "predicted-vs-actual verification sweeps");
    verify->require_subcommand(1);
    auto* v_coeffs = verify->add_subcommand("coeffs", "predicted vs actual coefficients of g");
    auto* v_levels = verify->add_subcommand("levels", "level-weight lower bound per level");
    auto* v_influence = verify->add_subcommand("influence", "influence transfer bounds");
    auto* hyper = app.add_subcommand("hyper", "hypercontractivity over a delta grid");
    auto* boundary = app.add_subcommand("boundary", "boundary report and transfer steps");
    auto* correlation = app.add_subcommand("correlation", "correlation of two monotone sets");
    auto* bks = app.add_subcommand("bks", "level-d coefficient bound ratio (monotone f)");
    auto* tightness = app.add_subcommand("tightness", "balanced-threshold tightness table");
    auto* suite = app.add_subcommand("suite", "run the full verification suite");

    std::vector<std::int64_t> tightness_ns;
    // let the app-level options (--tol, --dense-cap, ...) appear after the
    // subcommand name too
    for (CLI::App* cmd : {spectrum, reduce_cmd, verify, v_coeffs, v_levels, v_influence, hyper,
                          boundary, correlation, bks, tightness, suite})
        cmd->fallthrough();
    for (CLI::App* cmd : {spectrum, reduce_cmd, v_coeffs, v_levels, v_influence, hyper, boundary,
                          correlation, bks}) {
        add_bias_flags(cmd, opt);
        add_function_flags(cmd, opt);
        add_output_flags(cmd, opt);
    }
    add_bias_flags(tightness, opt);
    add_output_flags(tightness, opt);
    tightness->add_option("--n", opt.n, "single dimension (when --n-list absent)");
    tightness->add_option("--n-list", tightness_ns, "dimensions for the table rows");
    hyper->add_option("--delta-grid", opt.delta_points, "number of delta grid points (default 20)");
    boundary->add_option("--alpha", opt.alpha, "exponent alpha in phi/psi (default 0.5)");
    bks->add_option("--d", opt.d, "level d >= 2");
    correlation->add_option("--family-b", opt.family_b, "second family");
    correlation->add_option("--param-b", opt.family_param_b, "second family parameter");
    correlation->add_option("--input-b", opt.input_b, "second function file");
    add_output_flags(suite, opt);

    try {
        app.parse(argc, argv);
        if (*spectrum) return cmd_spectrum(opt);
        if (*reduce_cmd) return cmd_reduce(opt);
        if (*v_coeffs) return cmd_verify_coeffs(opt);
        if (*v_levels) return cmd_verify_levels(opt);
        if (*v_influence) return cmd_verify_influence(opt);
        if (*hyper) return cmd_hyper(opt);
        if (*boundary) return cmd_boundary(opt);
        if (*correlation) return cmd_correlation(opt);
        if (*bks) return cmd_bks(opt);
        if (*tightness) return cmd_tightness(opt, tightness_ns);
        if (*suite) return cmd_suite(opt);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

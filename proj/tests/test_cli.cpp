#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    const std::string out_path = "cli_stdout.tmp";
    const std::string cmd =
        std::string(CUBELAB_PATH) + " " + args + " > " + out_path + " 2> cli_stderr.tmp";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.stdout_text = buf.str();
    std::remove(out_path.c_str());
    std::remove("cli_stderr.tmp");
    return r;
}

json run_json(const std::string& args, int expected_exit = 0) {
    const auto r = run(args);
    REQUIRE(r.exit_code == expected_exit);
    return json::parse(r.stdout_text);
}

}  // namespace

TEST_CASE("spectrum: dictator coefficients and the bias header") {
    const auto j = run_json("spectrum --family dictator --n 2 --t 1 --m 2");
    CHECK(j.at("bias").at("p") == 0.25);
    CHECK(j.at("bias").at("L") == 2);
    CHECK_FALSE(j.at("bias").contains("dyadic_approx_error"));
    CHECK(j.at("rows").size() == 4);
    CHECK(j.at("rows")[0][2].get<double>() == doctest::Approx(0.25));
    CHECK(j.at("rows")[1][2].get<double>() == doctest::Approx(-0.4330127018922193));
    CHECK(j.at("rows")[2][2].get<double>() == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("spectrum: csv output") {
    const auto r = run("spectrum --family dictator --n 2 --t 1 --m 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.rfind("subset_mask,level,coefficient\n0,0,0.25\n", 0) == 0);
}

TEST_CASE("non-dyadic bias requires --m-max and reports the error made") {
    auto r = run("spectrum --family dictator --n 2 --p 0.3");
    CHECK(r.exit_code == 2);

    const auto j = run_json("spectrum --family dictator --n 2 --p 0.3 --m-max 6");
    CHECK(j.at("bias").contains("dyadic_approx_error"));
    CHECK(j.at("bias").at("m").get<int>() <= 6);
    const double p = j.at("bias").at("p").get<double>();
    const double err = j.at("bias").at("dyadic_approx_error").get<double>();
    CHECK(std::abs(p - 0.3) == doctest::Approx(err).epsilon(1e-12));
}

TEST_CASE("reduce: dictator blow-up truth table") {
    const auto j = run_json("reduce --family dictator --n 1 --t 1 --m 2");
    CHECK(j.at("blocks") == 1);
    CHECK(j.at("width") == 2);
    CHECK(j.at("total_dim") == 2);
    CHECK(j.at("function").at("truth_hex") == "8");  // AND of the two block bits
}

TEST_CASE("reduce: above the dense cap only metadata comes back") {
    const auto j = run_json("reduce --family majority --n 3 --t 1 --m 4 --dense-cap 8");
    CHECK(j.at("total_dim") == 12);
    CHECK(j.at("dense") == false);
    CHECK_FALSE(j.contains("function"));
}

TEST_CASE("verify coeffs: clean sweep for a named family") {
    const auto j = run_json("verify coeffs --family majority --n 3 --t 3 --m 3");
    CHECK(j.at("violations") == 0);
    CHECK(j.at("max_abs_diff").get<double>() < 1e-10);
    CHECK(j.at("rows").size() == 512);
}

TEST_CASE("verify levels and influence exit zero on holding bounds") {
    auto j = run_json("verify levels --family majority --n 3 --t 1 --m 2");
    for (const auto& rep : j.at("reports")) CHECK(rep.at("verdict") == "holds");

    j = run_json("verify influence --family tribes --n 4 --param 2 --t 1 --m 2");
    for (const auto& rep : j.at("reports")) CHECK(rep.at("verdict") == "holds");
    for (const auto& row : j.at("per_coordinate")) CHECK(row.at("holds") == true);
}

TEST_CASE("hyper: grid stays inside the hypothesis and holds") {
    const auto j = run_json("hyper --family majority --n 3 --t 1 --m 2 --delta-grid 5");
    CHECK(j.at("reports").size() == 5);
    for (const auto& rep : j.at("reports")) {
        CHECK(rep.at("verdict") == "holds");
        CHECK_FALSE(rep.contains("note"));
    }
}

TEST_CASE("boundary and correlation reports") {
    auto j = run_json("boundary --family majority --n 3 --t 1 --m 2");
    CHECK(j.at("transfer_checked") == true);
    CHECK(j.at("reports")[0].at("verdict") == "ratio-only");
    CHECK(j.at("reports")[1].at("verdict") == "holds");
    CHECK(j.at("reports")[2].at("verdict") == "holds");

    j = run_json("correlation --family dictator --family-b dictator --n 2 --t 1 --m 2");
    CHECK(j.at("reports")[0].at("lhs").get<double>() == doctest::Approx(0.25 * 0.75));
    CHECK(j.at("reports")[0].at("verdict") == "holds");
    CHECK(j.at("reports")[1].at("verdict") == "ratio-only");
}

TEST_CASE("bks requires d >= 2 and otherwise reports a ratio") {
    auto r = run("bks --family majority --n 3 --t 1 --m 2 --d 1");
    CHECK(r.exit_code == 2);

    const auto j = run_json("bks --family majority --n 3 --t 1 --m 2 --d 2");
    CHECK(j.at("report").at("verdict") == "ratio-only");
}

TEST_CASE("tightness: one row per requested n") {
    const auto j = run_json("tightness --t 1 --m 2 --n-list 10 100 1000");
    CHECK(j.at("rows").size() == 3);
    CHECK(j.at("rows")[2].at("n") == 1000);
    CHECK(j.at("rows")[2].at("boundary_ratio").get<double>() == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("file round trip through --out and --input") {
    // spectrum written to a file, then a function file fed back in
    auto r = run("spectrum --family dictator --n 2 --t 1 --m 2 --out cli_spec.json");
    CHECK(r.exit_code == 0);
    {
        std::ifstream in("cli_spec.json");
        json j;
        in >> j;
        CHECK(j.at("rows").size() == 4);
    }
    std::remove("cli_spec.json");

    {
        std::ofstream out("cli_fn.json");
        out << R"({"n": 2, "truth_hex": "a"})";  // dictator on coordinate 1
    }
    const auto j = run_json("spectrum --input cli_fn.json --t 1 --m 2");
    CHECK(j.at("rows")[1][2].get<double>() == doctest::Approx(-0.4330127018922193));
    std::remove("cli_fn.json");
}

TEST_CASE("config errors exit with code 2") {
    CHECK(run("").exit_code == 2);                                    // no subcommand
    CHECK(run("spectrum --family dictator --n 2").exit_code == 2);    // no bias
    CHECK(run("spectrum --t 1 --m 2").exit_code == 2);                // no function
    CHECK(run("spectrum --family nonsense --n 2 --t 1 --m 2").exit_code == 2);
    CHECK(run("spectrum --family dictator --n 2 --t 3 --m 2").exit_code == 2);  // p > 1/2
    CHECK(run("boundary --family parity --n 2 --t 1 --m 2").exit_code == 2);    // not monotone
}

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hardy/cli_app.hpp"

using hardy::cli::RunConfig;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cfg(const RunConfig& cfg) {
    std::ostringstream out, err;
    int code = hardy::cli::run(cfg, out, err);
    return {code, out.str(), err.str()};
}

CliResult run_args(const std::vector<std::string>& args) {
    std::vector<const char*> argv = {"hardy-approx"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = hardy::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) v.push_back(line);
    return v;
}

} // namespace

TEST_CASE("points command emits a symmetric table") {
    RunConfig cfg;
    cfg.command = "points";
    cfg.weight = "w2";
    cfg.n = 9;
    CliResult res = run_cfg(cfg);
    REQUIRE(res.code == 0);
    auto rows = lines(res.out);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0] == "index,a");
    // first and last points mirror each other
    double a1 = std::stod(rows[1].substr(rows[1].find(',') + 1));
    double a9 = std::stod(rows[9].substr(rows[9].find(',') + 1));
    CHECK(std::abs(a1 + a9) <= 1e-9);
}

TEST_CASE("identical runs give byte-identical CSV") {
    RunConfig cfg;
    cfg.command = "errors";
    cfg.weight = "w1";
    cfg.n_list = {9, 17};
    CliResult r1 = run_cfg(cfg);
    CliResult r2 = run_cfg(cfg);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
}

TEST_CASE("floats carry 17 significant digits") {
    CHECK(hardy::cli::format_float(1.0 / 3.0) == "0.33333333333333331");
    CHECK(hardy::cli::format_float(2.0) == "2");
}

TEST_CASE("unknown weight is a usage error that names the catalog") {
    RunConfig cfg;
    cfg.command = "points";
    cfg.weight = "nope";
    cfg.n = 9;
    CliResult res = run_cfg(cfg);
    CHECK(res.code == 2);
    CHECK(res.err.find("w1 w2 w3 w4 w5 w6 w7") != std::string::npos);
}

TEST_CASE("errors command with the weight itself shows form II exactness") {
    RunConfig cfg;
    cfg.command = "errors";
    cfg.weight = "w1";
    cfg.function = "weight-itself";
    cfg.n_list = {9};
    CliResult res = run_cfg(cfg);
    REQUIRE(res.code == 0);
    auto rows = lines(res.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "n,err_I,err_II,certificate");
    // n,err_I,err_II,certificate -> parse fields 2 and 3
    std::istringstream row(rows[1]);
    std::string field;
    std::getline(row, field, ',');
    std::getline(row, field, ',');
    double err_i = std::stod(field);
    std::getline(row, field, ',');
    double err_ii = std::stod(field);
    std::getline(row, field, ',');
    double cert = std::stod(field);
    CHECK(err_ii <= 1e-12);
    CHECK(err_i <= cert * (1.0 + 1e-6));
}

TEST_CASE("compare-sinc validates the pairing and runs a smoke case") {
    RunConfig bad;
    bad.command = "compare-sinc";
    bad.weight = "w4";
    bad.function = "f5";
    bad.n_list = {9};
    CHECK(run_cfg(bad).code == 2);

    RunConfig plain;
    plain.command = "compare-sinc";
    plain.weight = "w1";
    plain.n_list = {9};
    CHECK(run_cfg(plain).code == 2);

    RunConfig ok;
    ok.command = "compare-sinc";
    ok.weight = "w4";
    ok.n_list = {3};
    CliResult res = run_cfg(ok);
    REQUIRE(res.code == 0);
    auto rows = lines(res.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "n,err_I,err_II,err_sinc");
}

TEST_CASE("bound command reports a passing potential check") {
    RunConfig cfg;
    cfg.command = "bound";
    cfg.weight = "w2";
    cfg.n = 9;
    CliResult res = run_cfg(cfg);
    REQUIRE(res.code == 0);
    auto rows = lines(res.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "n,energy,grad_inf_norm,f_d,certificate,min_potential,bound,pass");
    CHECK(rows[1].back() == '1');
}

TEST_CASE("approx command tabulates the interpolant") {
    RunConfig cfg;
    cfg.command = "approx";
    cfg.weight = "w2";
    cfg.function = "weight-itself";
    cfg.form = "II";
    cfg.n = 9;
    cfg.grid_count = 21;
    CliResult res = run_cfg(cfg);
    REQUIRE(res.code == 0);
    auto rows = lines(res.out);
    REQUIRE(rows.size() == 22);
    CHECK(rows[0] == "x,f,approx,abs_err");
    for (size_t i = 1; i < rows.size(); ++i) {
        auto last_comma = rows[i].rfind(',');
        CHECK(std::stod(rows[i].substr(last_comma + 1)) <= 1e-13);
    }
}

TEST_CASE("diag command prints the report and passes the bound") {
    RunConfig cfg;
    cfg.command = "diag";
    cfg.weight = "w2";
    cfg.n = 9;
    CliResult res = run_cfg(cfg);
    REQUIRE(res.code == 0);
    CHECK(res.out.find("certificate") != std::string::npos);
    CHECK(res.out.find("-> pass") != std::string::npos);
    CHECK(res.out.find("h_sep") != std::string::npos);
}

TEST_CASE("grid overrides reach the evaluation grid") {
    RunConfig cfg;
    cfg.command = "approx";
    cfg.weight = "w2";
    cfg.function = "weight-itself";
    cfg.n = 5;
    cfg.x1 = -2.0;
    cfg.x_last = 2.0;
    cfg.grid_count = 5;
    CliResult res = run_cfg(cfg);
    REQUIRE(res.code == 0);
    auto rows = lines(res.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[1].substr(0, rows[1].find(',')) == "-2");
    CHECK(rows[5].substr(0, rows[5].find(',')) == "2");
}

TEST_CASE("argv parsing, config file, and precedence") {
    CliResult help = run_args({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("points") != std::string::npos);

    CliResult missing = run_args({"points", "--weight", "w2"});
    CHECK(missing.code == 2); // no --n

    CliResult direct = run_args({"points", "--weight", "w2", "--n", "5"});
    CHECK(direct.code == 0);
    CHECK(lines(direct.out).size() == 6);

    const char* path = "cli_test_config.tmp";
    {
        std::ofstream f(path);
        f << "# config for the points run\n";
        f << "weight = w2\n";
        f << "n = 5\n";
    }
    CliResult via_config = run_args({"points", "--config", path});
    CHECK(via_config.code == 0);
    CHECK(via_config.out == direct.out);

    // flags override the config file
    CliResult overridden = run_args({"points", "--config", path, "--n", "7"});
    CHECK(overridden.code == 0);
    CHECK(lines(overridden.out).size() == 8);
    std::remove(path);

    CliResult unknown = run_args({"frobnicate", "--weight", "w2", "--n", "5"});
    CHECK(unknown.code == 2);
}

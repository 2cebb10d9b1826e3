#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "qes/cli.hpp"
#include "qes/spectrum.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Run {
    int rc;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int rc = qes::run_cli(args, out, err);
    return {rc, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("models") {
    Run r = cli({"models"});
    REQUIRE(r.rc == 0);
    json j = json::parse(r.out);
    CHECK(j.size() == 10);
    bool xie = false, pd = false;
    for (const auto& m : j) {
        if (m["id"] == "xie-even")
            for (const auto& p : m["params"]) xie |= p["constraint"].get<std::string>().find("V1 > 0") != std::string::npos;
        if (m["id"] == "perturbed-dshg") pd = m["note"].get<std::string>().find("quadruplet") != std::string::npos;
    }
    CHECK(xie);
    CHECK(pd);
}

TEST_CASE("roots") {
    Run r = cli({"roots", "--model", "xie-even", "--n", "10", "--param", "V1=1", "--param", "V2=-50"});
    REQUIRE(r.rc == 0);
    json j = json::parse(r.out);
    CHECK(j["baseline"] == 3);
    REQUIRE(j["roots"].size() == 11);
    CHECK(j["roots"][0]["scan_value"].get<double>() == doctest::Approx(50.6499).epsilon(1e-5));
    CHECK(j["roots"][1]["scan_value"].get<double>() == doctest::Approx(62.9912).epsilon(1e-5));
    CHECK(j["roots"][0]["double_well"] == true);
    CHECK(j["chain"]["p_nn_zero_flag"] == false);
    CHECK(j["chain"]["min_lambda"].get<double>() > 0);

    r = cli({"roots", "--model", "chen-even", "--n", "7", "--param", "V1=0.09", "--param", "V3=400", "--param", "g=0.25"});
    j = json::parse(r.out);
    REQUIRE(j["roots"].size() == 8);
    CHECK(j["roots"][0]["scan_value"].get<double>() == doctest::Approx(-378.075).epsilon(1e-5));

    r = cli({"roots", "--model", "razavy", "--n", "10", "--param", "xi=0.5", "--param", "alpha=0", "--param", "beta=1",
             "--format", "csv"});
    auto rows = csv(r.out);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0][0] == "index");
    CHECK(std::stod(rows.back()[1]) == doctest::Approx(6.55323).epsilon(1e-5));
}

TEST_CASE("M selects the baseline") {
    Run r = cli({"roots", "--model", "dshg", "--param", "xi=2", "--param", "M=12"});
    REQUIRE(r.rc == 0);
    CHECK(json::parse(r.out)["n"] == 11);
    CHECK(cli({"roots", "--model", "dshg", "--n", "5", "--param", "xi=2", "--param", "M=12"}).rc == 2);
    CHECK(cli({"roots", "--model", "dshg", "--param", "xi=2", "--param", "M=12.5"}).rc == 2);
}

TEST_CASE("JSON numbers round-trip exactly") {
    Run r = cli({"roots", "--model", "dshg", "--n", "11", "--param", "xi=2"});
    json j = json::parse(r.out);
    qes::SpectrumResult s = qes::solve_spectrum(fx::dshg());
    REQUIRE(j["roots"].size() == s.roots.size());
    for (size_t i = 0; i < s.roots.size(); ++i) CHECK(j["roots"][i]["scan_value"].get<double>() == s.roots[i].scan_value);
    // re-emitting parsed output reproduces it
    Run again = cli({"roots", "--model", "dshg", "--n", "11", "--param", "xi=2"});
    CHECK(again.out == r.out);
}

TEST_CASE("constraint tabulation") {
    Run r = cli({"constraint", "--model", "coulomb", "--n", "10", "--param", "lambda=0.5", "--range", "-30:30:6001",
                 "--format", "csv"});
    REQUIRE(r.rc == 0);
    auto rows = csv(r.out);
    CHECK(rows[0] == std::vector<std::string>{"scan_value", "constraint"});
    int changes = 0, last = 0;
    for (size_t i = 1; i < rows.size(); ++i) {
        double v = std::stod(rows[i][1]);
        int sg = v > 0 ? 1 : v < 0 ? -1 : 0;
        if (sg == 0) {
            ++changes;  // exact zero at beta = 0
            last = 0;
            continue;
        }
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    CHECK(changes == 11);

    r = cli({"constraint", "--model", "coulomb", "--n", "10", "--param", "lambda=0.5", "--range", "30:40:50", "--format", "csv"});
    rows = csv(r.out);
    bool same = true;
    for (size_t i = 2; i < rows.size(); ++i) same &= (std::stod(rows[i][1]) > 0) == (std::stod(rows[1][1]) > 0);
    CHECK(same);

    r = cli({"constraint", "--model", "xie-odd", "--n", "10", "--param", "V1=1", "--param", "V2=-50", "--range", "38.82:38.83:3"});
    json j = json::parse(r.out);
    CHECK(j["rows"][0]["constraint"].get<double>() * j["rows"][2]["constraint"].get<double>() < 0);

    CHECK(cli({"constraint", "--model", "coulomb", "--n", "2", "--param", "lambda=0.5", "--range", "1:0:5"}).rc == 2);
}

TEST_CASE("wavefunction") {
    Run r = cli({"wavefunction", "--model", "xie-even", "--n", "10", "--param", "V1=1", "--param", "V2=-50",
                 "--root-index", "0", "--grid-points", "401"});
    REQUIRE(r.rc == 0);
    json j = json::parse(r.out);
    CHECK(j["parity"] == "even");
    CHECK(j["psi"][200].get<double>() != 0);

    r = cli({"wavefunction", "--model", "xie-odd", "--n", "10", "--param", "V1=1", "--param", "V2=-50", "--grid-points",
             "401"});
    j = json::parse(r.out);
    CHECK(j["parity"] == "odd");
    CHECK(j["psi"][200].get<double>() == 0);

    r = cli({"wavefunction", "--model", "coulomb", "--n", "1", "--param", "lambda=0.5", "--root-index", "1", "--format",
             "csv"});
    auto rows = csv(r.out);
    CHECK(rows[0] == std::vector<std::string>{"x", "psi"});
    j = json::parse(cli({"wavefunction", "--model", "coulomb", "--n", "1", "--param", "lambda=0.5", "--root-index", "1"}).out);
    CHECK(j["node_count"] == 1);

    CHECK(cli({"wavefunction", "--model", "coulomb", "--n", "1", "--param", "lambda=0.5", "--root-index", "2"}).rc == 2);
}

TEST_CASE("verify") {
    Run r = cli({"verify", "--model", "dshg", "--param", "xi=2", "--param", "M=12"});
    REQUIRE(r.rc == 0);
    json j = json::parse(r.out);
    REQUIRE(j["reports"].size() == 12);
    for (const auto& rep : j["reports"]) CHECK(rep["abs_gap"].get<double>() < 1e-3);

    r = cli({"verify", "--model", "coulomb", "--n", "0", "--param", "lambda=0.5"});
    REQUIRE(r.rc == 0);
    CHECK(json::parse(r.out)["reports"][0]["residual"].get<double>() < 1e-8);

    // a grid far too coarse to pass
    r = cli({"verify", "--model", "xie-even", "--n", "10", "--param", "V1=1", "--param", "V2=-50", "--points", "200"});
    CHECK(r.rc == 4);
}

TEST_CASE("input errors") {
    CHECK(cli({"roots", "--model", "harmonic", "--n", "1"}).rc == 2);
    CHECK(cli({"roots", "--model", "coulomb", "--n", "1"}).rc == 2);  // lambda missing
    CHECK(cli({"roots", "--model", "coulomb", "--n", "1", "--param", "lambda=0.5", "--param", "mass=1"}).rc == 2);
    CHECK(cli({"roots", "--model", "coulomb", "--n", "1", "--param", "lambda=0.5", "--param", "beta=1"}).rc == 2);
    CHECK(cli({"roots", "--model", "coulomb", "--n", "1", "--param", "lambda=0.5", "--scan-var", "lambda"}).rc == 2);
    CHECK(cli({"roots", "--model", "coulomb", "--n", "1", "--param", "lambda=0.5", "--scan-var", "beta"}).rc == 0);
    CHECK(cli({"roots", "--model", "coulomb", "--n", "1", "--param", "lambda"}).rc == 2);
    CHECK(cli({"roots", "--model", "coulomb", "--n", "-1", "--param", "lambda=0.5"}).rc == 2);
    CHECK(cli({"roots", "--model", "coulomb", "--n", "1", "--param", "lambda=0.5", "--format", "xml"}).rc == 2);
    CHECK(cli({"frobnicate"}).rc == 2);
    CHECK(cli({}).rc == 2);
    // razavy with n inconsistent with an explicit M
    CHECK(cli({"roots", "--model", "razavy", "--n", "4", "--param", "xi=0.5", "--param", "alpha=0", "--param", "beta=1",
               "--param", "M=21"})
              .rc == 2);
}

TEST_CASE("--out writes a file") {
    const std::string path = "qes_cli_test_out.json";
    Run r = cli({"roots", "--model", "coulomb", "--n", "1", "--param", "lambda=0.5", "--out", path});
    REQUIRE(r.rc == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    json j = json::parse(f);
    CHECK(j["roots"].size() == 2);
    std::remove(path.c_str());
}

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using Catch::Approx;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qspin");
    std::ostringstream out, err;
    const int code = qspin::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("concurrence subcommand", "[cli]") {
    const auto r = run({"concurrence", "--alpha", "1", "--eta", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.970725\n");

    const auto more = run({"concurrence", "--alpha", "1", "--eta", "0", "--decimals", "9"});
    CHECK(more.out == "0.970725343\n");

    const auto degenerate = run({"concurrence", "--alpha", "0", "--eta", "0.5"});
    CHECK(degenerate.code == qspin::cli::kDomainError);
    CHECK(degenerate.err.find("degenerate") != std::string::npos);
    CHECK(degenerate.out.empty());
}

TEST_CASE("argument errors exit with 2", "[cli]") {
    CHECK(run({}).code == qspin::cli::kArgumentError);
    CHECK(run({"nope"}).code == qspin::cli::kArgumentError);
    CHECK(run({"concurrence", "--alpha", "abc"}).code == qspin::cli::kArgumentError);
    CHECK(run({"concurrence", "--alpha", "1", "--eta", "3"}).code == qspin::cli::kArgumentError);
    CHECK(run({"thermal", "--beta", "1", "--format", "xml"}).code == qspin::cli::kArgumentError);
    CHECK(run({"boundary"}).code == qspin::cli::kArgumentError);
}

TEST_CASE("boundary subcommand", "[cli]") {
    const auto r = run({"boundary", "--alpha", "1", "--eta", "0.14"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"alpha", "beta_c", "eta"});
    CHECK(rows[1][0] == "1");
    CHECK(rows[1][1].rfind("0.23", 0) == 0);
    CHECK(std::stod(rows[1][1]) == Approx(0.24).margin(0.03));
    CHECK(rows[1][2] == "0.14");

    const auto listed = run({"boundary", "--alpha", "1,2,4"});
    CHECK(parse_csv(listed.out).size() == 4);

    const auto noted = run({"boundary", "--alpha", "1,100000"});
    CHECK(noted.code == 0);
    CHECK(parse_csv(noted.out).size() == 2);
    CHECK(noted.err.find("omitted") != std::string::npos);
}

TEST_CASE("thermal subcommand", "[cli]") {
    const auto r = run({"thermal", "--alpha", "1", "--beta", "1"});
    CHECK(r.code == 0);
    CHECK(std::stod(r.out) == Approx(0.7254308817188415).margin(1e-6));
    CHECK(run({"thermal", "--alpha", "0", "--beta", "5"}).out == "0.000000\n");
}

TEST_CASE("decompose subcommand", "[cli]") {
    const auto r = run({"decompose", "--operator", "Ix"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[1][0] == "0x");
    CHECK(std::stod(rows[1][1]) == Approx(0.8660254037844386).margin(1e-9));
    CHECK(rows[2][0] == "xx");
    CHECK(rows[3][0] == "yy");
    CHECK(run({"decompose", "--operator", "Q"}).code == qspin::cli::kArgumentError);
}

TEST_CASE("spectrum, ground and report subcommands", "[cli]") {
    const auto spectrum = parse_csv(run({"spectrum", "--alpha", "1", "--eta", "0"}).out);
    REQUIRE(spectrum.size() == 5);
    CHECK(spectrum[0] == std::vector<std::string>{"level", "numeric", "analytic"});
    CHECK(std::stod(spectrum[1][1]) == Approx(-4.10555128).margin(1e-8));
    CHECK(std::stod(spectrum[1][2]) == Approx(-4.10555128).margin(1e-8));
    const auto exact = parse_csv(run({"spectrum", "--alpha", "1", "--eta", "0.3", "--mode", "exact"}).out);
    CHECK(exact[0].size() == 2);

    const auto ground = parse_csv(run({"ground", "--alpha", "1", "--eta", "0"}).out);
    REQUIRE(ground.size() == 2);
    CHECK(std::stod(ground[1][0]) == Approx(0.085549).margin(1e-6));
    CHECK(std::stod(ground[1][5]) == Approx(0.970725).margin(1e-6));

    const auto report = run({"report", "--alpha", "1", "--eta", "0.5", "--format", "json"});
    REQUIRE(report.code == 0);
    const auto j = nlohmann::json::parse(report.out);
    double gauge = -1.0;
    for (const auto& row : j)
        if (row["field"] == "eq12_gauge_overlap") gauge = row["value"].get<double>();
    CHECK(gauge == Approx(1.0).margin(1e-8));
}

TEST_CASE("cu63 subcommand", "[cli]") {
    const auto rows = parse_csv(run({"cu63", "--beta", "0.24", "--eqq", "62.8"}).out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1][0] == "cyclic");
    CHECK(std::stod(rows[1][1]) == Approx(1.0465016e-3).epsilon(1e-7));
    CHECK(rows[2][0] == "angular");
}

TEST_CASE("tables reparse at emitted precision", "[cli][property]") {
    const auto csv = run({"sweep-thermal", "--alpha-min", "0", "--alpha-max", "3", "--alpha-count", "4",
                          "--beta-min", "0.5", "--beta-max", "4", "--beta-count", "3", "--threads", "3"});
    REQUIRE(csv.code == 0);
    const auto rows = parse_csv(csv.out);
    REQUIRE(rows.size() == 1 + 4 * 3);
    CHECK(rows[0] == std::vector<std::string>{"alpha", "beta", "eta", "C_T"});

    const auto json = run({"sweep-thermal", "--alpha-min", "0", "--alpha-max", "3", "--alpha-count", "4",
                           "--beta-min", "0.5", "--beta-max", "4", "--beta-count", "3", "--format", "json"});
    const auto j = nlohmann::json::parse(json.out);
    REQUIRE(j.size() == 12);
    const char* keys[] = {"alpha", "beta", "eta", "C_T"};
    for (std::size_t r = 0; r < 12; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            const double from_csv = std::stod(rows[r + 1][c]);
            // Both formats carry the same 9-significant-digit value.
            REQUIRE(from_csv == j[r][keys[c]].get<double>());
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.9g", from_csv);
            REQUIRE(std::string(buf) == rows[r + 1][c]);
        }

    const auto fewer = parse_csv(run({"sweep-pure", "--alpha-min", "1", "--alpha-max", "2", "--alpha-count",
                                      "2", "--eta-count", "2", "--precision", "3"})
                                     .out);
    REQUIRE(fewer.size() == 5);
    CHECK(fewer[0] == std::vector<std::string>{"alpha", "eta", "C"});
    CHECK(fewer[1][2] == "0.971");
}

TEST_CASE("presets and file output", "[cli]") {
    const auto path = std::string("qspin_cli_test_fig1.csv");
    const auto r = run({"sweep-pure", "--preset", "fig1", "--output", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(parse_csv(ss.str()).size() == 1 + 100 * 11);
    std::remove(path.c_str());

    const auto fig5 = parse_csv(run({"sweep-thermal", "--preset", "fig5"}).out);
    CHECK(fig5.size() == 1 + 4 * 81);
}

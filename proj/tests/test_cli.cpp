#include "doctest.h"

#include "mubound/cli.hpp"
#include "mubound/mu_bound.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mubound;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "mubound");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("mu record") {
    Run r = run({"mu", "--theta", "17/30", "--mode", "unconditional", "--format", "json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == "mubound.mu");
    CHECK(j["version"] == 1);
    CHECK(j["theta"] == "17/30");
    CHECK(j["active"] == "L4");
    CHECK(std::abs(j["upper"].get<double>() - 7.0 / 12) <= 1e-9);
    CHECK(j["witness_exact"] == "7/10");
    CHECK(j["upper"].get<double>() == mu_upper(Rational(17, 30), HypothesisMode::Unconditional).upper);

    Run e = run({"mu", "--theta", "0.7", "--mode", "rh", "--format", "json"});
    CHECK(e.code == 0);
    json je = json::parse(e.out);
    CHECK(je["upper"] == "-inf");
    CHECK(je["active"] == "EMPTY");

    Run l2 = run({"--format", "json", "mu", "--theta", "2/5", "--mode", "lh", "--l2-only"});
    REQUIRE(l2.code == 0);
    CHECK(json::parse(l2.out)["refined"] == false);
    CHECK(std::abs(json::parse(l2.out)["upper"].get<double>() - 0.8) <= 1e-9);
}

TEST_CASE("eval commands") {
    Run a = run({"eval-a", "--sigma", "7/10", "--format", "json"});
    REQUIRE(a.code == 0);
    json ja = json::parse(a.out);
    CHECK(ja["value"] == "30/13");
    CHECK(ja["reference"] == "Guth-Maynard");
    Run s = run({"eval-astar", "--sigma", "0.9", "--format", "json"});
    REQUIRE(s.code == 0);
    CHECK(json::parse(s.out)["value"] == "9/2");
    Run j = run({"eval-a", "--sigma", "59/60", "--format", "json"});
    CHECK(json::parse(j.out)["value"] == "9/13");
    Run rh = run({"eval-a", "--sigma", "0.6", "--mode", "RH", "--format", "json"});
    CHECK(json::parse(rh.out)["value"] == "-inf");
}

TEST_CASE("curve csv contract and round trip") {
    Run r = run({"curve", "--theta-min", "0.01", "--theta-max", "0.99", "--steps", "98", "--format", "csv"});
    REQUIRE(r.code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 100);
    CHECK(r.out.substr(0, r.out.find('\n')) == "theta,mu_upper,gap_exponent");
    auto pts = mu_curve(Rational(1, 100), Rational(99, 100), 98, HypothesisMode::Unconditional);
    double prev = -1;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 3);
        double theta = std::stod(rows[i][0]);
        CHECK(theta > prev);
        prev = theta;
        CHECK(theta == pts[i - 1].theta.to_double());
        if (rows[i][1] == "-inf") {
            CHECK(pts[i - 1].bound.empty());
            CHECK(rows[i][2] == "-inf");
        } else {
            CHECK(std::stod(rows[i][1]) == pts[i - 1].bound.upper);
            CHECK(std::stod(rows[i][2]) == pts[i - 1].gap_exponent);
        }
    }
}

TEST_CASE("curve json and file output") {
    auto path = (std::filesystem::temp_directory_path() / "mubound_test_curve.json").string();
    Run r = run({"--threads", "2", "curve", "--theta-min", "1/2", "--theta-max", "0.55", "--steps", "5", "--format",
                 "json", "--out", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    json j = json::parse(in);
    CHECK(j["schema"] == "mubound.curve");
    CHECK(j["points"].size() == 6);
    CHECK(j["points"][0]["theta_exact"] == "1/2");
    std::filesystem::remove(path);
}

TEST_CASE("output is deterministic") {
    std::vector<std::string> args{"curve", "--theta-min", "0.1", "--theta-max", "0.9", "--steps", "30", "--mode", "dh"};
    Run a = run(args), b = run(args);
    auto threaded = args;
    threaded.insert(threaded.begin(), {"--threads", "3"});
    Run c = run(threaded);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    Run v1 = run({"verify", "--filter", "rh-", "--format", "json"});
    Run v2 = run({"verify", "--filter", "rh-", "--format", "json"});
    CHECK(v1.code == 0);
    CHECK(v1.out == v2.out);
}

TEST_CASE("table output") {
    Run d = run({"table-dump", "--which", "astar", "--mode", "lh", "--format", "json", "--samples", "50"});
    REQUIRE(d.code == 0);
    json j = json::parse(d.out);
    CHECK(j["samples"].size() == 50);
    CHECK(j["pieces"][0]["lo"] == "0");
    Run rh = run({"table-dump", "--which", "a", "--mode", "rh", "--format", "csv", "--samples", "10"});
    CHECK(rh.out.find("-inf") != std::string::npos);
    Run t = run({"table-export"});
    CHECK(t.code == 0);
    CHECK(t.out == transcription());
}

TEST_CASE("verify exit status") {
    Run ok = run({"verify", "--filter", "mu-17"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("mu-17-30") != std::string::npos);
    Run json_report = run({"verify", "--filter", "psi-", "--format", "json"});
    json j = json::parse(json_report.out);
    CHECK(j["schema"] == "mubound.claims");
    // the explicit-formula claim cannot hold with a dataset this short
    auto path = (std::filesystem::temp_directory_path() / "mubound_test_short.txt").string();
    std::ofstream(path) << "14.134725142\n21.022039639\n";
    Run bad = run({"verify", "--filter", "explicit-formula", "--zeros", path});
    CHECK(bad.code == 5);
}

TEST_CASE("empirical commands") {
    Run s = run({"empirical", "sieve", "--limit", "1000", "--x", "10", "--y", "10", "--format", "json"});
    REQUIRE(s.code == 0);
    json j = json::parse(s.out);
    CHECK(j["interval_sum"].get<double>() == doctest::Approx(std::log(11.0 * 13 * 2 * 17 * 19)));
    CHECK(!j.contains("seconds"));

    Run z = run({"empirical", "zeros-check", "--T", "100", "--format", "json"});
    REQUIRE(z.code == 0);
    CHECK(json::parse(z.out)["count"] == 29);

    Run e = run({"empirical", "energy", "--T", "30", "--format", "json"});
    CHECK(json::parse(e.out)["energy"].get<std::uint64_t>() > 0);

    Run x = run({"empirical", "exceptional", "--X", "10000", "--theta", "0.7", "--delta", "0.5", "--format", "csv"});
    REQUIRE(x.code == 0);
    auto rows = csv_rows(x.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][5] == "measure_estimate");
    CHECK(rows[1][5] == "0");

    Run ef = run({"empirical", "explicit-formula", "--x", "1000", "--T", "1000", "--format", "json"});
    json jf = json::parse(ef.out);
    CHECK(std::abs(jf["psi_explicit"].get<double>() - jf["psi_sieve"].get<double>()) <= 5);

    Run m = run({"empirical", "moments", "--X", "100000", "--theta", "3/5", "--samples", "100", "--format", "json"});
    CHECK(json::parse(m.out)["mean"].get<double>() > 0);
}

TEST_CASE("zeros path from the environment") {
    auto path = (std::filesystem::temp_directory_path() / "mubound_test_env.txt").string();
    std::ofstream(path) << "14.13\n";
    setenv("MUBOUND_ZEROS", path.c_str(), 1);
    Run e = run({"empirical", "energy", "--T", "100", "--format", "json"});
    unsetenv("MUBOUND_ZEROS");
    REQUIRE(e.code == 0);
    CHECK(json::parse(e.out)["energy"] == 6);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"mu"}).code == 1);
    CHECK(run({"mu", "--theta", "1/0"}).code == 1);
    CHECK(run({"mu", "--theta", "1/3", "--mode", "gh"}).code == 1);
    CHECK(run({"--format", "xml", "mu", "--theta", "1/3"}).code == 1);
    CHECK(run({"mu", "--theta", "3/2"}).code == 2);
    CHECK(run({"eval-a", "--sigma", "1"}).code == 2);
    CHECK(run({"--sigma-cap-n", "5", "eval-a", "--sigma", "1/2"}).code == 2);
    CHECK(run({"empirical", "sieve", "--limit", "5000", "--guard", "100"}).code == 2);
    CHECK(run({"--tol", "1/1000000000000000000000", "mu", "--theta", "17/30"}).code == 3);
    CHECK(run({"empirical", "energy", "--zeros", "/nonexistent/z.txt"}).code == 4);
    auto bad = (std::filesystem::temp_directory_path() / "mubound_test_badzeros.txt").string();
    std::ofstream(bad) << "14.1\nfoo\n";
    Run b = run({"empirical", "zeros-check", "--zeros", bad});
    CHECK(b.code == 4);
    CHECK(b.err.find(":2") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

}  // TEST_SUITE

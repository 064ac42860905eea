// Integration tests for the command-line interface: exit-code contract,
// output formats, determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "icb/serialize.hpp"
#include "suites.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(ICB_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string strip_wall_time(const std::string& s) {
    std::istringstream is(s);
    std::ostringstream os;
    std::string line;
    while (std::getline(is, line)) {
        if (line.find("\"wall_time\"") == std::string::npos) os << line << "\n";
    }
    return os.str();
}

}  // namespace

TEST_CASE("verify: clean suite exits 0 with an empty failure list") {
    const auto res = run("verify --suite qstep --max-d 10 --jobs 2");
    CHECK(res.exit_code == 0);
    const auto j = icb::ordered_json::parse(res.out);
    CHECK(j.at("suite") == "qstep");
    CHECK(j.at("params").at("max_d") == "10");
    CHECK(j.at("checks") == 66);  // sum over d of (d+1)
    CHECK(j.at("failures").empty());
    CHECK(j.contains("wall_time"));
}

TEST_CASE("verify: unknown suite exits 2") {
    CHECK(run("verify --suite nonsense").exit_code == 2);
    CHECK(run("verify").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("verify: reports are byte-stable modulo wall time") {
    const auto a = run("verify --suite basis --max-d 6");
    const auto b = run("verify --suite basis --max-d 6 --jobs 3");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(strip_wall_time(a.out) == strip_wall_time(b.out));
}

TEST_CASE("verify: lemma-a with rewrite logging") {
    const std::string log_path = "cli_test_rewrites.jsonl";
    const std::string cmd = std::string(ICB_CLI_PATH) +
                            " verify --suite lemma-a --max-n 2 --jobs 1 --log-rewrites 2>" +
                            log_path + " >/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream is(log_path);
    REQUIRE(is.good());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto j = icb::ordered_json::parse(line);
        CHECK(j.contains("step"));
        CHECK(j.contains("rule"));
        CHECK(j.contains("position"));
        CHECK(j.contains("before"));
        CHECK(j.contains("after"));
        ++lines;
    }
    CHECK(lines > 0);
    std::remove(log_path.c_str());
}

TEST_CASE("verify: --out writes the report to a file") {
    const std::string out_path = "cli_test_report.json";
    const auto res = run("verify --suite bar --max-d 4 --out " + out_path);
    CHECK(res.exit_code == 0);
    CHECK(res.out.empty());
    std::ifstream is(out_path);
    REQUIRE(is.good());
    std::stringstream ss;
    ss << is.rdbuf();
    const auto j = icb::ordered_json::parse(ss.str());
    CHECK(j.at("suite") == "bar");
    CHECK(j.at("failures").empty());
    std::remove(out_path.c_str());
}

TEST_CASE("table: basis lists") {
    {
        const auto res = run("table --kind cb --d 2 --format json");
        CHECK(res.exit_code == 0);
        const auto j = icb::ordered_json::parse(res.out);
        CHECK(j.at("basis").size() == 3);
    }
    {
        const auto res = run("table --kind cb --d 5");
        CHECK(res.exit_code == 0);
        const auto j = icb::ordered_json::parse(res.out);
        REQUIRE(j.at("basis").size() == 6);
        // degrees 0..5, one element each
        std::vector<bool> seen(6, false);
        for (const auto& b : j.at("basis")) {
            const auto poly = icb::tpoly_from_json(b.at("poly"));
            seen[static_cast<std::size_t>(poly.degree())] = true;
        }
        for (bool s : seen) CHECK(s);
    }
}

TEST_CASE("table: structure constants") {
    {
        const auto res = run("table --kind structure --d 0 --format csv");
        CHECK(res.exit_code == 0);
        CHECK(res.out ==
              "eps_i,deg_i,eps_j,deg_j,eps_k,deg_k,coefficient\n"
              "0,0,0,0,0,0,\"1\"\n"
              "1,0,1,0,1,0,\"1\"\n");
    }
    {
        const auto res = run("table --kind structure --d 1");
        CHECK(res.exit_code == 0);
        const auto j = icb::ordered_json::parse(res.out);
        CHECK(j.at("rows").size() > 0);
    }
    CHECK(run("table --kind bogus --d 1").exit_code == 2);
    CHECK(run("table --kind cb --d 2 --format yaml").exit_code == 2);
    CHECK(run("table --kind cb").exit_code == 2);
}

TEST_CASE("transfer: moves classes down the tower") {
    // p1(2) = t^2/[[2]] at level 3 maps to p0(1) = t at level 1
    const std::string poly =
        R"('[0,0,{"num":[[0,"1"]],"den":[[-1,"1"],[1,"1"]]}]')";
    const auto res = run("transfer --from 3 --to 1 --poly " + poly);
    CHECK(res.exit_code == 0);
    const auto j = icb::ordered_json::parse(res.out);
    CHECK(j.at("level") == 1);
    CHECK(icb::tpoly_from_json(j.at("poly")) == icb::TPoly::t());
}

TEST_CASE("transfer: unit is fixed and vanishing powers vanish") {
    {
        const auto res = run("transfer --from 6 --to 2 --poly '[1]'");
        CHECK(res.exit_code == 0);
        const auto j = icb::ordered_json::parse(res.out);
        CHECK(icb::tpoly_from_json(j.at("poly")) == icb::TPoly(1));
    }
    {
        // p0(4) dies at level 0
        std::ostringstream poly;
        poly << "'" << icb::to_json(icb::p0(4)).dump() << "'";
        const auto res = run("transfer --from 4 --to 0 --poly " + poly.str());
        CHECK(res.exit_code == 0);
        const auto j = icb::ordered_json::parse(res.out);
        CHECK(icb::tpoly_from_json(j.at("poly")).is_zero());
    }
}

TEST_CASE("transfer: parity and ordering violations exit 2") {
    CHECK(run("transfer --from 3 --to 2 --poly '[1]'").exit_code == 2);
    CHECK(run("transfer --from 2 --to 4 --poly '[1]'").exit_code == 2);
    CHECK(run("transfer --from 2 --to 2 --poly '[1]'").exit_code == 2);
    CHECK(run("transfer --from 4 --to 2 --poly 'not json'").exit_code == 2);
}

TEST_CASE("exit-code mapping for failing reports") {
    icb::suites::SuiteReport clean;
    CHECK(icb::suites::exit_code({clean}) == 0);
    icb::suites::SuiteReport bad;
    bad.failures.push_back({"x", "", "", ""});
    CHECK(icb::suites::exit_code({clean, bad}) == 1);
}

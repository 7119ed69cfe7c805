// End-to-end exercise of the command-line driver: exit-code contract,
// report content, and byte determinism. The binary path arrives in the
// COXSPIN_CLI environment variable.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string cli() {
    const char* p = std::getenv("COXSPIN_CLI");
    REQUIRE(p != nullptr);
    return p;
}

std::filesystem::path tmpdir() {
    const char* p = std::getenv("COXSPIN_TMP");
    REQUIRE(p != nullptr);
    std::filesystem::create_directories(p);
    return p;
}

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    auto out = tmpdir() / "stdout.txt";
    std::string cmd = cli() + " " + args + " > " + out.string() + " 2>/dev/null";
    int raw = std::system(cmd.c_str());
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    return {WEXITSTATUS(raw), ss.str()};
}

}  // namespace

TEST_CASE("exit code contract") {
    CHECK(run("orbit --n 6").exit_code == 0);
    CHECK(run("definitely-not-a-command").exit_code == 2);
    CHECK(run("main-theorem --no-such-flag").exit_code == 2);
    CHECK(run("okada --n 5 --seed notanumber").exit_code == 2);
}

TEST_CASE("reports carry the headline numbers") {
    auto orbit = run("orbit --n 6");
    REQUIRE(orbit.exit_code == 0);
    auto j = nlohmann::json::parse(orbit.stdout_text);
    CHECK(j.at("orbit_size") == 32);

    auto ii = run("initial-ideal --n 6");
    REQUIRE(ii.exit_code == 0);
    auto ji = nlohmann::json::parse(ii.stdout_text);
    CHECK(ji.at("incomparable_pairs") == 66);
    CHECK(ji.at("oracle_total_dim") == 66);
}

TEST_CASE("main theorem run from the command line") {
    auto res = run("main-theorem --n 5 --seed 7");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.stdout_text);
    CHECK(j.at("verdict") == true);
    CHECK(j.at("translates_used") == 2);
}

TEST_CASE("determinism: identical runs give identical reports modulo timings") {
    auto a = nlohmann::json::parse(run("main-theorem --n 5 --seed 3").stdout_text);
    auto b = nlohmann::json::parse(run("main-theorem --n 5 --seed 3").stdout_text);
    auto c = nlohmann::json::parse(run("main-theorem --n 5 --seed 3 --jobs 4").stdout_text);
    a.erase("timings_ms");
    b.erase("timings_ms");
    c.erase("timings_ms");
    CHECK(a.dump() == b.dump());
    CHECK(a.dump() == c.dump());  // worker count must not affect the report
}

TEST_CASE("malformed json input") {
    auto points = tmpdir() / "broken.json";
    {
        std::ofstream f(points);
        f << "{ not json";
    }
    CHECK(run("wick --n 5 --points " + points.string()).exit_code == 2);
}

TEST_CASE("explicit points file") {
    auto points = tmpdir() / "points.json";
    {
        std::ofstream f(points);
        f << R"({"n": 5, "q": ["2", "3", "5"]})";
    }
    auto res = run("wick --n 5 --seed 2 --points " + points.string());
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.stdout_text);
    CHECK(j.at("config").at("q")[0] == "2");

    {
        std::ofstream f(points);
        f << R"({"n": 5, "q": ["2", "2", "5"]})";  // repeated coordinate
    }
    CHECK(run("wick --n 5 --points " + points.string()).exit_code == 2);
}

TEST_CASE("output file option") {
    auto outfile = tmpdir() / "report.json";
    std::filesystem::remove(outfile);
    auto res = run("tree-leading --n 5 --out " + outfile.string());
    CHECK(res.exit_code == 0);
    std::ifstream f(outfile);
    REQUIRE(f.good());
    auto j = nlohmann::json::parse(f);
    CHECK(j.at("trees") == 15);
    CHECK(j.at("all_match") == true);
}

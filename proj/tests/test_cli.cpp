#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef KNOTGAUSS_CLI_PATH
#define KNOTGAUSS_CLI_PATH "knotgauss"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(KNOTGAUSS_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

nlohmann::json payload_of(const RunResult& r) {
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["schema_version"] == "1");
    return j["payload"];
}

}  // namespace

TEST_CASE("compute emits the documented invariants") {
    auto r = run("compute --code \"O1+U2+O3+U1+O2+U3+\"");
    CHECK(r.exit_code == 0);
    auto p = payload_of(r);
    CHECK(p["v2"] == 1);
    CHECK(p["v3"] == 4);
    CHECK(p["lk"] == 3);
    CHECK(p["genus"] == 1);
    CHECK(p["status"] == "Positive");

    auto neg = run("compute --code \"O1-U1-\"");
    CHECK(neg.exit_code == 0);
    auto pn = payload_of(neg);
    CHECK(pn["v2"] == 0);
    CHECK(pn["v3"] == 0);
    CHECK(pn["status"] == "AlmostPositive");
}

TEST_CASE("pd input goes through the same pipeline") {
    auto r = run("compute --code \"X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\" --format pd");
    CHECK(r.exit_code == 0);
    CHECK(payload_of(r)["code"] == "O1+U2+O3+U1+O2+U3+");
}

TEST_CASE("verify exits zero on passing theorems") {
    auto r = run("verify --theorem lm2 --max-crossings 7");
    CHECK(r.exit_code == 0);
    auto p = payload_of(r);
    CHECK(p["pass"] == true);
    CHECK(p["counterexamples"].empty());
}

TEST_CASE("sampled property runs are seeded") {
    auto r = run("verify --property loop-sigma --samples 50 --seed 7 --max-crossings 6");
    CHECK(r.exit_code == 0);
    auto p = payload_of(r);
    CHECK(p["violations"] == 0);
    CHECK(p["samples"] == 50);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("compute --no-such-flag").exit_code == 2);
    CHECK(run("compute --code \"O1+U2+\"").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("move --code \"O1+U1+\" --op frob").exit_code == 2);
}

TEST_CASE("identical invocations give identical payloads") {
    auto a = payload_of(run("enumerate --crossings 3..5 --filter positive,connected "
                            "--emit codes"));
    auto b = payload_of(run("enumerate --crossings 3..5 --filter positive,connected "
                            "--emit codes"));
    CHECK(a == b);
}

TEST_CASE("csv emission has the documented columns") {
    auto r = run("enumerate --crossings 3..3 --filter positive,connected,reduced "
                 "--emit csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("code,c,s,g,lk,v2,v3,writhe,status\n", 0) == 0);
    CHECK(r.out.find("O1+U2+O3+U1+O2+U3+,3,2,1,3,1,4,3,Positive") != std::string::npos);
}

TEST_CASE("make and move subcommands") {
    auto p = payload_of(run("make --pretzel 3,5,7"));
    CHECK(p["invariants"]["v2"] == 18);

    auto t = payload_of(run("make --twist 5 --variant apu"));
    CHECK(t["invariants"]["v2"] == 0);
    CHECK(t["invariants"]["status"] == "AlmostPositive");

    auto m = payload_of(run("move --op t2bar --at 1 --code \"O1+U1+\""));
    CHECK(m["invariants"]["crossings"] == 3);

    auto red = payload_of(run("move --op reduce --code \"O1+U1+O2+U2+\""));
    CHECK(red["invariants"]["crossings"] == 0);
}

TEST_CASE("oracle identity suites run from the cli") {
    auto r = run("oracle --check v2-conway --max-crossings 4");
    CHECK(r.exit_code == 0);
    auto p = payload_of(r);
    CHECK(p["failures"] == 0);
    CHECK(p["diagrams_checked"] > 100);

    auto j = payload_of(run("oracle --code \"O1+U2+O3+U1+O2+U3+\" --emit jones,det"));
    CHECK(j["jones"] == "-t^4 + t^3 + t");
    CHECK(j["det_signed"] == -3);
}

TEST_CASE("fixture lookup honours KNOTGAUSS_FIXTURES") {
    std::string cmd = "KNOTGAUSS_FIXTURES=" + std::string(KNOTGAUSS_FIXTURES_DIR) +
                      " " + KNOTGAUSS_CLI_PATH +
                      " compute --knot 8_19 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    CHECK(WEXITSTATUS(status) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["payload"]["v2"] == 5);
    CHECK(j["payload"]["crossings"] == 8);
}

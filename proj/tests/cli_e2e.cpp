// End-to-end exercise of the command-line tool: exit-code contract, report
// shapes, and determinism across worker counts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

#ifndef GPI_CLI_PATH
#error "GPI_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(GPI_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace

TEST_CASE("check: identities exit 0, non-identities exit 1") {
    CHECK(run_cli("check \"[y1,y2]\"").exit_code == 0);
    CHECK(run_cli("check \"s3(z1,z2,z3)\"").exit_code == 0);
    CHECK(run_cli("check \"z1*y1*z2 + z2*y1*z1\"").exit_code == 0);

    auto r = run_cli("check \"y1*z1\"");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("NOT an identity") != std::string::npos);
}

TEST_CASE("parse and usage errors exit 2") {
    CHECK(run_cli("check \"y1*+\"").exit_code == 2);
    CHECK(run_cli("check \"w1\"").exit_code == 2);
    CHECK(run_cli("check \"[z1]\"").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("identities --multidegree x:1").exit_code == 2);
    CHECK(run_cli("reduce \"y1*z1*y2\"").exit_code == 2); // two even names
}

TEST_CASE("resource caps exit 3") {
    CHECK(run_cli("span --multidegree y:3,z:3").exit_code == 3);
    CHECK(run_cli("identities --multidegree z:6").exit_code == 3);
    CHECK(run_cli("theorem --max-degree 99").exit_code == 3);
}

TEST_CASE("verify-catalog verifies everything") {
    auto r = run_cli("verify-catalog");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("catalog verified") != std::string::npos);
    CHECK(r.output.find("FAILED") == std::string::npos);
}

TEST_CASE("identities report as JSON") {
    auto r = run_cli("--json identities --multidegree y:2,z:1");
    REQUIRE(r.exit_code == 0);
    auto o = nlohmann::json::parse(r.output);
    CHECK(o["dimension"] == 4);
    CHECK(o["word_count"] == 6);
    CHECK(o["multidegree"]["y1"] == 1);
    CHECK(o["basis"].size() == 4);
}

TEST_CASE("span report schema") {
    auto r = run_cli("--json span --multidegree y:2,z:1");
    REQUIRE(r.exit_code == 0);
    auto o = nlohmann::json::parse(r.output);
    CHECK(o["word_count"] == 6);
    CHECK(o["identity_dim"] == 4);
    CHECK(o["consequence_dim"] == 4);
    CHECK(o["equal"] == true);
    CHECK(o["witness"].is_null());
}

TEST_CASE("eval emits the matrix as strings") {
    auto r = run_cli("--json eval \"y1*z1\"");
    REQUIRE(r.exit_code == 0);
    auto o = nlohmann::json::parse(r.output);
    CHECK(o["zero"] == false);
    CHECK(o["matrix"][1][0] == "-4*a1*c1");
    CHECK(o["matrix"][2][0] == "-4*a1*b1");
    CHECK(o["matrix"][0][0] == "0");

    auto z = run_cli("--json eval \"[y1,y2]\"");
    auto oz = nlohmann::json::parse(z.output);
    CHECK(oz["zero"] == true);
}

TEST_CASE("theorem runs and is deterministic across worker counts") {
    auto one = run_cli("theorem --max-degree 3");
    REQUIRE(one.exit_code == 0);
    CHECK(one.output.find("MISMATCH") == std::string::npos);
    auto two = run_cli("theorem --max-degree 3 --threads 2");
    REQUIRE(two.exit_code == 0);
    CHECK(one.output == two.output);

    auto j = run_cli("--json theorem --max-degree 2");
    auto o = nlohmann::json::parse(j.output);
    CHECK(o["all_equal"] == true);
    CHECK(o["reports"].size() == 5);
}

TEST_CASE("reduce prints a trace and the canonical form") {
    auto r = run_cli("reduce \"z1*y1*z1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("reduced form: 0") != std::string::npos);

    auto moved = run_cli("--json reduce \"z1^3*y1^2*z1\"");
    REQUIRE(moved.exit_code == 0);
    auto o = nlohmann::json::parse(moved.output);
    CHECK(o["canonical"] == true);
    CHECK(o["result"] == "z1*y1*y1*z1*z1*z1");
    CHECK(o["words"][0]["trace"].size() > 0);
}

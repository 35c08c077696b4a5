#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <vector>
#include <sys/wait.h>

namespace {

struct CommandResult {
    int exitCode = -1;
    std::string output;
};

CommandResult run(const std::string& args) {
    const std::string command = std::string(GUE_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    std::array<char, 4096> buffer;
    while (std::fgets(buffer.data(), static_cast<int>(buffer.size()), pipe) != nullptr)
        result.output += buffer.data();
    const int status = pclose(pipe);
    result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("moment command prints canonical polynomials") {
    CHECK(run("moment --ks 2,2").output == "v^4 + 2*v^2\n");
    CHECK(run("moment --ks 4 --gamma-form").output == "2*v^3 + g*v\n");
    CHECK(run("moment --ks 3").output == "0\n");
    CHECK(run("moment --ks 4 --eval 2").output == "2*v^3 + v\n18\n");
    CHECK(run("moment --ks 2,2 --method enumeration").output == "v^4 + 2*v^2\n");
    CHECK(run("moment --ks 0").output == "v\n");
}

TEST_CASE("moment csv output lists terms in canonical order") {
    CHECK(run("moment --ks 4 --format csv").output == "3,2\n1,1\n");
    CHECK(run("moment --ks 4 --format csv --gamma-form --header").output ==
          "g,v,c\n0,3,2\n1,1,1\n");
    CHECK(run("moment --ks 4 --format csv --eval 2").output == "3,2\n1,1\nvalue,,18\n");
}

TEST_CASE("eta command prints sorted CSV rows with a total") {
    CHECK(run("eta --ks 4").output == "0,3,2\n1,1,1\ntotal,,3\n");
    CHECK(run("eta --ks 2").output == "0,2,1\ntotal,,1\n");
    CHECK(run("eta --ks 1,1").output == "1,1,1\ntotal,,1\n");
    CHECK(run("eta --ks 4 --header").output == "g,b,count\n0,3,2\n1,1,1\ntotal,,3\n");
}

TEST_CASE("asympt command covers leading, subleading, and degree") {
    CHECK(run("asympt --evens 2 --which leading").output == "2\n");
    CHECK(run("asympt --odds 1,1 --which leading").output == "12\n");
    CHECK(run("asympt --evens 5,21 --odds 7,21,23,31 --which leading").output ==
          "25081904924688737847061935982290890890757044619026344345600000\n");
    CHECK(run("asympt --evens 2 --which subleading").output == "1\n");
    CHECK(run("asympt --evens 1,1 --which degree").output == "4\n");
    CHECK(run("asympt --odds 1,1 --which subleading").exitCode == 2);
    CHECK(run("asympt --odds 1 --which leading").exitCode == 2);
}

TEST_CASE("corr-limit command reports the case and the symbolic value") {
    const auto oddPair = run("corr-limit --f-odds 0 --g-odds 1");
    CHECK(oddPair.exitCode == 0);
    CHECK(oddPair.output.find("exact: sqrt(3)/2") != std::string::npos);
    CHECK(oddPair.output.find("case: 2") != std::string::npos);

    const auto evenPair = run("corr-limit --f-evens 1 --g-evens 2");
    CHECK(evenPair.output.find("exact: 2*sqrt(2)/3") != std::string::npos);
    CHECK(evenPair.output.find("case: 5") != std::string::npos);

    const auto mixed = run("corr-limit --f-odds 0 --g-evens 1");
    CHECK(mixed.output.find("exact: 0") != std::string::npos);
    CHECK(mixed.output.find("case: 1") != std::string::npos);

    const auto undefined = run("corr-limit --f-evens 0 --g-odds 1");
    CHECK(undefined.exitCode == 4);
    CHECK(undefined.output == "undefined\n");
}

TEST_CASE("mc-check command passes its battery and reports the exact value") {
    const auto pass = run("mc-check --ks 2 --n 8 --samples 20000 --seed 42 --sigma 4");
    CHECK(pass.exitCode == 0);
    CHECK(pass.output.find("exact: 64") != std::string::npos);
    CHECK(pass.output.find("result: PASS") != std::string::npos);

    const auto odd = run("mc-check --ks 3 --n 4 --samples 20000 --seed 42 --sigma 4");
    CHECK(odd.exitCode == 0);
    CHECK(odd.output.find("exact: 0") != std::string::npos);
}

TEST_CASE("semicircle command supports both modes") {
    CHECK(run("semicircle --poly 0,0,1 --mode both").output ==
          "exact: 1\nquadrature: 1.0000000000\n");
    CHECK(run("semicircle --poly 0,1 --mode exact").output == "exact: 0\n");
    std::string x36 = "--poly ";
    for (int e = 0; e < 36; ++e) x36 += "0,";
    x36 += "1";
    CHECK(run("semicircle " + x36 + " --mode exact").output == "exact: 477638700\n");
    CHECK(run("semicircle --poly 1/2 --mode exact").output == "exact: 1/2\n");
}

TEST_CASE("exit codes distinguish usage, cap, and undefined errors") {
    CHECK(run("moment").exitCode == 2);
    CHECK(run("moment --ks 2,x").exitCode == 2);
    CHECK(run("moment --ks 4 --eval 0").exitCode == 2);
    CHECK(run("nonsense").exitCode == 2);
    CHECK(run("eta --ks 22").exitCode == 3);
    CHECK(run("eta --ks 4 --cap 2").exitCode == 3);
    CHECK(run("eta --ks 4 --cap 4").exitCode == 0);
    CHECK(run("eta --ks 0,2").exitCode == 2);
    CHECK(run("corr-limit --f-evens 0 --g-odds 0").exitCode == 4);
}

TEST_CASE("json envelopes round-trip and carry big integers as strings") {
    const std::vector<std::string> commands = {
        "moment --ks 4 --eval 3 --format json",
        "moment --ks 4 --gamma-form --format json",
        "eta --ks 4 --format json",
        "asympt --evens 5,21 --odds 7,21,23,31 --which leading --format json",
        "corr-limit --f-odds 0 --g-odds 1 --format json",
        "mc-check --ks 2 --n 4 --samples 2000 --seed 7 --format json",
        "semicircle --poly 0,0,1 --mode both --format json",
    };
    for (const auto& cmd : commands) {
        CAPTURE(cmd);
        const auto result = run(cmd);
        REQUIRE(result.exitCode == 0);
        const auto doc = nlohmann::json::parse(result.output);
        CHECK(doc.contains("command"));
        CHECK(doc.contains("inputs"));
        CHECK(doc.contains("result"));
        CHECK(doc["version"] == "0.1.0");
        // Round-trip idempotence.
        CHECK(nlohmann::json::parse(doc.dump()) == doc);
    }

    const auto showcase =
        run("asympt --evens 5,21 --odds 7,21,23,31 --which leading --format json");
    const auto doc = nlohmann::json::parse(showcase.output);
    CHECK(doc["result"]["value"].is_string());

    const auto moment = run("moment --ks 4 --eval 3 --format json");
    const auto momentDoc = nlohmann::json::parse(moment.output);
    CHECK(momentDoc["result"]["value"] == "57"); // 2*27 + 3
}

TEST_CASE("mc runs are reproducible from the command line") {
    const auto a = run("mc-check --ks 4 --n 4 --samples 5000 --seed 31 --format json");
    const auto b = run("mc-check --ks 4 --n 4 --samples 5000 --seed 31 --format json");
    CHECK(a.output == b.output);
}

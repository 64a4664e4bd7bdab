#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

// End-to-end checks of the command-line surface; HATCYCLE_CLI_PATH points
// at the built binary.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& shell_command) {
    std::string cmd = shell_command + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

const std::string cli = HATCYCLE_CLI_PATH;

}  // namespace

TEST_CASE("construct piped into verify follows the existence theorem") {
    CHECK(run(cli + " construct --n 9 | " + cli + " verify").exit_code == 0);
    CHECK(run(cli + " construct --n 4 | " + cli + " verify").exit_code == 0);

    auto lose = run(cli + " construct --n 5 --family chi3 | " + cli + " verify");
    CHECK(lose.exit_code == 1);
    auto j = nlohmann::json::parse(lose.out);
    CHECK(j["verdict"] == "losing");
    CHECK(j["witness"]["colours"].size() == 5);

    CHECK(run(cli + " construct --n 5").exit_code == 2);
    CHECK(run(cli + " construct --n 7 --family algebraic").exit_code == 2);
}

TEST_CASE("verify rejects malformed strategies with exit 2") {
    CHECK(run("echo 'not json' | " + cli + " verify").exit_code == 2);
    CHECK(run("echo '{\"n\": 3}' | " + cli + " verify").exit_code == 2);
    CHECK(run(cli + " verify --strategy /nonexistent.json").exit_code == 2);
}

TEST_CASE("verify prints the verdict on stdout only") {
    auto r = run(cli + " construct --n 6 | " + cli + " verify 2>&1");
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "winning");
    CHECK(!j.contains("witness"));
}

TEST_CASE("count prints exact numbers as strings") {
    auto r = run(cli + " construct --n 5 --family chi3 | " + cli + " count");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["defeat_count"] == "3");
    CHECK(j["win_probability"] == "80/81");
}

TEST_CASE("classify reports the colouring") {
    auto r = run(cli + " construct --n 4 | " + cli + " classify");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["balanced"] == true);
    CHECK(j["chi"]["constant"] == 2);
    CHECK(j["boundaries"].size() == 4);
    CHECK(j["boundaries"][0]["edges"].size() == 9);
}

TEST_CASE("export-dot output is byte-stable") {
    auto a = run(cli + " construct --n 6 | " + cli + " export-dot");
    auto b = run(cli + " construct --n 6 | " + cli + " export-dot");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("digraph strategy") != std::string::npos);
}

TEST_CASE("prove emits a certificate") {
    auto r = run(cli + " prove --n 5");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["conclusion"] == "no_winning_strategy");

    auto budget = run("HATCYCLE_BUDGET=1000 " + cli + " prove --n 5");
    CHECK(budget.exit_code == 1);
    CHECK(nlohmann::json::parse(budget.out)["conclusion"] == "inconclusive");
}

TEST_CASE("general scores a two-player game") {
    char dir_template[] = "/tmp/hatcycle_cli_XXXXXX";
    REQUIRE(mkdtemp(dir_template));
    std::string dir = dir_template;
    std::string game_path = dir + "/game.json";
    std::string strat_path = dir + "/strat.json";
    std::ofstream(game_path) << R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]],)"
                             << R"("heights":{"a":2,"b":2}})";
    std::ofstream(strat_path) << R"({"rules":{"a":[0,1],"b":[1,0]}})";
    auto r = run(cli + " general --game " + game_path + " --strategy " + strat_path);
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["min_correct"] == 1);
}

#include "doctest.h"

#include <random>

#include "hatcycle/constructors.hpp"
#include "hatcycle/dot_export.hpp"
#include "hatcycle/json_io.hpp"
#include "hatcycle/prover.hpp"
#include "test_helpers.hpp"

using namespace hatcycle;
using nlohmann::json;

TEST_CASE("strategy JSON round-trips") {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 10; ++rep) {
        auto f = testing::random_strategy(3 + static_cast<int>(rng() % 8), rng);
        auto j = strategy_to_json(f);
        CHECK(strategy_from_json(json::parse(j.dump())) == f);
    }
    auto j = strategy_to_json(chi2_strategy(4));
    CHECK(j.dump().substr(0, 8) == "{\"n\":4,\"");
}

TEST_CASE("strategy JSON rejects malformed input") {
    CHECK_THROWS(strategy_from_json(json::parse("{}")));
    CHECK_THROWS(strategy_from_json(json::parse("{\"n\":3,\"rules\":[]}")));
    CHECK_THROWS(strategy_from_json(
        json::parse("{\"n\":3,\"rules\":[[[0,1],[0,1,2],[0,1,2]],[],[]]}")));
    CHECK_THROWS(strategy_from_json(json::parse(
        "{\"n\":3,\"rules\":[[[0,1,3],[0,1,2],[0,1,2]],"
        "[[0,1,2],[0,1,2],[0,1,2]],[[0,1,2],[0,1,2],[0,1,2]]]}")));
}

TEST_CASE("assignment and game JSON") {
    Assignment a{0, 2, 1};
    CHECK(assignment_from_json(json::parse(assignment_to_json(a).dump())) == a);

    auto game = make_game({"x", "y"}, {{0, 1}, {1, 0}}, {2, 3});
    auto j = game_to_json(game);
    auto back = game_from_json(json::parse(j.dump()));
    CHECK(back.vertices == game.vertices);
    CHECK(back.edges == game.edges);
    CHECK(back.heights == game.heights);

    CHECK_THROWS(game_from_json(json::parse("{\"vertices\":[\"a\",\"a\"],"
                                            "\"edges\":[],\"heights\":{\"a\":1}}")));
}

TEST_CASE("certificate JSON carries the audit trail") {
    auto cert = prove_nonexistence(5);
    auto j = certificate_to_json(cert);
    CHECK(j["conclusion"] == "no_winning_strategy");
    CHECK(j["n"] == 5);
    CHECK(j["stages"].size() == 3);
    CHECK(j["lemma_dependencies"].size() == 5);
    CHECK(j["budget_exceeded"] == false);
    CHECK(!j.contains("winning"));
}

TEST_CASE("DOT export is deterministic with the published counts") {
    auto f = chi3_strategy(5);
    auto col = *colour_edges(f);
    std::string dot = export_dot(f, col);
    CHECK(dot == export_dot(f, col));

    auto count = [&](const std::string& needle) {
        std::size_t hits = 0, pos = 0;
        while ((pos = dot.find(needle, pos)) != std::string::npos) {
            ++hits;
            pos += needle.size();
        }
        return hits;
    };
    CHECK(count("color=gold3") == 15);
    CHECK(count("color=red") == 15);
    CHECK(count("color=blue") == 15);
    CHECK(count(" -> ") == 45);
    CHECK(count("v_0_") == 3 + 9 + 9);  // rank block + out-edges + wrap targets

    auto g = chi2_strategy(8);
    auto colg = *colour_edges(g);
    std::string dotg = export_dot(g, colg);
    auto countg = [&](const std::string& needle) {
        std::size_t hits = 0, pos = 0;
        while ((pos = dotg.find(needle, pos)) != std::string::npos) {
            ++hits;
            pos += needle.size();
        }
        return hits;
    };
    CHECK(countg("color=gold3") == 16);  // two yellow per boundary
    CHECK(countg("color=red") == 16);
    CHECK(countg("color=blue") == 40);

    CHECK_THROWS_AS(export_dot(chi3_strategy(6), col), PreconditionError);
}

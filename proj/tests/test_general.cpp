#include "doctest.h"

#include <random>

#include "hatcycle/constructors.hpp"
#include "hatcycle/general.hpp"
#include "hatcycle/verifier.hpp"

using namespace hatcycle;

namespace {

VisibilityGame c2_game(int h0, int h1) {
    return make_game({"a", "b"}, {{0, 1}, {1, 0}}, {h0, h1});
}

// one player bets on equal colours, the other on different ones
GeneralStrategy c2_same_or_different() {
    GeneralStrategy f;
    f.rules = {{0, 1}, {1, 0}};
    return f;
}

}  // namespace

TEST_CASE("game validation") {
    CHECK_THROWS_AS(make_game({"a"}, {{0, 0}}, {2}), DomainError);
    CHECK_THROWS_AS(make_game({"a", "b"}, {{0, 2}}, {2, 2}), DomainError);
    CHECK_THROWS_AS(make_game({"a", "b"}, {}, {2}), SizeMismatch);
    CHECK_THROWS_AS(make_game({"a", "b"}, {}, {2, 0}), DomainError);
}

TEST_CASE("enlarged graph shapes") {
    auto cn = star_graph(cycle_game(6));
    CHECK(cn.nodes.size() == 18);
    CHECK(cn.arcs.size() == 108);  // nine colour pairs per visibility arc

    auto lone = star_graph(make_game({"a"}, {}, {2}));
    CHECK(lone.nodes.size() == 2);
    CHECK(lone.arcs.empty());

    auto pair = star_graph(c2_game(2, 3));
    CHECK(pair.nodes.size() == 5);
    CHECK(pair.arcs.size() == 12);
}

TEST_CASE("scoring the generalized game") {
    auto game = c2_game(2, 2);
    auto f = c2_same_or_different();
    CHECK(general_correct_count(game, f, {0, 0}) == 1);
    CHECK(general_correct_count(game, f, {0, 1}) == 1);
    CHECK(general_correct_count(game, f, {1, 0}) == 1);
    CHECK(general_correct_count(game, f, {1, 1}) == 1);
    CHECK(min_over_assignments(game, f) == 1);

    // no visibility: everyone guesses a constant
    auto blind = make_game({"a", "b", "c"}, {}, {3, 3, 3});
    GeneralStrategy consts;
    consts.rules = {{1}, {2}, {1}};
    CHECK(general_correct_count(blind, consts, {1, 2, 1}) == 3);
    CHECK(general_correct_count(blind, consts, {0, 0, 0}) == 0);

    CHECK_THROWS_AS(general_correct_count(game, f, {0, 0, 0}), SizeMismatch);
    GeneralStrategy bad;
    bad.rules = {{0, 1, 0}, {1, 0}};
    CHECK_THROWS_AS(general_correct_count(game, bad, {0, 0}), SizeMismatch);
}

TEST_CASE("cycle strategies embed into the generalized game") {
    auto f = algebraic_c3();
    auto game = cycle_game(3);
    auto g = to_general(f);
    CHECK(general_correct_count(game, g, {0, 0, 0}) == 1);
    // exhaustive agreement between both scorers
    Selector s(3, 0);
    for (int it = 0; it < 27; ++it) {
        Assignment a(s.begin(), s.end());
        CHECK(general_correct_count(game, g, s) == correct_count(f, a));
        int pos = 2;
        while (pos >= 0 && s[pos] == 2) s[pos--] = 0;
        if (pos < 0) break;
        ++s[pos];
    }
}

TEST_CASE("minimum over assignments matches the cycle verifier") {
    CHECK(min_over_assignments(cycle_game(6), to_general(*construct_winning(6))) == 1);
    CHECK(min_over_assignments(cycle_game(9), to_general(*construct_winning(9))) == 1);
    CHECK(min_over_assignments(cycle_game(5), to_general(chi3_strategy(5))) == 0);

    GeneralStrategy f = c2_same_or_different();
    CHECK_THROWS_AS(min_over_assignments(c2_game(2, 2), f, 2), BudgetExceeded);
}

TEST_CASE("brute-force game values on two-player games") {
    CHECK(game_value_bruteforce(c2_game(2, 2)) == 1);
    CHECK(game_value_bruteforce(c2_game(2, 3)) == 0);
    CHECK(game_value_bruteforce(make_game({"a"}, {}, {1})) == 1);
    CHECK_THROWS_AS(game_value_bruteforce(cycle_game(6)), BudgetExceeded);
}

TEST_CASE("value never grows when a height grows") {
    // feasible grid of two-player games
    int mu[5][5];
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            if (a * b > 12) {
                mu[a][b] = -1;
                continue;
            }
            mu[a][b] = game_value_bruteforce(c2_game(a, b));
        }
    CHECK(mu[1][1] == 2);
    CHECK(mu[2][2] == 1);
    CHECK(mu[2][3] == 0);
    CHECK(mu[3][3] == 0);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            if (mu[a][b] < 0) continue;
            if (a + 1 <= 4 && mu[a + 1][b] >= 0) CHECK(mu[a + 1][b] <= mu[a][b]);
            if (b + 1 <= 4 && mu[a][b + 1] >= 0) CHECK(mu[a][b + 1] <= mu[a][b]);
        }
}

TEST_CASE("selector-summed correct guesses depend only on the heights") {
    std::mt19937_64 rng(8);
    auto game = make_game({"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 0}, {0, 2}}, {2, 3, 2});
    for (int rep = 0; rep < 5; ++rep) {
        GeneralStrategy f;
        f.rules.resize(3);
        for (int u = 0; u < 3; ++u) {
            f.rules[u].resize(observation_domain(game, u));
            for (auto& g : f.rules[u])
                g = static_cast<Colour>(rng() % game.heights[u]);
        }
        long long total = 0;
        Selector s(3, 0);
        for (;;) {
            total += general_correct_count(game, f, s);
            int pos = 2;
            while (pos >= 0 && s[pos] + 1 == game.heights[pos]) s[pos--] = 0;
            if (pos < 0) break;
            ++s[pos];
        }
        // sum over u of the product of the other heights
        CHECK(total == 3 * 2 + 2 * 2 + 2 * 3);
    }
}

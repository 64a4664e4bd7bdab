#include "doctest.h"

#include "hatcycle/constructors.hpp"
#include "hatcycle/structure.hpp"
#include "hatcycle/verifier.hpp"

using namespace hatcycle;

TEST_CASE("algebraic strategies win and are all-blue") {
    auto c3 = algebraic_c3();
    CHECK(verify(c3).winning);
    CHECK(brute_force_defeats(c3).witnesses.empty());
    CHECK(*characteristic(c3)->constant == 0);

    auto c4 = algebraic_c4();
    CHECK(verify(c4).winning);
    CHECK(brute_force_defeats(c4).witnesses.empty());
    CHECK(*characteristic(c4)->constant == 0);
}

TEST_CASE("chi3 table is rotation invariant and placed everywhere") {
    LocalRule t = chi3_table();
    for (Colour i = 0; i < 3; ++i)
        for (Colour j = 0; j < 3; ++j)
            CHECK(t.table[kSigma[i]][kSigma[j]] == kSigma[t.table[i][j]]);

    auto f = chi3_strategy(7);
    for (int k = 1; k < 6; ++k) CHECK(f.rules[k] == t);
    // wrap rules read their outer neighbour through the twist
    for (Colour a = 0; a < 3; ++a)
        for (Colour c = 0; c < 3; ++c) {
            CHECK(f.rules[0].table[a][c] == t.table[kSigma[a]][c]);
            CHECK(f.rules[6].table[a][c] == t.table[a][kSigmaInv[c]]);
        }
}

TEST_CASE("chi2 table is invariant under swapping colours 0 and 1") {
    LocalRule t = chi2_table();
    for (Colour i = 0; i < 3; ++i)
        for (Colour j = 0; j < 3; ++j)
            CHECK(t.table[kTau[i]][kTau[j]] == kTau[t.table[i][j]]);
    CHECK_THROWS_AS(chi2_strategy(5), DomainError);
}

TEST_CASE("twisted placement rejects non-invariant tables") {
    CHECK_THROWS_AS(twisted_uniform_strategy(6, chi3_table(), kTau), DomainError);
}

TEST_CASE("family verdicts over small cycles") {
    for (int n = 3; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(verify(chi3_strategy(n)).winning == (n % 3 == 0));
        if (n % 2 == 0) CHECK(verify(chi2_strategy(n)).winning == (n == 4));
    }
}

TEST_CASE("existence dispatcher") {
    CHECK_THROWS_AS(construct_winning(2), DomainError);
    for (int n : {3, 4, 6, 9, 12, 21}) {
        auto f = construct_winning(n);
        REQUIRE(f.has_value());
        CHECK(verify(*f).winning);
    }
    for (int n : {5, 7, 8, 10, 11}) CHECK_FALSE(construct_winning(n).has_value());
    // the dispatcher prefers the three-row family whenever 3 | n
    CHECK(*characteristic(*construct_winning(12))->constant == 3);
    CHECK(*characteristic(*construct_winning(4))->constant == 2);
}

TEST_CASE("constructed families carry the published row arrangement") {
    auto f = chi3_strategy(6);
    auto col = *colour_edges(f);
    for (int k = 0; k < 6; ++k) {
        auto counts = col.boundary_counts(k);
        CHECK(counts[0] == 3);
        CHECK(counts[1] == 3);
        CHECK(counts[2] == 3);
    }
    // away from the wrap: yellow on the diagonal, red one row below
    for (int k = 1; k < 4; ++k)
        for (Colour b = 0; b < 3; ++b) {
            CHECK(col.at(k, b, b) == EdgeColour::Yellow);
            CHECK(col.at(k, b, (b + 2) % 3) == EdgeColour::Red);
        }

    auto g = chi2_strategy(8);
    auto colg = *colour_edges(g);
    for (int k = 0; k < 8; ++k) {
        auto counts = colg.boundary_counts(k);
        CHECK(counts[0] == 2);
        CHECK(counts[1] == 2);
        CHECK(counts[2] == 5);
    }
    for (int k = 1; k < 6; ++k) {
        CHECK(colg.at(k, 0, 1) == EdgeColour::Red);  // red crosses the yellow rows
        CHECK(colg.at(k, 1, 0) == EdgeColour::Red);
        CHECK(colg.at(k, 2, 2) == EdgeColour::Blue);
    }
}

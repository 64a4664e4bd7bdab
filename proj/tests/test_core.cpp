#include "doctest.h"

#include <random>

#include "hatcycle/constructors.hpp"
#include "hatcycle/core.hpp"
#include "test_helpers.hpp"

using namespace hatcycle;
using testing::constant_zero;
using testing::random_strategy;

namespace {

LocalRule sum_rule() {
    LocalRule r;
    for (Colour l = 0; l < 3; ++l)
        for (Colour c = 0; c < 3; ++c) r.table[l][c] = static_cast<Colour>((6 - l - c) % 3);
    return r;
}

}  // namespace

TEST_CASE("make_strategy validates shape") {
    CHECK(make_strategy(3, std::vector<LocalRule>(3, sum_rule())).n == 3);
    CHECK_THROWS_AS(make_strategy(2, std::vector<LocalRule>(2)), DomainError);
    CHECK_THROWS_AS(make_strategy(4, std::vector<LocalRule>(3)), SizeMismatch);
    LocalRule bad;
    bad.table[1][2] = 3;
    CHECK_THROWS_AS(make_strategy(3, std::vector<LocalRule>(3, bad)), DomainError);
}

TEST_CASE("guess reads the table cyclically") {
    auto f = constant_zero(4);
    for (long long k : {-7LL, -1LL, 0LL, 3LL, 4LL, 100LL})
        for (Colour l = 0; l < 3; ++l)
            for (Colour r = 0; r < 3; ++r) CHECK(guess(f, k, l, r) == 0);

    // published chi=3 table: both neighbours on colour 0 -> guess 1
    auto g = make_strategy(3, std::vector<LocalRule>(3, chi3_table()));
    CHECK(guess(g, 0, 0, 0) == 1);
    CHECK(guess(g, 2, 2, 2) == 0);

    // first player of the C4 strategy adds its neighbours
    auto c4 = algebraic_c4();
    CHECK(guess(c4, 0, 1, 2) == 0);
    CHECK(guess(c4, 0, 2, 2) == 1);
}

TEST_CASE("correct_count counts matching guesses") {
    auto c3 = algebraic_c3();
    CHECK(correct_count(c3, {0, 0, 0}) == 1);

    auto z5 = constant_zero(5);
    CHECK(correct_count(z5, Assignment(5, 0)) == 5);
    CHECK(correct_count(z5, Assignment(5, 1)) == 0);
    CHECK_THROWS_AS(correct_count(z5, Assignment(4, 0)), SizeMismatch);
}

TEST_CASE("is_admissible checks interior vertices only") {
    auto z = constant_zero(5);
    CHECK(is_admissible(z, PathSegment{2, {0, 0}}));
    CHECK(is_admissible(z, PathSegment{0, {1, 1, 1}}));
    CHECK_FALSE(is_admissible(z, PathSegment{0, {1, 0, 1}}));
    CHECK_THROWS_AS(is_admissible(z, PathSegment{0, {1}}), DomainError);
}

TEST_CASE("defeats are exactly the admissible doubled paths") {
    std::mt19937_64 rng(7);
    auto f = random_strategy(4, rng);
    Assignment g(4, 0);
    for (int it = 0; it < 81; ++it) {
        PathSegment doubled{0, {}};
        doubled.colours.insert(doubled.colours.end(), g.begin(), g.end());
        doubled.colours.insert(doubled.colours.end(), g.begin(), g.end());
        CHECK((correct_count(f, g) == 0) == is_admissible(f, doubled));
        int pos = 3;
        while (pos >= 0 && g[pos] == 2) g[pos--] = 0;
        if (pos < 0) break;
        ++g[pos];
    }
}

TEST_CASE("total correct guesses over all assignments is n * 3^(n-1)") {
    std::mt19937_64 rng(11);
    for (int n : {3, 4, 5, 6}) {
        for (int rep = 0; rep < 3; ++rep) {
            auto f = rep == 0 ? constant_zero(n) : random_strategy(n, rng);
            long long total = 0;
            Assignment g(n, 0);
            for (;;) {
                total += correct_count(f, g);
                int pos = n - 1;
                while (pos >= 0 && g[pos] == 2) g[pos--] = 0;
                if (pos < 0) break;
                ++g[pos];
            }
            long long expect = n;
            for (int i = 0; i < n - 1; ++i) expect *= 3;
            CHECK(total == expect);
        }
    }
}

#pragma once

#include <random>

#include "hatcycle/core.hpp"
#include "hatcycle/structure.hpp"

namespace hatcycle::testing {

inline CycleStrategy random_strategy(int n, std::mt19937_64& rng) {
    std::vector<LocalRule> rules(n);
    for (auto& r : rules)
        for (int l = 0; l < 3; ++l)
            for (int c = 0; c < 3; ++c) r.table[l][c] = static_cast<Colour>(rng() % 3);
    return CycleStrategy{n, std::move(rules)};
}

/// Uniformly random order-3 latin square (all-blue layer).
inline LocalRule random_latin(std::mt19937_64& rng) {
    // every 3x3 latin square is affine: c + u*a + v*b with u, v in {1,2}
    Colour c0 = static_cast<Colour>(rng() % 3);
    int u = 1 + static_cast<int>(rng() % 2);
    int v = 1 + static_cast<int>(rng() % 2);
    LocalRule r;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            r.table[a][b] = static_cast<Colour>((c0 + u * a + v * b) % 3);
    return r;
}

inline CycleStrategy random_all_blue(int n, std::mt19937_64& rng) {
    std::vector<LocalRule> rules(n);
    for (auto& r : rules) r = random_latin(rng);
    return CycleStrategy{n, std::move(rules)};
}

inline StrategyIso random_iso(int n, std::mt19937_64& rng) {
    StrategyIso iso;
    iso.rotation = static_cast<int>(rng() % n);
    iso.reflected = rng() % 2 == 0;
    for (int k = 0; k < n; ++k) iso.vertex_perms.push_back(all_perms()[rng() % 6]);
    return iso;
}

inline CycleStrategy constant_zero(int n) {
    return CycleStrategy{n, std::vector<LocalRule>(n)};
}

}  // namespace hatcycle::testing

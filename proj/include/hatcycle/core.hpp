#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Core value types for the three-colour guessing game on a cycle:
// strategies, assignments, edges of the enlarged (3-copies-per-player)
// graph, and the admissibility predicate.
//
// Colours are 0-based residues mod 3 everywhere in memory and in JSON;
// published tables that use colours 1..3 map to 0..2 by i -> i-1.

namespace hatcycle {

using Colour = std::uint8_t;

inline constexpr int kColours = 3;

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

/// One player's guess table. Row = colour seen on the left neighbour,
/// column = colour seen on the right neighbour.
struct LocalRule {
    std::array<std::array<Colour, 3>, 3> table{};

    Colour operator()(Colour left, Colour right) const {
        return table[left][right];
    }
    friend bool operator==(const LocalRule&, const LocalRule&) = default;
};

/// Composite strategy on the cycle C_n: one rule per player, indices cyclic.
struct CycleStrategy {
    int n = 0;
    std::vector<LocalRule> rules;

    friend bool operator==(const CycleStrategy&, const CycleStrategy&) = default;
};

/// Adversary colouring of the n hats (cyclic, 0-based colours).
using Assignment = std::vector<Colour>;

/// Edge of the enlarged graph between layer `layer` and layer `layer+1`.
struct Edge {
    int layer = 0;
    Colour left = 0;
    Colour right = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// A path in the enlarged graph covering consecutive layers.
struct PathSegment {
    int start_layer = 0;
    std::vector<Colour> colours;
};

inline int mod_layer(long long k, int n) {
    long long m = k % n;
    return static_cast<int>(m < 0 ? m + n : m);
}

/// Permutation of the three colours, p[i] = image of i.
using Perm = std::array<Colour, 3>;

inline constexpr Perm kIdentityPerm{0, 1, 2};
/// The rotation 0 -> 1 -> 2 -> 0 fixed by the chi=3 table.
inline constexpr Perm kSigma{1, 2, 0};
inline constexpr Perm kSigmaInv{2, 0, 1};
/// The transposition of colours 0 and 1 fixed by the chi=2 table.
inline constexpr Perm kTau{1, 0, 2};

inline Perm invert(const Perm& p) {
    Perm r{};
    for (Colour i = 0; i < 3; ++i) r[p[i]] = i;
    return r;
}

inline Perm compose(const Perm& p, const Perm& q) {  // (p.q)(x) = p(q(x))
    Perm r{};
    for (Colour i = 0; i < 3; ++i) r[i] = p[q[i]];
    return r;
}

/// All six colour permutations in lexicographic order; the identity first.
const std::array<Perm, 6>& all_perms();

CycleStrategy make_strategy(int n, std::vector<LocalRule> rules);

/// Guess of player k (any integer, reduced mod n) given neighbour colours.
Colour guess(const CycleStrategy& f, long long k, Colour left, Colour right);

/// Number of players whose guess matches their own colour under g.
int correct_count(const CycleStrategy& f, const Assignment& g);

/// True iff every interior vertex of the segment differs from the local
/// guess determined by its neighbours. Two-vertex segments are admissible.
bool is_admissible(const CycleStrategy& f, const PathSegment& p);

}  // namespace hatcycle

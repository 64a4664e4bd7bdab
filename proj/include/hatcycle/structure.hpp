#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hatcycle/core.hpp"

// Classification machinery: admissible-continuation counts, the
// yellow/red/blue edge colouring of balanced strategies, the per-boundary
// characteristic number, diagnostics for the structural lemmas, and
// strategy isomorphisms.

namespace hatcycle {

enum class EdgeColour : std::uint8_t {
    Yellow,  // l- = 3, l+ = 1, directed right
    Red,     // l- = 1, l+ = 3, directed left
    Blue,    // l- = l+ = 2, undirected
};

const char* to_string(EdgeColour c);

enum class Direction { Plus, Minus };

/// Number of immediate admissible continuations of edge e to the right
/// (Plus) or to the left (Minus); always in 0..3.
int ell(const CycleStrategy& f, const Edge& e, Direction dir);

struct EdgeColouring {
    int n = 0;
    std::vector<EdgeColour> cells;  // size 9n, index boundary*9 + left*3 + right

    EdgeColour at(int boundary, Colour left, Colour right) const {
        return cells[boundary * 9 + left * 3 + right];
    }
    /// Counts of (yellow, red, blue) edges at one boundary.
    std::array<int, 3> boundary_counts(int boundary) const;

    friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;
};

/// Colours all 9n edges when every edge satisfies l+ + l- = 4; otherwise
/// returns nullopt and reports a violating edge through `unbalanced`.
std::optional<EdgeColouring> colour_edges(const CycleStrategy& f,
                                          Edge* unbalanced = nullptr);

struct ChiResult {
    std::vector<int> per_boundary;  // yellow count per boundary
    std::optional<int> constant;    // set iff all boundaries agree
};

/// Per-boundary yellow counts of a balanced strategy; nullopt if unbalanced.
std::optional<ChiResult> characteristic(const CycleStrategy& f);

/// Checks the continuation/star/admissibility predicates of the structural
/// lemmas on any balanced strategy and lists every violation (empty means
/// all hold). Throws PreconditionError if `c` does not match f.
std::vector<std::string> lemma2_diagnostics(const CycleStrategy& f,
                                            const EdgeColouring& c);

/// Strategy isomorphism: per-layer colour permutation (indexed by target
/// layer), cycle rotation, optional reflection.
struct StrategyIso {
    std::vector<Perm> vertex_perms;
    int rotation = 0;
    bool reflected = false;
};

/// Image strategy g with g_{k'}(pi_{k'-1} a, pi_{k'+1} c) = pi_{k'} f_k(a,c)
/// where k' = k + rotation (or rotation - k when reflected, which also swaps
/// the rule arguments). Defeating assignments map along the same relabelling.
CycleStrategy apply_iso(const CycleStrategy& f, const StrategyIso& iso);

/// Exhaustive search for an iso with apply_iso(f, iso) == g, pruned layer by
/// layer; deterministic order (rotations ascending, unreflected first,
/// permutations lexicographic). `budget` caps table-consistency checks.
std::optional<StrategyIso> find_iso(const CycleStrategy& f, const CycleStrategy& g,
                                    std::uint64_t budget = 100000000);

}  // namespace hatcycle

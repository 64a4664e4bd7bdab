#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hatcycle/core.hpp"

// The generalized game: players on an arbitrary visibility digraph, any
// number of colours per player, exhaustive scoring and minimax value on
// tiny instances.

namespace hatcycle {

struct VisibilityGame {
    std::vector<std::string> vertices;        // names, index = vertex id
    std::vector<std::pair<int, int>> edges;   // (v, u): v is seen by u
    std::vector<int> heights;                 // colours per vertex, >= 1

    int size() const { return static_cast<int>(vertices.size()); }
    /// In-neighbours of u (who u sees), ascending by vertex id; observation
    /// tuples are ordered the same way, first neighbour most significant.
    std::vector<int> in_neighbours(int u) const;
};

VisibilityGame make_game(std::vector<std::string> vertices,
                         std::vector<std::pair<int, int>> edges,
                         std::vector<int> heights);

/// Per vertex, the guessed colour for every observation tuple, indexed in
/// mixed radix over the ordered in-neighbours.
struct GeneralStrategy {
    std::vector<std::vector<Colour>> rules;
};

/// One colour per vertex.
using Selector = std::vector<Colour>;

struct StarGraph {
    std::vector<std::pair<int, int>> nodes;  // (colour index, vertex)
    std::vector<std::pair<int, int>> arcs;   // indices into nodes
};

/// The enlarged graph with one node per (colour, vertex) and all colour
/// pairs connected along every visibility edge.
StarGraph star_graph(const VisibilityGame& game);

std::uint64_t observation_domain(const VisibilityGame& game, int u);

int general_correct_count(const VisibilityGame& game, const GeneralStrategy& f,
                          const Selector& g);

inline constexpr std::uint64_t kDefaultGeneralBudget = 20000000;

/// Exact minimum of general_correct_count over all selectors.
int min_over_assignments(const VisibilityGame& game, const GeneralStrategy& f,
                         std::uint64_t budget = kDefaultGeneralBudget);

/// Exact minimax value: max over all strategies of min_over_assignments.
int game_value_bruteforce(const VisibilityGame& game,
                          std::uint64_t budget = kDefaultGeneralBudget);

/// The cycle game C_n with three colours everywhere.
VisibilityGame cycle_game(int n);

/// A cycle strategy re-expressed over cycle_game(f.n)'s observation order.
GeneralStrategy to_general(const CycleStrategy& f);

}  // namespace hatcycle

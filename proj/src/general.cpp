#include "hatcycle/general.hpp"

#include <algorithm>

namespace hatcycle {

std::vector<int> VisibilityGame::in_neighbours(int u) const {
    std::vector<int> in;
    for (const auto& [v, tgt] : edges)
        if (tgt == u) in.push_back(v);
    std::sort(in.begin(), in.end());
    in.erase(std::unique(in.begin(), in.end()), in.end());
    return in;
}

VisibilityGame make_game(std::vector<std::string> vertices,
                         std::vector<std::pair<int, int>> edges,
                         std::vector<int> heights) {
    const int n = static_cast<int>(vertices.size());
    if (static_cast<int>(heights.size()) != n)
        throw SizeMismatch("one height per vertex required");
    for (int h : heights)
        if (h < 1) throw DomainError("heights must be at least 1");
    for (const auto& [v, u] : edges) {
        if (v < 0 || v >= n || u < 0 || u >= n)
            throw DomainError("edge endpoint out of range");
        if (v == u) throw DomainError("self-loops are not allowed");
    }
    return VisibilityGame{std::move(vertices), std::move(edges), std::move(heights)};
}

StarGraph star_graph(const VisibilityGame& game) {
    StarGraph sg;
    std::vector<int> base(game.size());
    for (int v = 0; v < game.size(); ++v) {
        base[v] = static_cast<int>(sg.nodes.size());
        for (int i = 0; i < game.heights[v]; ++i) sg.nodes.emplace_back(i, v);
    }
    for (const auto& [v, u] : game.edges)
        for (int i = 0; i < game.heights[v]; ++i)
            for (int j = 0; j < game.heights[u]; ++j)
                sg.arcs.emplace_back(base[v] + i, base[u] + j);
    return sg;
}

std::uint64_t observation_domain(const VisibilityGame& game, int u) {
    std::uint64_t dom = 1;
    for (int v : game.in_neighbours(u)) dom *= static_cast<std::uint64_t>(game.heights[v]);
    return dom;
}

namespace {

std::uint64_t observation_index(const VisibilityGame& game, const std::vector<int>& in,
                                const Selector& g) {
    std::uint64_t idx = 0;
    for (int v : in) idx = idx * static_cast<std::uint64_t>(game.heights[v]) + g[v];
    return idx;
}

void validate_strategy(const VisibilityGame& game, const GeneralStrategy& f) {
    if (static_cast<int>(f.rules.size()) != game.size())
        throw SizeMismatch("one rule per vertex required");
    for (int u = 0; u < game.size(); ++u) {
        if (f.rules[u].size() != observation_domain(game, u))
            throw SizeMismatch("rule of vertex " + game.vertices[u] +
                               " does not cover its observation domain");
        for (Colour c : f.rules[u])
            if (c >= game.heights[u])
                throw DomainError("guess above the vertex height");
    }
}

void validate_selector(const VisibilityGame& game, const Selector& g) {
    if (static_cast<int>(g.size()) != game.size())
        throw SizeMismatch("one colour per vertex required");
    for (int v = 0; v < game.size(); ++v)
        if (g[v] >= game.heights[v]) throw DomainError("colour above the vertex height");
}

}  // namespace

int general_correct_count(const VisibilityGame& game, const GeneralStrategy& f,
                          const Selector& g) {
    validate_strategy(game, f);
    validate_selector(game, g);
    int hits = 0;
    for (int u = 0; u < game.size(); ++u) {
        auto in = game.in_neighbours(u);
        if (f.rules[u][observation_index(game, in, g)] == g[u]) ++hits;
    }
    return hits;
}

int min_over_assignments(const VisibilityGame& game, const GeneralStrategy& f,
                         std::uint64_t budget) {
    validate_strategy(game, f);
    const int n = game.size();
    std::uint64_t total = 1;
    for (int v = 0; v < n; ++v) {
        std::uint64_t h = static_cast<std::uint64_t>(game.heights[v]);
        if (h > 1 && total > budget / h)
            throw BudgetExceeded("selector space exceeds budget");
        total *= h;
    }
    if (total > budget) throw BudgetExceeded("selector space exceeds budget");

    std::vector<std::vector<int>> ins(n);
    for (int u = 0; u < n; ++u) ins[u] = game.in_neighbours(u);

    Selector g(n, 0);
    int best = n + 1;
    for (;;) {
        int hits = 0;
        for (int u = 0; u < n && hits < best; ++u)
            if (f.rules[u][observation_index(game, ins[u], g)] == g[u]) ++hits;
        best = std::min(best, hits);
        if (best == 0) break;
        int pos = n - 1;
        while (pos >= 0 && g[pos] + 1 == game.heights[pos]) {
            g[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++g[pos];
    }
    return best;
}

int game_value_bruteforce(const VisibilityGame& game, std::uint64_t budget) {
    const int n = game.size();
    std::vector<std::uint64_t> dom(n);
    std::uint64_t strategies = 1;
    for (int u = 0; u < n; ++u) {
        dom[u] = observation_domain(game, u);
        if (dom[u] > budget) throw BudgetExceeded("strategy space exceeds budget");
        std::uint64_t h = static_cast<std::uint64_t>(game.heights[u]);
        for (std::uint64_t i = 0; i < dom[u]; ++i) {
            if (h > 1 && strategies > budget / h)
                throw BudgetExceeded("strategy space exceeds budget");
            strategies *= h;
        }
    }
    if (strategies > budget) throw BudgetExceeded("strategy space exceeds budget");

    std::vector<std::vector<int>> ins(n);
    for (int u = 0; u < n; ++u) ins[u] = game.in_neighbours(u);

    std::uint64_t selectors = 1;
    for (int v = 0; v < n; ++v) selectors *= static_cast<std::uint64_t>(game.heights[v]);

    GeneralStrategy f;
    f.rules.resize(n);
    for (int u = 0; u < n; ++u) f.rules[u].assign(dom[u], 0);

    int best = 0;
    for (;;) {
        // min over selectors with early exit at the current best
        int mn = n + 1;
        Selector g(n, 0);
        for (std::uint64_t s = 0; s < selectors; ++s) {
            int hits = 0;
            for (int u = 0; u < n && hits < mn; ++u)
                if (f.rules[u][observation_index(game, ins[u], g)] == g[u]) ++hits;
            mn = std::min(mn, hits);
            if (mn <= best) break;
            int pos = n - 1;
            while (pos >= 0 && g[pos] + 1 == game.heights[pos]) {
                g[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++g[pos];
        }
        best = std::max(best, mn);

        // next strategy: mixed-radix odometer over all rule entries
        bool done = true;
        for (int u = n - 1; u >= 0 && done; --u) {
            auto& rule = f.rules[u];
            for (std::size_t e = rule.size(); e-- > 0;) {
                if (rule[e] + 1 < game.heights[u]) {
                    ++rule[e];
                    done = false;
                    break;
                }
                rule[e] = 0;
            }
        }
        if (done) break;
    }
    return best;
}

VisibilityGame cycle_game(int n) {
    if (n < 3) throw DomainError("cycle length must be at least 3");
    std::vector<std::string> names(n);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> heights(n, 3);
    for (int u = 0; u < n; ++u) {
        names[u] = std::to_string(u);
        edges.emplace_back((u + n - 1) % n, u);
        edges.emplace_back((u + 1) % n, u);
    }
    return make_game(std::move(names), std::move(edges), std::move(heights));
}

GeneralStrategy to_general(const CycleStrategy& f) {
    VisibilityGame game = cycle_game(f.n);
    GeneralStrategy g;
    g.rules.resize(f.n);
    for (int u = 0; u < f.n; ++u) {
        auto in = game.in_neighbours(u);  // two distinct vertices, ascending
        int left = (u + f.n - 1) % f.n;
        g.rules[u].resize(9);
        for (Colour c0 = 0; c0 < 3; ++c0)
            for (Colour c1 = 0; c1 < 3; ++c1) {
                Colour l = in[0] == left ? c0 : c1;
                Colour r = in[0] == left ? c1 : c0;
                g.rules[u][c0 * 3 + c1] = f.rules[u](l, r);
            }
    }
    return g;
}

}  // namespace hatcycle

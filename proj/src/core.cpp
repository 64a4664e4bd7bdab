#include "hatcycle/core.hpp"

namespace hatcycle {

const std::array<Perm, 6>& all_perms() {
    static const std::array<Perm, 6> perms{{{0, 1, 2},
                                            {0, 2, 1},
                                            {1, 0, 2},
                                            {1, 2, 0},
                                            {2, 0, 1},
                                            {2, 1, 0}}};
    return perms;
}

namespace {

void check_rule(const LocalRule& r) {
    for (const auto& row : r.table)
        for (Colour c : row)
            if (c >= kColours)
                throw DomainError("rule entry out of colour range");
}

}  // namespace

CycleStrategy make_strategy(int n, std::vector<LocalRule> rules) {
    if (n < 3)
        throw DomainError("cycle length must be at least 3");
    if (static_cast<int>(rules.size()) != n)
        throw SizeMismatch("expected " + std::to_string(n) + " rules, got " +
                           std::to_string(rules.size()));
    for (const auto& r : rules) check_rule(r);
    return CycleStrategy{n, std::move(rules)};
}

Colour guess(const CycleStrategy& f, long long k, Colour left, Colour right) {
    return f.rules[mod_layer(k, f.n)](left, right);
}

int correct_count(const CycleStrategy& f, const Assignment& g) {
    if (static_cast<int>(g.size()) != f.n)
        throw SizeMismatch("assignment length does not match strategy");
    int hits = 0;
    for (int k = 0; k < f.n; ++k) {
        Colour l = g[mod_layer(k - 1, f.n)];
        Colour r = g[(k + 1) % f.n];
        if (f.rules[k](l, r) == g[k]) ++hits;
    }
    return hits;
}

bool is_admissible(const CycleStrategy& f, const PathSegment& p) {
    if (p.colours.size() < 2)
        throw DomainError("path segment needs at least two vertices");
    for (std::size_t i = 1; i + 1 < p.colours.size(); ++i) {
        Colour g = guess(f, p.start_layer + static_cast<long long>(i),
                         p.colours[i - 1], p.colours[i + 1]);
        if (p.colours[i] == g) return false;
    }
    return true;
}

}  // namespace hatcycle

#include "hatcycle/constructors.hpp"

namespace hatcycle {

LocalRule chi3_table() {
    return LocalRule{{{{1, 0, 0}, {1, 2, 1}, {2, 2, 0}}}};
}

LocalRule chi2_table() {
    return LocalRule{{{{2, 0, 0}, {1, 2, 1}, {1, 0, 2}}}};
}

CycleStrategy twisted_uniform_strategy(int n, const LocalRule& table, const Perm& wrap) {
    if (n < 3) throw DomainError("cycle length must be at least 3");
    for (Colour i = 0; i < 3; ++i)
        for (Colour j = 0; j < 3; ++j)
            if (table.table[wrap[i]][wrap[j]] != wrap[table.table[i][j]])
                throw DomainError("table is not invariant under the wrap permutation");

    Perm wrap_inv = invert(wrap);
    std::vector<LocalRule> rules(n, table);
    for (Colour a = 0; a < 3; ++a)
        for (Colour c = 0; c < 3; ++c) {
            rules[0].table[a][c] = table.table[wrap[a]][c];
            rules[n - 1].table[a][c] = table.table[a][wrap_inv[c]];
        }
    return CycleStrategy{n, std::move(rules)};
}

CycleStrategy algebraic_c3() {
    // player 0 sees (left, right) = (C, B) and guesses A = -B-C, etc.
    std::vector<LocalRule> rules(3);
    for (Colour l = 0; l < 3; ++l)
        for (Colour r = 0; r < 3; ++r) {
            rules[0].table[l][r] = static_cast<Colour>((6 - l - r) % 3);
            rules[1].table[l][r] = static_cast<Colour>((6 - l - r - 1) % 3);
            rules[2].table[l][r] = static_cast<Colour>((6 - l - r + 1) % 3);
        }
    return CycleStrategy{3, std::move(rules)};
}

CycleStrategy algebraic_c4() {
    // players 0..3 carry A..D; A=D+B, B=-A-C, C=B-D, D=C-A
    std::vector<LocalRule> rules(4);
    for (Colour l = 0; l < 3; ++l)
        for (Colour r = 0; r < 3; ++r) {
            rules[0].table[l][r] = static_cast<Colour>((l + r) % 3);
            rules[1].table[l][r] = static_cast<Colour>((6 - l - r) % 3);
            rules[2].table[l][r] = static_cast<Colour>((3 + l - r) % 3);
            rules[3].table[l][r] = static_cast<Colour>((3 + l - r) % 3);
        }
    return CycleStrategy{4, std::move(rules)};
}

CycleStrategy chi3_strategy(int n) {
    return twisted_uniform_strategy(n, chi3_table(), kSigma);
}

CycleStrategy chi2_strategy(int n) {
    if (n % 2 != 0) throw DomainError("chi=2 family needs an even cycle");
    return twisted_uniform_strategy(n, chi2_table(), kTau);
}

std::optional<CycleStrategy> construct_winning(int n) {
    if (n < 3) throw DomainError("cycle length must be at least 3");
    if (n % 3 == 0) return chi3_strategy(n);
    if (n == 4) return chi2_strategy(4);
    return std::nullopt;
}

}  // namespace hatcycle

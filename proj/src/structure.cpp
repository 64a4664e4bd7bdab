#include "hatcycle/structure.hpp"

#include <algorithm>

namespace hatcycle {

const char* to_string(EdgeColour c) {
    switch (c) {
        case EdgeColour::Yellow: return "yellow";
        case EdgeColour::Red: return "red";
        case EdgeColour::Blue: return "blue";
    }
    return "?";
}

int ell(const CycleStrategy& f, const Edge& e, Direction dir) {
    int count = 0;
    if (dir == Direction::Plus) {
        for (Colour d = 0; d < 3; ++d)
            if (guess(f, e.layer + 1, e.left, d) != e.right) ++count;
    } else {
        for (Colour a = 0; a < 3; ++a)
            if (guess(f, e.layer, a, e.right) != e.left) ++count;
    }
    return count;
}

std::array<int, 3> EdgeColouring::boundary_counts(int boundary) const {
    std::array<int, 3> counts{0, 0, 0};
    for (int i = 0; i < 9; ++i)
        ++counts[static_cast<int>(cells[boundary * 9 + i])];
    return counts;
}

std::optional<EdgeColouring> colour_edges(const CycleStrategy& f, Edge* unbalanced) {
    EdgeColouring col;
    col.n = f.n;
    col.cells.resize(9 * f.n);
    for (int k = 0; k < f.n; ++k)
        for (Colour b = 0; b < 3; ++b)
            for (Colour c = 0; c < 3; ++c) {
                Edge e{k, b, c};
                int lp = ell(f, e, Direction::Plus);
                int lm = ell(f, e, Direction::Minus);
                if (lp + lm != 4) {
                    if (unbalanced) *unbalanced = e;
                    return std::nullopt;
                }
                EdgeColour ec = lm == 3   ? EdgeColour::Yellow
                                : lm == 1 ? EdgeColour::Red
                                          : EdgeColour::Blue;
                col.cells[k * 9 + b * 3 + c] = ec;
            }
    return col;
}

std::optional<ChiResult> characteristic(const CycleStrategy& f) {
    auto col = colour_edges(f);
    if (!col) return std::nullopt;
    ChiResult chi;
    chi.per_boundary.reserve(f.n);
    for (int k = 0; k < f.n; ++k)
        chi.per_boundary.push_back(col->boundary_counts(k)[0]);
    if (std::all_of(chi.per_boundary.begin(), chi.per_boundary.end(),
                    [&](int v) { return v == chi.per_boundary[0]; }))
        chi.constant = chi.per_boundary[0];
    return chi;
}

namespace {

std::string edge_str(int k, Colour b, Colour c) {
    return "boundary " + std::to_string(k) + " edge (" + std::to_string(b) + "," +
           std::to_string(c) + ")";
}

bool incident_to_directed(const EdgeColouring& col, int n, int layer, Colour v) {
    for (Colour x = 0; x < 3; ++x) {
        if (col.at(mod_layer(layer - 1, n), x, v) != EdgeColour::Blue) return true;
        if (col.at(layer, v, x) != EdgeColour::Blue) return true;
    }
    return false;
}

}  // namespace

std::vector<std::string> lemma2_diagnostics(const CycleStrategy& f,
                                            const EdgeColouring& c) {
    auto fresh = colour_edges(f);
    if (!fresh || !(*fresh == c))
        throw PreconditionError("edge colouring does not match the strategy");

    std::vector<std::string> out;
    const int n = f.n;
    for (int k = 0; k < n; ++k) {
        for (Colour b = 0; b < 3; ++b)
            for (Colour cc = 0; cc < 3; ++cc) {
                EdgeColour col = c.at(k, b, cc);
                if (col == EdgeColour::Yellow) {
                    // (c): admissible right continuations of a yellow edge
                    // stay yellow
                    for (Colour d = 0; d < 3; ++d) {
                        if (guess(f, k + 1, b, d) == cc) continue;
                        if (c.at((k + 1) % n, cc, d) != EdgeColour::Yellow)
                            out.push_back("(c) " + edge_str(k, b, cc) +
                                          " continues right into non-yellow (" +
                                          std::to_string(cc) + "," + std::to_string(d) +
                                          ")");
                    }
                    // (d): the three edges feeding a yellow edge carry all
                    // three colours
                    bool seen[3] = {false, false, false};
                    for (Colour a = 0; a < 3; ++a)
                        seen[static_cast<int>(c.at(mod_layer(k - 1, n), a, b))] = true;
                    if (!(seen[0] && seen[1] && seen[2]))
                        out.push_back("(d) predecessors of yellow " + edge_str(k, b, cc) +
                                      " are not three-coloured");
                } else if (col == EdgeColour::Red) {
                    for (Colour a = 0; a < 3; ++a) {
                        if (guess(f, k, a, cc) == b) continue;
                        if (c.at(mod_layer(k - 1, n), a, b) != EdgeColour::Red)
                            out.push_back("(c) " + edge_str(k, b, cc) +
                                          " continues left into non-red (" +
                                          std::to_string(a) + "," + std::to_string(b) +
                                          ")");
                    }
                    bool seen[3] = {false, false, false};
                    for (Colour d = 0; d < 3; ++d)
                        seen[static_cast<int>(c.at((k + 1) % n, cc, d))] = true;
                    if (!(seen[0] && seen[1] && seen[2]))
                        out.push_back("(d) successors of red " + edge_str(k, b, cc) +
                                      " are not three-coloured");
                }
            }

        // (e): monochromatic directed 2-paths are admissible; blue 2-paths
        // whose middle vertex touches a directed edge are admissible
        int prev = mod_layer(k - 1, n);
        for (Colour a = 0; a < 3; ++a)
            for (Colour b = 0; b < 3; ++b)
                for (Colour d = 0; d < 3; ++d) {
                    EdgeColour c1 = c.at(prev, a, b);
                    EdgeColour c2 = c.at(k, b, d);
                    if (c1 != c2) continue;
                    bool must_hold = c1 != EdgeColour::Blue ||
                                     incident_to_directed(c, n, k, b);
                    if (must_hold && guess(f, k, a, d) == b)
                        out.push_back("(e) " + std::string(to_string(c1)) + " path (" +
                                      std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(d) + ") through layer " +
                                      std::to_string(k) + " is not admissible");
                }
    }
    return out;
}

CycleStrategy apply_iso(const CycleStrategy& f, const StrategyIso& iso) {
    const int n = f.n;
    if (static_cast<int>(iso.vertex_perms.size()) != n)
        throw SizeMismatch("iso needs one colour permutation per layer");

    std::vector<LocalRule> rules(n);
    for (int kp = 0; kp < n; ++kp) {
        int k = iso.reflected ? mod_layer(iso.rotation - kp, n)
                              : mod_layer(kp - iso.rotation, n);
        const Perm& pm = iso.vertex_perms[kp];
        Perm left_inv = invert(iso.vertex_perms[mod_layer(kp - 1, n)]);
        Perm right_inv = invert(iso.vertex_perms[(kp + 1) % n]);
        for (Colour l = 0; l < 3; ++l)
            for (Colour r = 0; r < 3; ++r) {
                Colour v = iso.reflected ? f.rules[k](right_inv[r], left_inv[l])
                                         : f.rules[k](left_inv[l], right_inv[r]);
                rules[kp].table[l][r] = pm[v];
            }
    }
    return CycleStrategy{n, std::move(rules)};
}

namespace {

struct IsoSearch {
    const CycleStrategy& f;
    const CycleStrategy& g;
    int n;
    std::uint64_t budget;
    std::uint64_t used = 0;

    // Does g's rule at layer kp match the transported f rule, given the
    // permutations around kp?
    bool layer_consistent(int kp, int rotation, bool reflected,
                          const std::vector<Perm>& perms) {
        if (++used > budget) throw BudgetExceeded("iso search budget exhausted");
        int k = reflected ? mod_layer(rotation - kp, n) : mod_layer(kp - rotation, n);
        const Perm& pm = perms[kp];
        Perm left_inv = invert(perms[mod_layer(kp - 1, n)]);
        Perm right_inv = invert(perms[(kp + 1) % n]);
        for (Colour l = 0; l < 3; ++l)
            for (Colour r = 0; r < 3; ++r) {
                Colour v = reflected ? f.rules[k](right_inv[r], left_inv[l])
                                     : f.rules[k](left_inv[l], right_inv[r]);
                if (g.rules[kp].table[l][r] != pm[v]) return false;
            }
        return true;
    }

    bool extend(int next, int rotation, bool reflected, std::vector<Perm>& perms) {
        if (next == n) {
            // wrap-around constraints; layers 1..n-2 were checked on the way
            return layer_consistent(n - 1, rotation, reflected, perms) &&
                   layer_consistent(0, rotation, reflected, perms);
        }
        for (const Perm& p : all_perms()) {
            perms[next] = p;
            if (next >= 2 && !layer_consistent(next - 1, rotation, reflected, perms))
                continue;
            if (extend(next + 1, rotation, reflected, perms)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<StrategyIso> find_iso(const CycleStrategy& f, const CycleStrategy& g,
                                    std::uint64_t budget) {
    if (f.n != g.n) throw SizeMismatch("strategies live on different cycles");
    IsoSearch search{f, g, f.n, budget};
    std::vector<Perm> perms(f.n, kIdentityPerm);
    for (int rotation = 0; rotation < f.n; ++rotation)
        for (bool reflected : {false, true})
            if (search.extend(0, rotation, reflected, perms))
                return StrategyIso{perms, rotation, reflected};
    return std::nullopt;
}

}  // namespace hatcycle

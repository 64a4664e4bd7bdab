#include "hatcycle/prover.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <chrono>
#include <unordered_map>

#include "hatcycle/verifier.hpp"

namespace hatcycle {

namespace {

constexpr int kMaxPipeN = 24;

using TablePtrs = const LocalRule* const*;
using BoundaryColouring = std::array<EdgeColour, 9>;  // index left*3 + right

bool defeats(TablePtrs t, int n, const Colour* s) {
    for (int k = 0; k < n; ++k) {
        Colour l = s[(k + n - 1) % n];
        Colour r = s[(k + 1) % n];
        if (t[k]->table[l][r] == s[k]) return false;
    }
    return true;
}

// --- all-blue refuter -----------------------------------------------------
//
// All rows and columns of an all-blue rule are permutations, so every edge
// has exactly two admissible continuations either way. Fix the edge (0,0)
// on layers n-3, n-2 and a greedy chain back to layer 2. The two free left
// vertices give four admissible edges on the wrap boundary; the right tail
// reaches at least six distinct edges there after three steps, so the two
// families overlap and the overlap closes the cycle.
bool all_blue_defeat(TablePtrs t, int n, Colour* s) {
    s[n - 3] = 0;
    s[n - 2] = 0;
    for (int j = n - 4; j >= 2; --j) {
        Colour pick = 3;
        for (Colour v = 0; v < 3; ++v)
            if (t[j + 1]->table[v][s[j + 2]] != s[j + 1]) {
                pick = v;
                break;
            }
        if (pick == 3) return false;
        s[j] = pick;
    }

    bool left[3][3] = {};  // left[q][r]: (q at layer 0, r at layer 1) closes the tail
    for (Colour y = 0; y < 3; ++y) {
        if (t[2]->table[y][s[3]] == s[2]) continue;
        for (Colour x = 0; x < 3; ++x)
            if (t[1]->table[x][s[2]] != y) left[x][y] = true;
    }

    for (Colour p = 0; p < 3; ++p) {
        if (t[n - 2]->table[s[n - 3]][p] == s[n - 2]) continue;
        for (Colour q = 0; q < 3; ++q) {
            if (t[n - 1]->table[s[n - 2]][q] == p) continue;
            for (Colour r = 0; r < 3; ++r) {
                if (t[0]->table[p][r] == q) continue;
                if (left[q][r]) {
                    s[0] = q;
                    s[1] = r;
                    s[n - 1] = p;
                    return true;
                }
            }
        }
    }
    return false;
}

// --- monochromatic closures ------------------------------------------------

bool mono_defeat(TablePtrs t, int n, const BoundaryColouring* bnd, Colour* s) {
    std::vector<std::array<int, 3>> succ(n);
    for (EdgeColour cls : {EdgeColour::Yellow, EdgeColour::Red, EdgeColour::Blue}) {
        for (int k = 0; k < n; ++k)
            for (int b = 0; b < 3; ++b) {
                int found = -1;
                for (int c = 0; c < 3; ++c)
                    if (bnd[k][b * 3 + c] == cls) found = found < 0 ? c : -2;
                succ[k][b] = found >= 0 ? found : -1;
            }
        for (Colour v = 0; v < 3; ++v) {
            int cur = v;
            bool ok = true;
            for (int k = 0; k < n; ++k) {
                s[k] = static_cast<Colour>(cur);
                cur = succ[k][cur];
                if (cur < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok && cur == v && defeats(t, n, s)) return true;
        }
    }
    return false;
}

// The undirected defeating path of the two-row shape on even cycles:
// row word u3 u3 u1 u3 then (u3 u1)(u3 u2) alternating, tried at every
// anchor and with both labellings of the directed rows.
bool chi2_pattern_defeat(TablePtrs t, int n, const BoundaryColouring* bnd, Colour* s) {
    if (n < 6 || n % 2 != 0) return false;

    std::vector<int> u3(n);
    for (int k = 0; k < n; ++k) {
        int uncovered = -1;
        for (int b = 0; b < 3; ++b) {
            bool has_yellow = false;
            for (int c = 0; c < 3; ++c)
                if (bnd[k][b * 3 + c] == EdgeColour::Yellow) has_yellow = true;
            if (!has_yellow) uncovered = uncovered < 0 ? b : -2;
        }
        if (uncovered < 0) return false;
        u3[k] = uncovered;
    }

    for (int label = 0; label < 2; ++label) {
        std::vector<int> u1(n), u2(n);
        int first = -1, second = -1;
        for (int b = 0; b < 3; ++b)
            if (b != u3[0]) (first < 0 ? first : second) = b;
        u1[0] = label == 0 ? first : second;
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
            int nxt = -1;
            for (int c = 0; c < 3; ++c)
                if (bnd[k][u1[k] * 3 + c] == EdgeColour::Yellow) nxt = nxt < 0 ? c : -2;
            if (nxt < 0) ok = false;
            else if (k + 1 < n) u1[k + 1] = nxt;
        }
        if (!ok) continue;
        for (int k = 0; k < n; ++k) {
            u2[k] = 3 - u3[k] - u1[k];
            if (u1[k] == u3[k] || u2[k] < 0 || u2[k] > 2) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;

        for (int anchor = 0; anchor < n; ++anchor) {
            for (int i = 0; i < n; ++i) {
                int layer = (anchor + i) % n;
                int row;
                if (i == 2) row = 1;
                else if (i < 4 || i % 2 == 0) row = 3;
                else row = (i % 4 == 1) ? 1 : 2;
                s[layer] = static_cast<Colour>(row == 3   ? u3[layer]
                                               : row == 1 ? u1[layer]
                                                          : u2[layer]);
            }
            if (defeats(t, n, s)) return true;
        }
    }
    return false;
}

std::vector<BoundaryColouring> colouring_cells(const EdgeColouring& col) {
    std::vector<BoundaryColouring> bnd(col.n);
    for (int k = 0; k < col.n; ++k)
        for (int i = 0; i < 9; ++i) bnd[k][i] = col.cells[k * 9 + i];
    return bnd;
}

std::vector<const LocalRule*> table_ptrs(const CycleStrategy& f) {
    std::vector<const LocalRule*> t(f.n);
    for (int k = 0; k < f.n; ++k) t[k] = &f.rules[k];
    return t;
}

}  // namespace

Assignment defeat_all_blue(const CycleStrategy& f) {
    if (f.n < 5) throw PreconditionError("all-blue refuter needs n >= 5");
    auto col = colour_edges(f);
    if (!col) throw PreconditionError("strategy is not balanced");
    for (EdgeColour c : col->cells)
        if (c != EdgeColour::Blue) throw PreconditionError("strategy is not all-blue");

    auto t = table_ptrs(f);
    Assignment s(f.n);
    if (!all_blue_defeat(t.data(), f.n, s.data()) || correct_count(f, s) != 0)
        throw PreconditionError("all-blue closure failed");
    return s;
}

Assignment refute_chi3(const CycleStrategy& f) {
    auto chi = characteristic(f);
    if (!chi || !chi->constant || *chi->constant != 3)
        throw PreconditionError("strategy does not have constant characteristic 3");
    if (f.n % 3 == 0)
        throw PreconditionError("3 divides n: the three-row shape is not refutable");

    auto col = colour_edges(f);
    auto bnd = colouring_cells(*col);
    auto t = table_ptrs(f);
    Assignment s(f.n);
    if (!mono_defeat(t.data(), f.n, bnd.data(), s.data()))
        throw PreconditionError("no monochromatic closure found");
    return s;
}

Assignment refute_chi2(const CycleStrategy& f) {
    auto chi = characteristic(f);
    if (!chi || !chi->constant || *chi->constant != 2)
        throw PreconditionError("strategy does not have constant characteristic 2");
    if (f.n == 4) throw PreconditionError("n = 4 is the winning case");

    auto col = colour_edges(f);
    auto bnd = colouring_cells(*col);
    auto t = table_ptrs(f);
    Assignment s(f.n);
    if (f.n % 2 == 1) {
        // odd cycle: the left-directed red path closes with period n
        if (mono_defeat(t.data(), f.n, bnd.data(), s.data())) return s;
        throw PreconditionError("no directed closure on the odd cycle");
    }
    if (chi2_pattern_defeat(t.data(), f.n, bnd.data(), s.data())) return s;
    if (mono_defeat(t.data(), f.n, bnd.data(), s.data())) return s;
    throw PreconditionError("no undirected closure found");
}

Assignment close_unbalanced_path(const CycleStrategy& f, int layer, Colour v0,
                                 Colour v1, Colour v2) {
    const int n = f.n;
    if (n < 4) throw PreconditionError("path closing needs n >= 4");
    if (guess(f, layer + 1, v0, v2) == v1)
        throw PreconditionError("seed path is not admissible");
    int lm = ell(f, Edge{mod_layer(layer, n), v0, v1}, Direction::Minus);
    int lp = ell(f, Edge{mod_layer(layer + 1, n), v1, v2}, Direction::Plus);
    if (lm + lp < 5) throw PreconditionError("seed path ends are not overloaded");

    std::vector<Colour> path{v0, v1, v2};
    int start = mod_layer(layer, n);

    auto fail = [] { throw PreconditionError("path closing lost its continuations"); };

    if (lm == 3) {
        // grow right, keeping at least two admissible continuations alive
        while (static_cast<int>(path.size()) < n - 1) {
            int last = start + static_cast<int>(path.size()) - 1;
            Colour x = path[path.size() - 2];
            Colour y = path.back();
            bool grown = false;
            for (Colour d = 0; d < 3 && !grown; ++d) {
                if (guess(f, last, x, d) == y) continue;
                if (ell(f, Edge{mod_layer(last, n), y, d}, Direction::Plus) >= 2) {
                    path.push_back(d);
                    grown = true;
                }
            }
            if (!grown) fail();
        }
        int last = start + n - 2;
        Colour x = path[n - 3];
        Colour y_last = path[n - 2];
        bool closed = false;
        for (Colour y = 0; y < 3 && !closed; ++y) {
            if (guess(f, last, x, y) == y_last) continue;           // tail continuation
            if (guess(f, last + 1, y_last, path[0]) == y) continue; // wrap vertex
            path.push_back(y);
            closed = true;
        }
        if (!closed) fail();
    } else {
        // mirror: grow left, close on the right end
        while (static_cast<int>(path.size()) < n - 1) {
            Colour x = path[0];
            Colour y = path[1];
            bool grown = false;
            for (Colour a = 0; a < 3 && !grown; ++a) {
                if (guess(f, start, a, y) == x) continue;
                if (ell(f, Edge{mod_layer(start - 1, n), a, x}, Direction::Minus) >= 2) {
                    path.insert(path.begin(), a);
                    --start;
                    grown = true;
                }
            }
            if (!grown) fail();
        }
        Colour first = path[0];
        Colour second = path[1];
        bool closed = false;
        for (Colour y = 0; y < 3 && !closed; ++y) {
            if (guess(f, start, y, second) == first) continue;               // head continuation
            if (guess(f, start + n - 1, path[n - 2], first) == y) continue;  // wrap vertex
            path.push_back(y);
            closed = true;
        }
        if (!closed) fail();
    }

    Assignment s(n);
    for (int i = 0; i < n; ++i) s[mod_layer(start + i, n)] = path[i];
    if (correct_count(f, s) != 0)
        throw PreconditionError("path closing produced an invalid witness");
    return s;
}

std::vector<ColourStructure> enumerate_colour_structures(int n) {
    if (n < 5) throw DomainError("colour structures are classified for n >= 5");
    std::vector<ColourStructure> out;
    out.push_back({0, kIdentityPerm, 0, "all blue"});
    out.push_back({2, kTau, 0, "two directed rows, transposition twist"});
    out.push_back({3, kSigma, 1, "three directed rows, forward twist, red offset 1"});
    out.push_back({3, kSigma, 2, "three directed rows, forward twist, red offset 2"});
    out.push_back({3, kSigmaInv, 1, "three directed rows, backward twist, red offset 1"});
    out.push_back({3, kSigmaInv, 2, "three directed rows, backward twist, red offset 2"});
    return out;
}

const char* to_string(Conclusion c) {
    switch (c) {
        case Conclusion::NoWinningStrategy: return "no_winning_strategy";
        case Conclusion::WinningFound: return "winning_found";
        case Conclusion::Inconclusive: return "inconclusive";
    }
    return "?";
}

// --- exhaustive pipeline ----------------------------------------------------

namespace {

struct BudgetStop {};
struct WinnerFound {
    CycleStrategy strategy;
};

int req_minus(EdgeColour c) {
    return c == EdgeColour::Yellow ? 3 : c == EdgeColour::Red ? 1 : 2;
}
int req_plus(EdgeColour c) {
    return c == EdgeColour::Yellow ? 1 : c == EdgeColour::Red ? 3 : 2;
}

std::uint32_t minus_key(const BoundaryColouring& b) {
    std::uint32_t k = 0;
    for (int e = 0; e < 9; ++e) k |= static_cast<std::uint32_t>(req_minus(b[e])) << (2 * e);
    return k;
}
std::uint32_t plus_key(const BoundaryColouring& b) {
    std::uint32_t k = 0;
    for (int e = 0; e < 9; ++e) k |= static_cast<std::uint32_t>(req_plus(b[e])) << (2 * e);
    return k;
}

// All 19683 rules bucketed by (induced l+ pattern on the left boundary,
// induced l- pattern on the right boundary).
struct TableUniverse {
    std::vector<LocalRule> tables;
    std::unordered_map<std::uint64_t, std::vector<std::uint16_t>> buckets;
};

const TableUniverse& universe() {
    static const TableUniverse u = [] {
        TableUniverse u;
        u.tables.resize(19683);
        for (int idx = 0; idx < 19683; ++idx) {
            int v = idx;
            LocalRule& t = u.tables[idx];
            for (int l = 0; l < 3; ++l)
                for (int r = 0; r < 3; ++r) {
                    t.table[l][r] = static_cast<Colour>(v % 3);
                    v /= 3;
                }
            std::uint32_t minus = 0, plus = 0;
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    int m = 0, p = 0;
                    for (int a = 0; a < 3; ++a)
                        if (t.table[a][c] != b) ++m;
                    for (int d = 0; d < 3; ++d)
                        if (t.table[b][d] != c) ++p;
                    minus |= static_cast<std::uint32_t>(m) << (2 * (b * 3 + c));
                    plus |= static_cast<std::uint32_t>(p) << (2 * (b * 3 + c));
                }
            std::uint64_t key = (static_cast<std::uint64_t>(plus) << 18) | minus;
            u.buckets[key].push_back(static_cast<std::uint16_t>(idx));
        }
        return u;
    }();
    return u;
}

const std::vector<std::uint16_t>* layer_bucket(const BoundaryColouring& left,
                                               const BoundaryColouring& right) {
    std::uint64_t key =
        (static_cast<std::uint64_t>(plus_key(left)) << 18) | minus_key(right);
    auto it = universe().buckets.find(key);
    return it == universe().buckets.end() ? nullptr : &it->second;
}

struct StageCounters {
    std::uint64_t mono = 0, blue = 0, pattern = 0, l1c = 0, transfer = 0;
};

struct Pipeline {
    int n;
    ProveBudget budget;
    Certificate cert;
    std::uint64_t used = 0;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
    std::uint64_t clock_check_at = 1 << 20;

    void charge(std::uint64_t c) {
        used += c;
        if (used > budget.max_checks) throw BudgetStop{};
        if (budget.max_seconds > 0 && used >= clock_check_at) {
            clock_check_at += 1 << 20;
            std::chrono::duration<double> dt = std::chrono::steady_clock::now() - started;
            if (dt.count() > budget.max_seconds) throw BudgetStop{};
        }
    }

    CycleStrategy materialize(TablePtrs t) const {
        std::vector<LocalRule> rules(n);
        for (int k = 0; k < n; ++k) rules[k] = *t[k];
        return CycleStrategy{n, std::move(rules)};
    }

    void sample(const std::string& stage, const Colour* s) {
        if (cert.sample_witnesses.size() < 12)
            cert.sample_witnesses.emplace_back(stage, Assignment(s, s + n));
    }

    // Refutes one candidate (cheapest applicable method first) or throws
    // WinnerFound when the exact verifier says the candidate wins.
    void refute_candidate(const std::string& stage, TablePtrs t,
                          const BoundaryColouring* bnd, int chi, StageLog& log,
                          StageCounters& cnt) {
        charge(1);
        ++log.candidates;
        Colour s[kMaxPipeN];
        if (chi == 0 && n >= 5) {
            if (all_blue_defeat(t, n, s) && defeats(t, n, s)) {
                ++log.refuted;
                ++cnt.blue;
                if (cnt.blue <= 2) sample(stage, s);
                return;
            }
        } else if (chi != 0) {
            if (mono_defeat(t, n, bnd, s)) {
                ++log.refuted;
                ++cnt.mono;
                if (cnt.mono <= 2) sample(stage, s);
                return;
            }
            if (chi == 2 && chi2_pattern_defeat(t, n, bnd, s)) {
                ++log.refuted;
                ++cnt.pattern;
                if (cnt.pattern <= 2) sample(stage, s);
                return;
            }
        }
        CycleStrategy f = materialize(t);
        if (n >= 4) {
            // overloaded admissible 2-path -> constructive closure
            for (int k = 0; k < n; ++k)
                for (Colour b = 0; b < 3; ++b)
                    for (Colour c = 0; c < 3; ++c)
                        for (Colour d = 0; d < 3; ++d) {
                            if (guess(f, k + 1, b, d) == c) continue;
                            int lm = req_minus(bnd[k][b * 3 + c]);
                            int lp = req_plus(bnd[(k + 1) % n][c * 3 + d]);
                            if (lm + lp < 5) continue;
                            Assignment w = close_unbalanced_path(f, k, b, c, d);
                            ++log.refuted;
                            ++cnt.l1c;
                            if (cnt.l1c <= 2) sample(stage, w.data());
                            return;
                        }
        }
        charge(81ull * static_cast<std::uint64_t>(n));
        ++log.verifier_calls;
        Verdict v = verify(f);
        if (v.winning) throw WinnerFound{std::move(f)};
        ++log.refuted;
        ++cnt.transfer;
        if (cnt.transfer <= 2) sample(stage, v.witness->data());
    }

    // Enumerates the cartesian product of per-layer rule choices.
    void run_candidates(const std::string& stage,
                        const std::vector<const std::vector<std::uint16_t>*>& opts,
                        const BoundaryColouring* bnd, int chi, StageLog& log,
                        StageCounters& cnt) {
        ++log.structures;
        const auto& tables = universe().tables;
        std::vector<int> pick(n, 0);
        std::vector<const LocalRule*> t(n);
        for (int k = 0; k < n; ++k) t[k] = &tables[(*opts[k])[0]];
        for (;;) {
            refute_candidate(stage, t.data(), bnd, chi, log, cnt);
            int pos = n - 1;
            while (pos >= 0 && pick[pos] + 1 == static_cast<int>(opts[pos]->size())) {
                pick[pos] = 0;
                t[pos] = &tables[(*opts[pos])[0]];
                --pos;
            }
            if (pos < 0) break;
            ++pick[pos];
            t[pos] = &tables[(*opts[pos])[pick[pos]]];
        }
    }

    void finish_stage(StageLog& log, const StageCounters& cnt) {
        log.note = "mono=" + std::to_string(cnt.mono) +
                   " all_blue=" + std::to_string(cnt.blue) +
                   " pattern=" + std::to_string(cnt.pattern) +
                   " path_close=" + std::to_string(cnt.l1c) +
                   " transfer=" + std::to_string(cnt.transfer);
        cert.log.push_back(log);
    }

    void stage_chi0() {
        StageLog log;
        log.stage = "chi0-all-blue";
        StageCounters cnt;
        BoundaryColouring blue;
        blue.fill(EdgeColour::Blue);
        const auto* latin = layer_bucket(blue, blue);
        assert(latin && latin->size() == 12);

        double total = 1;
        for (int k = 0; k < n; ++k) total *= 12;
        if (total > static_cast<double>(budget.max_checks - used)) {
            log.note = "skipped: 12^n candidates exceed the remaining check budget";
            cert.log.push_back(log);
            throw BudgetStop{};
        }

        std::vector<BoundaryColouring> bnd(n, blue);
        std::vector<const std::vector<std::uint16_t>*> opts(n, latin);
        run_candidates(log.stage, opts, bnd.data(), 0, log, cnt);
        finish_stage(log, cnt);
    }

    // chi = 2: one undirected row per layer (u3), yellow matchings between
    // the two directed rows, red forced to the complementary crossing.
    void stage_chi2() {
        StageLog log;
        log.stage = "chi2-two-rows";
        StageCounters cnt;
        std::vector<int> u3(n, 0);
        std::vector<int> match(n, 0);
        std::vector<BoundaryColouring> bnd(n);
        std::vector<const std::vector<std::uint16_t>*> opts(n, nullptr);

        auto boundary = [&](int k) {
            int a0 = -1, a1 = -1, b0 = -1, b1 = -1;
            for (int v = 0; v < 3; ++v) {
                if (v != u3[k]) (a0 < 0 ? a0 : a1) = v;
                if (v != u3[k + 1 == n ? 0 : k + 1]) (b0 < 0 ? b0 : b1) = v;
            }
            BoundaryColouring& b = bnd[k];
            b.fill(EdgeColour::Blue);
            if (match[k] == 0) {
                b[a0 * 3 + b0] = b[a1 * 3 + b1] = EdgeColour::Yellow;
                b[a0 * 3 + b1] = b[a1 * 3 + b0] = EdgeColour::Red;
            } else {
                b[a0 * 3 + b1] = b[a1 * 3 + b0] = EdgeColour::Yellow;
                b[a0 * 3 + b0] = b[a1 * 3 + b1] = EdgeColour::Red;
            }
        };

        // depth k: boundary k fixed once u3[k], match[k], u3[k+1] are chosen
        auto dfs = [&](auto&& self, int k) -> void {
            if (k == n) {
                const auto* last = layer_bucket(bnd[n - 1], bnd[0]);
                charge(1);
                if (!last) return;
                opts[0] = last;
                run_candidates(log.stage, opts, bnd.data(), 2, log, cnt);
                return;
            }
            for (int m = 0; m < 2; ++m) {
                match[k] = m;
                if (k == n - 1) {
                    boundary(k);
                    const auto* bucket = layer_bucket(bnd[k - 1], bnd[k]);
                    charge(1);
                    if (!bucket) continue;
                    opts[k] = bucket;
                    self(self, k + 1);
                } else {
                    for (int v = 0; v < 3; ++v) {
                        u3[k + 1] = v;
                        boundary(k);
                        if (k >= 1) {
                            const auto* bucket = layer_bucket(bnd[k - 1], bnd[k]);
                            charge(1);
                            if (!bucket) continue;
                            opts[k] = bucket;
                        }
                        self(self, k + 1);
                    }
                }
            }
        };

        for (int v = 0; v < 3; ++v) {
            u3[0] = v;
            dfs(dfs, 0);
        }
        finish_stage(log, cnt);
    }

    // chi = 3: yellow matchings mu_k, red = mu_k composed with a derangement
    // delta_k that is conjugated along the cycle (constant in row space).
    void stage_chi3() {
        StageLog log;
        log.stage = "chi3-three-rows";
        StageCounters cnt;
        std::vector<Perm> mu(n), delta(n + 1);
        std::vector<BoundaryColouring> bnd(n);
        std::vector<const std::vector<std::uint16_t>*> opts(n, nullptr);

        auto boundary = [&](int k) {
            BoundaryColouring& b = bnd[k];
            b.fill(EdgeColour::Blue);
            for (int v = 0; v < 3; ++v) {
                b[v * 3 + mu[k][v]] = EdgeColour::Yellow;
                b[v * 3 + mu[k][delta[k][v]]] = EdgeColour::Red;
            }
        };

        auto dfs = [&](auto&& self, int k) -> void {
            if (k == n) {
                const auto* first = layer_bucket(bnd[n - 1], bnd[0]);
                charge(1);
                if (!first) return;
                opts[0] = first;
                run_candidates(log.stage, opts, bnd.data(), 3, log, cnt);
                return;
            }
            for (const Perm& m : all_perms()) {
                mu[k] = m;
                boundary(k);
                if (k >= 1) {
                    const auto* bucket = layer_bucket(bnd[k - 1], bnd[k]);
                    charge(1);
                    if (!bucket) continue;
                    opts[k] = bucket;
                }
                delta[k + 1] = compose(compose(m, delta[k]), invert(m));
                self(self, k + 1);
            }
        };

        for (const Perm& d0 : {kSigma, kSigmaInv}) {
            delta[0] = d0;
            dfs(dfs, 0);
        }
        finish_stage(log, cnt);
    }

    Certificate run() {
        cert.n = n;
        cert.lemma_dependencies = {
            "every winning strategy is balanced: l+ + l- = 4 on each edge",
            "a winning strategy has equal yellow and red counts per boundary,"
            " constant along the cycle (the characteristic)",
            "characteristic 1 is impossible; only 0, 2 and 3 occur",
            "three edges sharing an endpoint are three-coloured or all blue",
            "admissible continuations of directed edges keep their direction,"
            " so directed rows form matchings with a constant twist",
        };
        try {
            stage_chi0();
            if (n >= 4) stage_chi2();
            stage_chi3();
            cert.conclusion = Conclusion::NoWinningStrategy;
        } catch (const BudgetStop&) {
            cert.conclusion = Conclusion::Inconclusive;
            cert.budget_exceeded = true;
        } catch (WinnerFound& w) {
            cert.conclusion = Conclusion::WinningFound;
            cert.winning = std::move(w.strategy);
        }
        cert.checks_used = used;
        return std::move(cert);
    }
};

}  // namespace

Certificate run_structure_pipeline(int n, const ProveBudget& budget) {
    if (n < 3) throw DomainError("cycle length must be at least 3");
    if (n > kMaxPipeN) throw DomainError("cycle length above pipeline limit");
    Pipeline p{n, budget, {}, 0};
    return p.run();
}

Certificate prove_nonexistence(int n, const ProveBudget& budget) {
    if (n < 5 || n % 3 == 0 || n == 4)
        throw DomainError("nonexistence holds only for n >= 5 with 3 not dividing n, n != 4");
    if (n > budget.max_n) throw DomainError("n is outside the configured range");
    return run_structure_pipeline(n, budget);
}

}  // namespace hatcycle

#include "hatcycle/verifier.hpp"

#include <cassert>
#include <random>

namespace hatcycle {

TransferMatrix boundary_transfer(const CycleStrategy& f, long long k) {
    TransferMatrix t;
    const LocalRule& mid = f.rules[mod_layer(k + 1, f.n)];
    for (Colour a = 0; a < 3; ++a)
        for (Colour b = 0; b < 3; ++b)
            for (Colour c = 0; c < 3; ++c)
                if (mid(a, c) != b)
                    t.at(edge_state(a, b), edge_state(b, c)) = BigUint{1};
    return t;
}

TransferMatrix transfer_product(const TransferMatrix& a, const TransferMatrix& b) {
    TransferMatrix r;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            BigUint sum;
            for (int m = 0; m < 9; ++m) {
                const BigUint& x = a.at(i, m);
                const BigUint& y = b.at(m, j);
                if (!x.is_zero() && !y.is_zero()) sum += x * y;
            }
            r.at(i, j) = std::move(sum);
        }
    return r;
}

BigUint defeat_count(const CycleStrategy& f) {
    TransferMatrix prod = boundary_transfer(f, 0);
    for (int k = 1; k < f.n; ++k)
        prod = transfer_product(prod, boundary_transfer(f, k));
    BigUint trace;
    for (int s = 0; s < 9; ++s) trace += prod.at(s, s);
    return trace;
}

Verdict verify(const CycleStrategy& f) {
    const int n = f.n;
    // suffix[j] = T_j * ... * T_{n-1}; suffix[n] = identity
    std::vector<TransferMatrix> suffix(n + 1);
    for (int s = 0; s < 9; ++s) suffix[n].at(s, s) = BigUint{1};
    for (int j = n - 1; j >= 0; --j)
        suffix[j] = transfer_product(boundary_transfer(f, j), suffix[j + 1]);

    int start = -1;
    for (int s = 0; s < 9; ++s)
        if (!suffix[0].at(s, s).is_zero()) {
            start = s;
            break;
        }
    if (start < 0) return Verdict{true, std::nullopt};

    // Walk boundary states greedily: at boundary j in state (a,b), pick the
    // smallest c with an admissible transition that still has completions
    // back to `start`.
    Assignment w(n);
    int state = start;
    w[0] = static_cast<Colour>(start / 3);
    w[1] = static_cast<Colour>(start % 3);
    for (int j = 0; j + 1 < n; ++j) {
        Colour a = static_cast<Colour>(state / 3);
        Colour b = static_cast<Colour>(state % 3);
        int chosen = -1;
        for (Colour c = 0; c < 3; ++c) {
            if (guess(f, j + 1, a, c) == b) continue;
            int next = edge_state(b, c);
            if (!suffix[j + 1].at(next, start).is_zero()) {
                chosen = next;
                break;
            }
        }
        assert(chosen >= 0);  // guaranteed by the positive suffix count
        state = chosen;
        if (j + 2 < n) w[j + 2] = static_cast<Colour>(state % 3);
    }
    return Verdict{false, std::move(w)};
}

BruteForceResult brute_force_defeats(const CycleStrategy& f, std::uint64_t budget) {
    const int n = f.n;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > budget / 3) throw BudgetExceeded("3^n exceeds brute-force budget");
        total *= 3;
    }
    if (total > budget) throw BudgetExceeded("3^n exceeds brute-force budget");

    BruteForceResult res;
    Assignment g(n, 0);
    std::uint64_t defeats = 0;
    for (std::uint64_t it = 0;; ++it) {
        bool any_correct = false;
        for (int k = 0; k < n && !any_correct; ++k) {
            Colour l = g[(k + n - 1) % n];
            Colour r = g[(k + 1) % n];
            if (f.rules[k](l, r) == g[k]) any_correct = true;
        }
        if (!any_correct) {
            ++defeats;
            res.witnesses.push_back(g);
        }
        // lexicographic odometer, last position fastest
        int pos = n - 1;
        while (pos >= 0 && g[pos] == 2) {
            g[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++g[pos];
    }
    res.count = BigUint{defeats};
    return res;
}

Rational win_probability_fixed(const CycleStrategy& f) {
    BigUint total = BigUint::pow(3, static_cast<unsigned>(f.n));
    BigUint defeats = defeat_count(f);
    return Rational::make(total - defeats, total);
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

RandomWinEstimate random_strategy_win_probability(int n, std::uint64_t trials,
                                                  std::uint64_t seed) {
    if (n < 3) throw DomainError("cycle length must be at least 3");
    if (trials < 1) throw DomainError("need at least one trial");

    BigUint p3 = BigUint::pow(3, static_cast<unsigned>(n));
    BigUint p2 = BigUint::pow(2, static_cast<unsigned>(n));
    Rational analytic = Rational::make(p3 - p2, p3);

    std::uint64_t wins = 0;
    std::vector<LocalRule> rules(n);
    Assignment g(n);
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::mt19937_64 eng(mix64(seed ^ mix64(t)));
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < 3; ++l)
                for (int r = 0; r < 3; ++r)
                    rules[k].table[l][r] = static_cast<Colour>(eng() % 3);
        for (int k = 0; k < n; ++k) g[k] = static_cast<Colour>(eng() % 3);
        bool any_correct = false;
        for (int k = 0; k < n && !any_correct; ++k) {
            Colour l = g[(k + n - 1) % n];
            Colour r = g[(k + 1) % n];
            if (rules[k](l, r) == g[k]) any_correct = true;
        }
        if (any_correct) ++wins;
    }
    return RandomWinEstimate{analytic,
                             static_cast<double>(wins) / static_cast<double>(trials),
                             trials, seed};
}

}  // namespace hatcycle

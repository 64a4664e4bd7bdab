#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hatcycle/bigint.hpp"
#include "hatcycle/core.hpp"

// Exact winning/losing decision via a boundary-edge transfer relation.
// States are edges (left,right) of one boundary, indexed 3*left + right;
// the matrix for boundary k allows (a,b) -> (b,c) iff colour b survives as
// a wrong guess for player k+1 seeing a and c. The trace of the cyclic
// product counts defeating assignments exactly.

namespace hatcycle {

struct TransferMatrix {
    // row-major 9x9, row = source state at boundary k, column = target
    // state at boundary k+1
    std::vector<BigUint> e = std::vector<BigUint>(81);

    BigUint& at(int row, int col) { return e[row * 9 + col]; }
    const BigUint& at(int row, int col) const { return e[row * 9 + col]; }
};

inline int edge_state(Colour left, Colour right) { return left * 3 + right; }

TransferMatrix boundary_transfer(const CycleStrategy& f, long long k);

TransferMatrix transfer_product(const TransferMatrix& a, const TransferMatrix& b);

/// Exact number of assignments defeating f (zero iff f is winning).
BigUint defeat_count(const CycleStrategy& f);

struct Verdict {
    bool winning = false;
    std::optional<Assignment> witness;  // a defeating assignment when losing
};

/// Decides f and, when losing, reconstructs a deterministic witness:
/// lexicographically smallest boundary-0 state with a positive diagonal
/// entry, extended greedily by the smallest continuation that still closes.
Verdict verify(const CycleStrategy& f);

inline constexpr std::uint64_t kDefaultAssignmentBudget = 4782969;  // 3^14

struct BruteForceResult {
    BigUint count;
    std::vector<Assignment> witnesses;  // all defeats, lexicographic
};

/// Independent oracle: enumerates all 3^n assignments.
BruteForceResult brute_force_defeats(const CycleStrategy& f,
                                     std::uint64_t budget = kDefaultAssignmentBudget);

/// 1 - defeat_count(f) / 3^n against a uniformly random assignment.
Rational win_probability_fixed(const CycleStrategy& f);

struct RandomWinEstimate {
    Rational analytic;  // 1 - (2/3)^n
    double estimate = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// Monte Carlo estimate of the winning probability of a fresh uniformly
/// random strategy per trial against a uniformly random assignment.
/// Trial i draws from std::mt19937_64 seeded with mix(seed, i); each trial
/// consumes 9n table entries (row-major, layer order) then n hat colours,
/// every value taken as engine() % 3.
RandomWinEstimate random_strategy_win_probability(int n, std::uint64_t trials,
                                                  std::uint64_t seed);

}  // namespace hatcycle

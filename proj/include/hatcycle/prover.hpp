#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hatcycle/core.hpp"
#include "hatcycle/structure.hpp"

// Constructive refuters for each characteristic class and a certificate-
// producing exhaustive search proving that no winning strategy exists on a
// given (small) cycle. The search is lemma-dependent: it enumerates only
// strategy shapes that a winning strategy could have, justified by the
// structural facts listed in Certificate::lemma_dependencies, and then
// refutes or transfer-verifies every candidate individually.

namespace hatcycle {

/// Defeating assignment for a balanced all-blue strategy (n >= 5), built by
/// extending a seed edge through the two-way blue continuations and closing
/// the cycle where the four left tail edges meet the right tail extensions.
Assignment defeat_all_blue(const CycleStrategy& f);

/// Defeating assignment for a balanced strategy of constant characteristic 3
/// with 3 not dividing n: one of the three monochromatic closed paths.
Assignment refute_chi3(const CycleStrategy& f);

/// Defeating assignment for a balanced strategy of constant characteristic 2:
/// the closed red path when n is odd, the undirected period-n path through
/// the blue row when n >= 6 is even. n = 4 is rejected (the winning case).
Assignment refute_chi2(const CycleStrategy& f);

/// Closes an admissible 2-edge path whose end counts satisfy
/// l-(first) + l+(last) >= 5 into a defeating assignment (n >= 4).
Assignment close_unbalanced_path(const CycleStrategy& f, int layer, Colour v0,
                                 Colour v1, Colour v2);

struct ColourStructure {
    int chi = 0;
    Perm twist = kIdentityPerm;  // sigma for chi=3, tau for chi=2
    int red_shift = 0;           // chi=3: red row offset below yellow (1 or 2)
    std::string name;
};

/// The per-boundary colour arrangements a winning strategy could carry for
/// n >= 5: all-blue, the two-yellow-row transposition shape, and the
/// three-row shapes with a rotation twist and either red offset.
std::vector<ColourStructure> enumerate_colour_structures(int n);

struct ProveBudget {
    std::uint64_t max_checks = 1000000000;
    int max_n = 10;
    double max_seconds = 0;  // wall-clock cap, 0 = unlimited
};

enum class Conclusion { NoWinningStrategy, WinningFound, Inconclusive };

const char* to_string(Conclusion c);

struct StageLog {
    std::string stage;
    std::uint64_t structures = 0;   // complete boundary colourings examined
    std::uint64_t candidates = 0;   // full strategies enumerated
    std::uint64_t refuted = 0;
    std::uint64_t verifier_calls = 0;
    std::string note;               // per-method refutation tallies
};

struct Certificate {
    int n = 0;
    Conclusion conclusion = Conclusion::Inconclusive;
    std::optional<CycleStrategy> winning;
    std::vector<StageLog> log;
    std::vector<std::string> lemma_dependencies;
    // a bounded sample of refuted candidates: (stage, witness)
    std::vector<std::pair<std::string, Assignment>> sample_witnesses;
    bool budget_exceeded = false;
    std::uint64_t checks_used = 0;
};

/// Full pipeline without the divisibility guard; surfaces a winning
/// candidate when one exists (3|n or n=4), used directly by tests.
Certificate run_structure_pipeline(int n, const ProveBudget& budget = {});

/// Certificate that no winning strategy exists on C_n. Requires n >= 5,
/// 3 not dividing n, n != 4, n within the configured range. A certificate
/// that ran out of budget is returned as Inconclusive with a partial log.
Certificate prove_nonexistence(int n, const ProveBudget& budget = {});

}  // namespace hatcycle

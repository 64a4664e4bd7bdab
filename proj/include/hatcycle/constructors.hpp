#pragma once

#include <array>
#include <optional>

#include "hatcycle/core.hpp"

// Exact reproductions of the published strategies plus the existence
// dispatcher (winning strategy iff 3|n or n=4).

namespace hatcycle {

/// The chi=3 guess table, 0-based: published rows [[2,1,1],[2,3,2],[3,3,1]].
LocalRule chi3_table();

/// The chi=2 guess table, 0-based: published rows [[3,1,1],[2,3,2],[2,1,3]].
LocalRule chi2_table();

/// Strategy whose rule is `table` in row coordinates that twist by `wrap`
/// once per period: identity labelling on layers 0..n-1, so rules 1..n-2
/// are the table itself, rule 0 reads its left neighbour through `wrap`,
/// and rule n-1 reads its right neighbour through wrap^-1. Consistency of
/// the cyclic definition requires table(wrap i, wrap j) = wrap(table(i,j)).
CycleStrategy twisted_uniform_strategy(int n, const LocalRule& table, const Perm& wrap);

/// C_3 strategy from the alternative A=-B-C, B=-C-A-1, C=-A-B+1.
CycleStrategy algebraic_c3();

/// C_4 strategy from the alternative A=D+B, B=-A-C, C=B-D, D=C-A.
CycleStrategy algebraic_c4();

/// Characteristic-3 family: winning exactly when 3 divides n.
CycleStrategy chi3_strategy(int n);

/// Characteristic-2 family on even cycles: winning exactly for n=4.
CycleStrategy chi2_strategy(int n);

/// Winning strategy when one exists (3|n -> chi3, n=4 -> chi2), else nullopt.
std::optional<CycleStrategy> construct_winning(int n);

}  // namespace hatcycle

#pragma once

#include <string>

#include "json.hpp"

#include "hatcycle/core.hpp"
#include "hatcycle/general.hpp"
#include "hatcycle/prover.hpp"

// Canonical JSON formats. Keys are emitted in sorted order and arrays in
// fixed order so outputs are byte-stable.
//
//   strategy:    {"n": 4, "rules": [[[r00,r01,r02],[r10,...],[r20,...]], ...]}
//   assignment:  {"colours": [c0, ..., c_{n-1}]}
//   game:        {"edges": [["a","b"], ...], "heights": {"a": 2, ...},
//                 "vertices": ["a", "b", ...]}
//   general:     {"rules": {"a": [g0, g1, ...], ...}} with observations
//                indexed in mixed radix over the ascending in-neighbours

namespace hatcycle {

nlohmann::ordered_json strategy_to_json(const CycleStrategy& f);
CycleStrategy strategy_from_json(const nlohmann::json& j);

nlohmann::ordered_json assignment_to_json(const Assignment& a);
Assignment assignment_from_json(const nlohmann::json& j);

nlohmann::ordered_json game_to_json(const VisibilityGame& g);
VisibilityGame game_from_json(const nlohmann::json& j);

GeneralStrategy general_strategy_from_json(const VisibilityGame& game,
                                           const nlohmann::json& j);

nlohmann::ordered_json certificate_to_json(const Certificate& c);

}  // namespace hatcycle

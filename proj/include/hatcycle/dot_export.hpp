#pragma once

#include <string>

#include "hatcycle/core.hpp"
#include "hatcycle/structure.hpp"

namespace hatcycle {

/// Graphviz text for the coloured enlarged graph: layers left to right,
/// node v_k_i for colour i of player k, yellow edges pointing right, red
/// pointing left, blue undirected. Byte-stable for a given input.
std::string export_dot(const CycleStrategy& f, const EdgeColouring& c);

}  // namespace hatcycle

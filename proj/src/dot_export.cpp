#include "hatcycle/dot_export.hpp"

#include <sstream>

namespace hatcycle {

std::string export_dot(const CycleStrategy& f, const EdgeColouring& c) {
    if (c.n != f.n) throw PreconditionError("colouring does not match the strategy");
    std::ostringstream os;
    os << "digraph strategy {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle];\n";
    for (int k = 0; k < f.n; ++k) {
        os << "  { rank=same;";
        for (int i = 0; i < 3; ++i) os << " v_" << k << "_" << i << ";";
        os << " }\n";
    }
    for (int k = 0; k < f.n; ++k) {
        int next = (k + 1) % f.n;
        for (Colour b = 0; b < 3; ++b)
            for (Colour d = 0; d < 3; ++d) {
                EdgeColour col = c.at(k, b, d);
                os << "  v_" << k << "_" << static_cast<int>(b) << " -> v_" << next
                   << "_" << static_cast<int>(d);
                switch (col) {
                    case EdgeColour::Yellow:
                        os << " [color=gold3];\n";
                        break;
                    case EdgeColour::Red:
                        os << " [color=red, dir=back];\n";
                        break;
                    case EdgeColour::Blue:
                        os << " [color=blue, dir=none];\n";
                        break;
                }
            }
    }
    os << "}\n";
    return os.str();
}

}  // namespace hatcycle

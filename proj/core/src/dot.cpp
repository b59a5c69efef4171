#include "strata/dot.hpp"

#include <sstream>

namespace strata {

std::string dual_graph_dot(const StrataStructure& s, const std::optional<NodalData>& n) {
    StratumSet separator;
    StratumSet nodal;
    if (n) {
        separator = separating_blocks(s, *n).separator_set;
        nodal = n->level_two();
    }
    std::ostringstream out;
    out << "graph dual {\n";
    for (IndexId i : s.indices()) {
        std::string label;
        for (char c : s.name_of(i)) {
            if (c == '"' || c == '\\') label += '\\';
            label += c;
        }
        out << "  " << i << " [label=\"" << label << "\"];\n";
    }
    for (const auto& e : s.level(2)) {
        out << "  " << e.members()[0] << " -- " << e.members()[1];
        if (separator.count(e)) {
            out << " [style=bold,color=red]";
        } else if (nodal.count(e)) {
            out << " [style=dashed]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace strata

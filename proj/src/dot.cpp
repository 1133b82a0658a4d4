#include "prepro/dot.hpp"

#include <sstream>

namespace prepro {

std::string to_dot(const Quiver& q, const std::optional<WeightGrading>& g) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    os << "  rankdir=LR;\n";
    for (const auto& v : q.vertices())
        os << "  v" << v.id << " [label=\"" << v.label << "\"];\n";
    for (const auto& a : q.arrows()) {
        int degree = 0;
        if (g) {
            auto it = g->find(a.id);
            if (it != g->end()) degree = it->second;
        }
        os << "  v" << a.source << " -> v" << a.target << " [label=\"" << a.label << "\"";
        if (degree >= 1) os << ", color=red";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace prepro

#include "frob/dot.hpp"

#include "frob/polynomial.hpp"

#include <sstream>

namespace frob {

std::string quiver_dot(const GConstellation& c) {
    std::ostringstream os;
    const auto& act = c.action();
    os << "digraph mckay {\n  rankdir=LR;\n";
    for (std::size_t v = 0; v < c.vertex_count(); ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
    for (const auto& a : mckay_quiver(act).arrows) {
        const auto value = c.coeff(a.variable, a.source);
        os << "  v" << a.source << " -> v" << a.target << " [label=\"" << variable_name(a.variable, act.dim())
           << "=" << value << "\"" << (value == 0 ? ", style=dashed" : "") << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string staircase_dot(const std::vector<GGraph>& graphs) {
    std::ostringstream os;
    os << "graph staircases {\n  node [shape=box];\n";
    for (std::size_t g = 0; g < graphs.size(); ++g) {
        os << "  subgraph cluster_" << g << " {\n    label=\"" << to_string(graphs[g]) << "\";\n";
        for (const auto& m : graphs[g].monomials) {
            Monomial mono({static_cast<std::uint32_t>(m[0]), static_cast<std::uint32_t>(m[1])});
            os << "    g" << g << "_" << m[0] << "_" << m[1] << " [label=\"" << to_string(mono) << "\", pos=\""
               << m[0] << "," << m[1] << "!\"];\n";
        }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

std::string fan_dot(const Fan2& fan) {
    std::ostringstream os;
    os << "graph fan {\n  o [label=\"0\", shape=point];\n";
    for (std::size_t k = 0; k < fan.rays.size(); ++k)
        os << "  r" << k << " [label=\"" << to_string(fan.rays[k]) << "/" << fan.scale << "\", pos=\""
           << fan.rays[k][0] << "," << fan.rays[k][1] << "!\"];\n  o -- r" << k << ";\n";
    for (const auto& c : fan.cones) os << "  r" << c[0] << " -- r" << c[1] << " [style=dotted];\n";
    os << "}\n";
    return os.str();
}

} // namespace frob

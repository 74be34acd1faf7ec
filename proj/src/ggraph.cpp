#include "frob/ggraph.hpp"

#include "frob/polynomial.hpp"

#include <algorithm>
#include <set>

namespace frob {

GGraph make_g_graph(std::vector<Vec2> monomials) {
    std::sort(monomials.begin(), monomials.end(), [](const Vec2& a, const Vec2& b) {
        if (a[0] + a[1] != b[0] + b[1]) return a[0] + a[1] < b[0] + b[1];
        return a[0] > b[0];
    });
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    return {std::move(monomials)};
}

std::string g_graph_defect(const GGraph& graph, const AbelianAction& action) {
    if (action.dim() != 2) return "G-graphs need an action on two variables";
    std::set<Vec2> members(graph.monomials.begin(), graph.monomials.end());
    if (members.size() != graph.monomials.size()) return "repeated monomial";
    if (graph.monomials.size() != action.order()) return "size differs from the group order";
    if (!members.count({0, 0})) return "missing the monomial 1";
    std::set<Character> seen;
    for (const auto& m : graph.monomials) {
        if (m[0] < 0 || m[1] < 0) return "negative exponent";
        if ((m[0] > 0 && !members.count({m[0] - 1, m[1]})) || (m[1] > 0 && !members.count({m[0], m[1] - 1})))
            return "not closed under division";
        auto w = weight_of(action, {static_cast<std::uint32_t>(m[0]), static_cast<std::uint32_t>(m[1])});
        if (!seen.insert(w).second) return "two monomials share a character";
    }
    return {};
}

std::string to_string(const GGraph& graph) {
    std::string s = "{";
    for (std::size_t k = 0; k < graph.monomials.size(); ++k) {
        if (k) s += ",";
        const auto& m = graph.monomials[k];
        s += to_string(Monomial({static_cast<std::uint32_t>(m[0]), static_cast<std::uint32_t>(m[1])}));
    }
    return s + "}";
}

} // namespace frob

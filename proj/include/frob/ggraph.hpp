#pragma once

#include "frob/abelian.hpp"
#include "frob/lattice.hpp"

#include <string>
#include <vector>

namespace frob {

/// Order ideal of monomials x^a y^b in two variables containing exactly one monomial of each
/// character. Monomials are kept sorted by degree, then x-exponent descending.
struct GGraph {
    std::vector<Vec2> monomials;

    bool operator==(const GGraph&) const = default;
};

GGraph make_g_graph(std::vector<Vec2> monomials);

/// Reason the graph is not a G-graph for the action, or empty when it is one.
std::string g_graph_defect(const GGraph& graph, const AbelianAction& action);

/// `{1,x,x^2}` style listing.
std::string to_string(const GGraph& graph);

} // namespace frob

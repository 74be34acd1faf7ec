#pragma once

#include "frob/abelian.hpp"
#include "frob/fan.hpp"
#include "frob/ggraph.hpp"

#include <optional>
#include <vector>

namespace frob {

/// All G-graphs of a small cyclic action on the plane, ordered by the length of their first
/// row (powers of x), longest first.
std::vector<GGraph> enumerate_g_graphs(const AbelianAction& action);

/// n * N_G for the action 1/n(1, a): vectors v with v_2 = a v_1 mod n.
Lattice2 scaled_cocharacter_lattice(const AbelianAction& action);

/// (n, a) with the action written as 1/n(1, a).
std::pair<std::int64_t, std::int64_t> normalized_weights(const AbelianAction& action);

/// Locus in the first quadrant where each graph monomial minimizes the pairing among the
/// covariant generators of its character, with rays primitive in n * N_G. Empty when that
/// locus has no interior.
std::optional<Cone2> g_graph_cone(const GGraph& graph, const AbelianAction& action);

/// Fan of the G-Hilbert scheme assembled from all graph cones. Throws invariant_error when the
/// cones fail to tile the quadrant.
Fan2 hilb_fan(const AbelianAction& action);

} // namespace frob

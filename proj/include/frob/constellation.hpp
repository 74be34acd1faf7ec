#pragma once

#include "frob/abelian.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace frob {

struct McKayArrow {
    std::size_t variable;
    std::size_t source;
    std::size_t target;
};

/// Vertices are character indices of the action; arrow (i, chi) runs chi -> chi + w_i.
struct McKayQuiver {
    std::size_t vertex_count = 0;
    std::vector<McKayArrow> arrows;
};

McKayQuiver mckay_quiver(const AbelianAction& action);

/// Multiplicity-one S[G]-module: one line per character, x_i acting by a scalar from the
/// chi-line to the (chi + w_i)-line.
class GConstellation {
public:
    explicit GConstellation(AbelianAction action);
    /// Entries are reduced mod p; missing entries are 0.
    GConstellation(AbelianAction action, const std::map<std::pair<std::size_t, std::size_t>, std::int64_t>& coeff);

    const AbelianAction& action() const noexcept { return action_; }
    std::uint32_t coeff(std::size_t variable, std::size_t chi) const { return coeff_[variable * n_ + chi]; }
    void set_coeff(std::size_t variable, std::size_t chi, std::int64_t value);
    /// Index of chi + w_i.
    std::size_t target(std::size_t variable, std::size_t chi) const { return targets_[variable * n_ + chi]; }
    std::size_t vertex_count() const noexcept { return n_; }

private:
    AbelianAction action_;
    std::size_t n_;
    std::vector<std::uint32_t> coeff_;
    std::vector<std::size_t> targets_;
};

struct ConstellationCheck {
    bool valid = true;
    bool at_origin = true;
    std::vector<std::string> violations;
};

ConstellationCheck check_constellation(const GConstellation& c);

/// Vertex subsets closed along nonzero arrows, as bitmasks over character indices, ascending.
/// These are exactly the submodules. Requires at most 20 characters.
std::vector<std::uint64_t> closed_subset_masks(const GConstellation& c);
std::vector<std::vector<std::size_t>> closed_subsets(const GConstellation& c);

/// Integer weights indexed by character index.
using Theta = std::vector<std::int64_t>;
/// Nonnegative entries indexed by character index.
using DimensionVector = std::vector<std::uint64_t>;

/// Entry at chi is the multiplicity of -chi.
DimensionVector dimension_vector(const AbelianAction& action, const std::vector<std::uint64_t>& multiplicities);

enum class Stability { stable, semistable_only, unstable };
std::string to_string(Stability s);

/// Sign pattern of theta on the proper nonempty submodules. A constellation without such
/// submodules is stable for every theta.
Stability theta_stability(const GConstellation& c, const Theta& theta);

/// lambda[chi] = theta[-chi]
std::vector<std::int64_t> theta_to_lambda(const Theta& theta, const AbelianAction& action);

/// No alpha' with 0 <= alpha' <= alpha, alpha' not in {0, alpha}, has (lambda, alpha') = 0.
bool is_generic(const std::vector<std::int64_t>& lambda, const std::vector<std::uint64_t>& alpha);

/// Torus-fixed G-cluster spanned by the monomials of a G-graph (exponent pairs).
struct GGraph;
GConstellation g_cluster_from_graph(const GGraph& graph, const AbelianAction& action);

} // namespace frob

#include "frob/constellation.hpp"

#include "frob/errors.hpp"
#include "frob/fp.hpp"
#include "frob/ggraph.hpp"
#include "frob/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace frob {

McKayQuiver mckay_quiver(const AbelianAction& action) {
    McKayQuiver q;
    q.vertex_count = action.character_count();
    for (std::size_t i = 0; i < action.dim(); ++i)
        for (std::size_t chi = 0; chi < q.vertex_count; ++chi)
            q.arrows.push_back({i, chi, action.index_of(action.add(action.character(chi), action.weights()[i]))});
    return q;
}

GConstellation::GConstellation(AbelianAction action)
    : action_(std::move(action)), n_(action_.character_count()), coeff_(action_.dim() * n_, 0),
      targets_(action_.dim() * n_, 0) {
    for (const auto& a : mckay_quiver(action_).arrows) targets_[a.variable * n_ + a.source] = a.target;
}

GConstellation::GConstellation(AbelianAction action,
                               const std::map<std::pair<std::size_t, std::size_t>, std::int64_t>& coeff)
    : GConstellation(std::move(action)) {
    for (const auto& [key, value] : coeff) set_coeff(key.first, key.second, value);
}

void GConstellation::set_coeff(std::size_t variable, std::size_t chi, std::int64_t value) {
    if (variable >= action_.dim() || chi >= n_)
        throw precondition_error("arrow (" + std::to_string(variable) + ", " + std::to_string(chi) +
                                 ") is not in the McKay quiver");
    coeff_[variable * n_ + chi] = fp::reduce(value, action_.p());
}

ConstellationCheck check_constellation(const GConstellation& c) {
    ConstellationCheck r;
    const auto& act = c.action();
    const auto p = act.p();
    const auto d = act.dim();
    const auto n = c.vertex_count();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t chi = 0; chi < n; ++chi) {
                auto lhs = fp::mul(c.coeff(j, c.target(i, chi)), c.coeff(i, chi), p);
                auto rhs = fp::mul(c.coeff(i, c.target(j, chi)), c.coeff(j, chi), p);
                if (lhs != rhs) {
                    r.valid = false;
                    r.violations.push_back(variable_name(i, d) + " and " + variable_name(j, d) +
                                           " do not commute at vertex " + std::to_string(chi));
                }
            }
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<char> seen(n, 0);
        for (std::size_t start = 0; start < n; ++start) {
            if (seen[start]) continue;
            std::uint32_t product = 1;
            auto v = start;
            do {
                seen[v] = 1;
                product = fp::mul(product, c.coeff(i, v), p);
                v = c.target(i, v);
            } while (v != start);
            if (product != 0) r.at_origin = false;
        }
    }
    return r;
}

std::vector<std::uint64_t> closed_subset_masks(const GConstellation& c) {
    const auto n = c.vertex_count();
    if (n > 20) throw precondition_error("closed-subset enumeration is limited to 20 characters");
    std::vector<std::uint64_t> succ(n, 0);
    for (std::size_t i = 0; i < c.action().dim(); ++i)
        for (std::size_t chi = 0; chi < n; ++chi)
            if (c.coeff(i, chi) != 0) succ[chi] |= std::uint64_t{1} << c.target(i, chi);
    return kernels::closed_subsets(succ);
}

std::vector<std::vector<std::size_t>> closed_subsets(const GConstellation& c) {
    std::vector<std::vector<std::size_t>> out;
    for (auto mask : closed_subset_masks(c)) {
        std::vector<std::size_t> s;
        for (std::size_t v = 0; v < c.vertex_count(); ++v)
            if (mask >> v & 1) s.push_back(v);
        out.push_back(std::move(s));
    }
    return out;
}

DimensionVector dimension_vector(const AbelianAction& action, const std::vector<std::uint64_t>& multiplicities) {
    if (multiplicities.size() != action.character_count())
        throw precondition_error("expected one multiplicity per character");
    DimensionVector out(multiplicities.size());
    for (std::size_t chi = 0; chi < out.size(); ++chi)
        out[chi] = multiplicities[action.index_of(action.negate(action.character(chi)))];
    return out;
}

std::string to_string(Stability s) {
    switch (s) {
    case Stability::stable: return "stable";
    case Stability::semistable_only: return "semistable_only";
    case Stability::unstable: return "unstable";
    }
    return "unknown";
}

namespace {

void require_balanced(const Theta& theta, std::size_t n) {
    if (theta.size() != n) throw precondition_error("theta needs one value per character");
    if (std::accumulate(theta.begin(), theta.end(), std::int64_t{0}) != 0)
        throw precondition_error("theta must sum to zero");
}

} // namespace

Stability theta_stability(const GConstellation& c, const Theta& theta) {
    const auto n = c.vertex_count();
    require_balanced(theta, n);
    auto check = check_constellation(c);
    if (!check.valid) throw precondition_error("not a constellation: " + check.violations.front());
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    bool zero_seen = false;
    for (auto mask : closed_subset_masks(c)) {
        if (mask == 0 || mask == full) continue;
        std::int64_t value = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1) value += theta[v];
        if (value < 0) return Stability::unstable;
        if (value == 0) zero_seen = true;
    }
    return zero_seen ? Stability::semistable_only : Stability::stable;
}

std::vector<std::int64_t> theta_to_lambda(const Theta& theta, const AbelianAction& action) {
    require_balanced(theta, action.character_count());
    std::vector<std::int64_t> out(theta.size());
    for (std::size_t chi = 0; chi < out.size(); ++chi)
        out[chi] = theta[action.index_of(action.negate(action.character(chi)))];
    return out;
}

bool is_generic(const std::vector<std::int64_t>& lambda, const std::vector<std::uint64_t>& alpha) {
    if (lambda.size() != alpha.size()) throw precondition_error("lambda and alpha differ in length");
    // Reachable pairings, remembering whether the partial vector is still zero or still full.
    std::set<std::tuple<std::int64_t, bool, bool>> states{{0, true, true}};
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        std::set<std::tuple<std::int64_t, bool, bool>> next;
        for (const auto& s : states) {
            auto [value, zero, full] = s;
            for (std::uint64_t t = 0; t <= alpha[k]; ++t)
                next.emplace(value + lambda[k] * static_cast<std::int64_t>(t), zero && t == 0, full && t == alpha[k]);
        }
        states = std::move(next);
    }
    for (const auto& s : states) {
        auto [value, zero, full] = s;
        if (value == 0 && !zero && !full) return false;
    }
    return true;
}

GConstellation g_cluster_from_graph(const GGraph& graph, const AbelianAction& action) {
    if (auto defect = g_graph_defect(graph, action); !defect.empty())
        throw precondition_error("invalid G-graph: " + defect);
    GConstellation c(action);
    for (const auto& m : graph.monomials) {
        const auto chi = action.index_of(weight_of(action, {static_cast<std::uint32_t>(m[0]), static_cast<std::uint32_t>(m[1])}));
        for (std::size_t i = 0; i < 2; ++i) {
            Vec2 next = m;
            ++next[i];
            if (std::find(graph.monomials.begin(), graph.monomials.end(), next) != graph.monomials.end())
                c.set_coeff(i, chi, 1);
        }
    }
    return c;
}

} // namespace frob

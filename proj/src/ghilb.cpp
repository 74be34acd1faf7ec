#include "frob/ghilb.hpp"

#include "frob/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace frob {

namespace {

void require_plane_cyclic(const AbelianAction& action) {
    if (!action.is_cyclic() || action.dim() != 2)
        throw precondition_error("expected a cyclic action on two variables, got " + action.describe());
    if (!is_small(action)) throw precondition_error(action.describe() + " contains pseudo-reflections");
    if (!action.is_tame()) throw precondition_error("wild action: p divides |G|");
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
    for (std::int64_t k = 1; k < n; ++k)
        if ((a * k) % n == 1) return k;
    return n == 1 ? 0 : -1;
}

} // namespace

std::pair<std::int64_t, std::int64_t> normalized_weights(const AbelianAction& action) {
    require_plane_cyclic(action);
    const auto n = static_cast<std::int64_t>(action.order());
    if (n == 1) return {1, 0};
    const auto w1 = static_cast<std::int64_t>(action.weights()[0].residues[0]);
    const auto w2 = static_cast<std::int64_t>(action.weights()[1].residues[0]);
    const auto inv = inverse_mod(w1, n);
    if (inv < 0) throw precondition_error("first weight is not a unit mod n");
    return {n, (w2 * inv) % n};
}

Lattice2 scaled_cocharacter_lattice(const AbelianAction& action) {
    auto [n, a] = normalized_weights(action);
    return {1, a, n};
}

std::vector<GGraph> enumerate_g_graphs(const AbelianAction& action) {
    require_plane_cyclic(action);
    const auto n = static_cast<std::int64_t>(action.order());
    std::vector<GGraph> out;
    std::vector<std::int64_t> rows;
    // Partitions of n with parts listed largest first, generated in decreasing lex order.
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t remaining, std::int64_t cap) {
        if (remaining == 0) {
            std::vector<Vec2> mons;
            for (std::size_t j = 0; j < rows.size(); ++j)
                for (std::int64_t i = 0; i < rows[j]; ++i) mons.push_back({i, static_cast<std::int64_t>(j)});
            auto g = make_g_graph(std::move(mons));
            if (g_graph_defect(g, action).empty()) out.push_back(std::move(g));
            return;
        }
        for (auto part = std::min(remaining, cap); part >= 1; --part) {
            rows.push_back(part);
            rec(remaining - part, part);
            rows.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::optional<Cone2> g_graph_cone(const GGraph& graph, const AbelianAction& action) {
    if (auto defect = g_graph_defect(graph, action); !defect.empty())
        throw precondition_error("invalid G-graph: " + defect);
    const auto lattice = scaled_cocharacter_lattice(action);

    std::vector<Vec2> constraints;
    for (const auto& m : graph.monomials) {
        const auto chi = weight_of(action, {static_cast<std::uint32_t>(m[0]), static_cast<std::uint32_t>(m[1])});
        for (const auto& g : covariant_generators(action, chi)) {
            Vec2 c{static_cast<std::int64_t>(g[0]) - m[0], static_cast<std::int64_t>(g[1]) - m[1]};
            if (c != Vec2{0, 0}) constraints.push_back(c);
        }
    }
    auto in_quadrant = [](const Vec2& v) { return v[0] >= 0 && v[1] >= 0 && v != Vec2{0, 0}; };
    auto feasible = [&](const Vec2& v) {
        return std::all_of(constraints.begin(), constraints.end(), [&](const Vec2& c) { return dot(v, c) >= 0; });
    };
    std::vector<Vec2> candidates{{1, 0}, {0, 1}};
    for (const auto& c : constraints)
        for (const Vec2& perp : {Vec2{c[1], -c[0]}, Vec2{-c[1], c[0]}})
            if (in_quadrant(perp)) candidates.push_back(primitive(perp));
    std::vector<Vec2> ok;
    for (const auto& v : candidates)
        if (feasible(v)) ok.push_back(v);
    if (ok.empty()) return std::nullopt;
    auto lo = *std::min_element(ok.begin(), ok.end(), [](const Vec2& a, const Vec2& b) { return cross(a, b) > 0; });
    auto hi = *std::max_element(ok.begin(), ok.end(), [](const Vec2& a, const Vec2& b) { return cross(a, b) > 0; });
    if (cross(lo, hi) <= 0) return std::nullopt;
    return Cone2{{lattice.primitive_on_ray(lo), lattice.primitive_on_ray(hi)}};
}

Fan2 hilb_fan(const AbelianAction& action) {
    const auto [n, a] = normalized_weights(action);
    const auto lattice = scaled_cocharacter_lattice(action);
    std::vector<Cone2> cones;
    std::vector<std::string> warnings;
    for (const auto& g : enumerate_g_graphs(action)) {
        if (auto c = g_graph_cone(g, action))
            cones.push_back(*c);
        else
            warnings.push_back("G-graph " + to_string(g) + " has a cone without interior; excluded");
    }
    std::sort(cones.begin(), cones.end(), [](const Cone2& x, const Cone2& y) { return cross(x.rays[0], y.rays[0]) > 0; });
    if (cones.empty()) throw invariant_error("no G-graph cones for " + action.describe());
    const auto start = lattice.primitive_on_ray({1, 0});
    const auto end = lattice.primitive_on_ray({0, 1});
    if (cones.front().rays[0] != start || cones.back().rays[1] != end)
        throw invariant_error("G-graph cones do not cover the quadrant");
    for (std::size_t k = 0; k + 1 < cones.size(); ++k)
        if (cones[k].rays[1] != cones[k + 1].rays[0])
            throw invariant_error("G-graph cones " + to_string(cones[k].rays[1]) + " and " +
                                  to_string(cones[k + 1].rays[0]) + " do not abut");
    Fan2 f;
    f.lattice = lattice;
    f.scale = n;
    f.tag = std::make_pair(n, a);
    f.rays.push_back(start);
    for (const auto& c : cones) f.rays.push_back(c.rays[1]);
    for (std::size_t k = 0; k + 1 < f.rays.size(); ++k) f.cones.push_back({k, k + 1});
    f.warnings = std::move(warnings);
    return f;
}

} // namespace frob

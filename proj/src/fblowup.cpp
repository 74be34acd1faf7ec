#include "frob/fblowup.hpp"

#include "frob/errors.hpp"
#include "frob/ghilb.hpp"

#include <algorithm>
#include <set>

namespace frob {

ToricSurfaceData quotient_toric_model(const AbelianAction& action) {
    const auto [n, a] = normalized_weights(action);
    std::vector<Vec2> invariants;
    for (std::int64_t x = 0; x <= n; ++x)
        for (std::int64_t y = 0; y <= n; ++y)
            if ((x || y) && weight_of(action, {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)}) ==
                                action.character(0))
                invariants.push_back({x, y});
    auto gamma = AffineSemigroup::planar(invariants);
    if (!gamma.is_saturated()) throw invariant_error("invariant semigroup of " + action.describe() + " is not saturated");
    return {std::move(gamma), std::make_pair(n, a)};
}

std::vector<ResiduePiece> frobenius_pieces(const ToricSurfaceData& toric, std::int64_t q) {
    return residue_decomposition(toric.semigroup, q, ResidueBase::qth_powers);
}

std::int64_t model_scale(const ToricSurfaceData& toric) { return toric.semigroup.lattice().index(); }

Lattice2 scaled_dual_lattice(const ToricSurfaceData& toric) { return toric.semigroup.lattice().scaled_dual(); }

std::vector<Vec2> module_fan(const FractionalMonomialModule& piece) {
    const auto& base = piece.base();
    if (base.rank() != 2 || !base.is_saturated()) throw precondition_error("module_fan needs a saturated rank-2 base");
    const auto rays = base.rays();
    const auto& gens = piece.generators();
    std::vector<Vec2> out;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const auto diff = gens[i] - gens[j];
            Vec2 d{-diff[1], diff[0]};
            if (dot(d, rays[0]) < 0) d = Vec2{0, 0} - d;
            if (dot(d, rays[0]) <= 0 || dot(d, rays[1]) <= 0) continue;
            const auto level = dot(d, gens[i]);
            bool attains_min = std::all_of(gens.begin(), gens.end(), [&](const Vec2& g) { return dot(d, g) >= level; });
            if (attains_min) out.push_back(primitive(d));
        }
    sort_counterclockwise(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Fan2 fblowup_fan(const ToricSurfaceData& toric, std::int64_t q) {
    const auto& gamma = toric.semigroup;
    if (gamma.rank() != 2 || !gamma.is_saturated()) throw precondition_error("F-blowup fans need a saturated surface");
    const auto pieces = frobenius_pieces(toric, q);
    std::vector<std::vector<Vec2>> per_piece(pieces.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < pieces.size(); ++k) per_piece[k] = module_fan(pieces[k].module);

    auto normals = gamma.normals();
    std::vector<Vec2> directions{normals[0], normals[1]};
    for (const auto& rs : per_piece) directions.insert(directions.end(), rs.begin(), rs.end());
    auto fan = fan_from_directions(std::move(directions), scaled_dual_lattice(toric), model_scale(toric));
    fan.tag = toric.tag;
    return fan;
}

FanComparison compare_fans(const Fan2& hilb, const Fan2& fb, const AbelianAction& action, std::int64_t q) {
    if (!(hilb.lattice == fb.lattice) || hilb.scale != fb.scale)
        throw precondition_error("lattice isomorphism not found between the two fans");
    FanComparison r;
    r.below_bound = q < static_cast<std::int64_t>(action.order());
    const auto a = hilb.interior_rays();
    const auto b = fb.interior_rays();
    std::set<Vec2> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    for (const auto& v : a) (sb.count(v) ? r.matched_rays : r.only_in_hilb).push_back(v);
    for (const auto& v : b)
        if (!sa.count(v)) r.only_in_fblowup.push_back(v);
    r.equal = r.only_in_hilb.empty() && r.only_in_fblowup.empty() && hilb.rays.front() == fb.rays.front() &&
              hilb.rays.back() == fb.rays.back();
    return r;
}

} // namespace frob

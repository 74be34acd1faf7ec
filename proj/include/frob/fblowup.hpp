#pragma once

#include "frob/abelian.hpp"
#include "frob/fan.hpp"
#include "frob/monomial_module.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace frob {

/// Normal affine toric surface given by a saturated rank-2 semigroup.
struct ToricSurfaceData {
    AffineSemigroup semigroup;
    /// (n, a) when the surface is the quotient of the plane by 1/n(1, a).
    std::optional<std::pair<std::int64_t, std::int64_t>> tag;
};

/// Invariant monomials of a small cyclic action on the plane.
ToricSurfaceData quotient_toric_model(const AbelianAction& action);

/// Residue pieces of Gamma over q * Gamma.
std::vector<ResiduePiece> frobenius_pieces(const ToricSurfaceData& toric, std::int64_t q);

/// Index of the semigroup lattice in Z^2; the fans below live in this multiple of its dual.
std::int64_t model_scale(const ToricSurfaceData& toric);
Lattice2 scaled_dual_lattice(const ToricSurfaceData& toric);

/// Directions in the interior of the dual cone where the generator attaining the minimal
/// pairing changes, as primitive integer vectors sorted counterclockwise.
std::vector<Vec2> module_fan(const FractionalMonomialModule& piece);

/// Dual cone subdivided at the breakpoints of every Frobenius piece.
Fan2 fblowup_fan(const ToricSurfaceData& toric, std::int64_t q);

struct FanComparison {
    bool equal = false;
    std::vector<Vec2> matched_rays;
    std::vector<Vec2> only_in_hilb;
    std::vector<Vec2> only_in_fblowup;
    /// q < |G|: outside the range where the two fans are expected to agree.
    bool below_bound = false;
};

/// Compares interior rays after identifying the two lattices by their Hermite normal forms.
FanComparison compare_fans(const Fan2& hilb, const Fan2& fb, const AbelianAction& action, std::int64_t q);

} // namespace frob

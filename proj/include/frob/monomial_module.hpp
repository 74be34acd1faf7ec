#pragma once

#include "frob/semigroup.hpp"

#include <optional>
#include <vector>

namespace frob {

/// The set generators + base ⊂ Z^rank, a rank-one monomial module over the semigroup ring of `base`.
/// The generator list is kept minimal (no generator lies in another generator + base) and sorted.
class FractionalMonomialModule {
public:
    FractionalMonomialModule(AffineSemigroup base, std::vector<Vec2> generators);

    const AffineSemigroup& base() const noexcept { return base_; }
    const std::vector<Vec2>& generators() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }
    bool contains(const Vec2& v) const;
    FractionalMonomialModule translated(const Vec2& by) const;
    std::string describe() const;

    bool operator==(const FractionalMonomialModule& o) const { return base_ == o.base_ && gens_ == o.gens_; }

private:
    AffineSemigroup base_;
    std::vector<Vec2> gens_;
};

/// Drops every generator lying in another generator + base; result sorted and deduplicated.
std::vector<Vec2> minimize_generators(const AffineSemigroup& base, std::vector<Vec2> generators);
FractionalMonomialModule minimize_generators(const FractionalMonomialModule& m);

/// {v : v + I ⊆ J} with minimal generators. Rank-2 bases must be saturated.
FractionalMonomialModule hom_module(const FractionalMonomialModule& from, const FractionalMonomialModule& to);

/// Minkowski sum of the two value sets (composition of monomial maps).
FractionalMonomialModule module_product(const FractionalMonomialModule& a, const FractionalMonomialModule& b);

/// Pointwise containment a ⊆ b.
bool module_contains(const FractionalMonomialModule& b, const FractionalMonomialModule& a);

/// Offset o when the module equals o + normalization(base), i.e. is free of rank one over the
/// normalization of its base.
std::optional<Vec2> free_offset(const FractionalMonomialModule& m);

enum class ResidueBase {
    /// pieces are modules over q * Gamma
    qth_powers,
    /// pieces are modules over Gamma acting through u -> u + q * gamma, stored scaled by q
    self,
};

struct ResiduePiece {
    /// Residue class mod q, componentwise (second entry 0 for rank 1).
    Vec2 residue;
    FractionalMonomialModule module;
    /// Least element for rank 1; lexicographically least generator for rank 2.
    Vec2 min_offset;
};

/// Splits Gamma into residue classes mod q; each nonempty class is returned with minimal
/// generators over q * Gamma. Both bases store the same integral data. Rank 2 needs saturation.
std::vector<ResiduePiece> residue_decomposition(const AffineSemigroup& gamma, std::int64_t q,
                                                ResidueBase over = ResidueBase::qth_powers);

/// blocks[i][j] = Hom(piece_i, piece_j); offsets[i][j] set when that block is free of rank one.
struct EndRingTable {
    std::vector<std::vector<FractionalMonomialModule>> blocks;
    std::vector<std::vector<std::optional<Vec2>>> offsets;

    std::size_t size() const noexcept { return blocks.size(); }
};

EndRingTable end_ring_table(const std::vector<FractionalMonomialModule>& pieces, const AffineSemigroup& base);
EndRingTable end_ring_table(const std::vector<ResiduePiece>& pieces, const AffineSemigroup& base);

/// Every block free of rank one with additive offsets: o_ii = 0 and o_ij + o_jk = o_ik.
bool is_full_matrix_ring(const EndRingTable& table);

struct SummandClass {
    /// Generators translated so that the first (least) generator is 0.
    std::vector<Vec2> shape;
    std::size_t multiplicity = 0;
    /// Indices into the input list.
    std::vector<std::size_t> members;
};

/// Groups modules by equality up to lattice translation, in order of first occurrence.
std::vector<SummandClass> summand_classes(const std::vector<FractionalMonomialModule>& pieces);
std::vector<SummandClass> summand_classes(const std::vector<ResiduePiece>& pieces);

/// Shape of a module up to translation (see SummandClass::shape).
std::vector<Vec2> translation_shape(const FractionalMonomialModule& m);

} // namespace frob

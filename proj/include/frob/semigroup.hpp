#pragma once

#include "frob/lattice.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace frob {

/// Pointed affine semigroup in Z (rank 1, stored on the first axis of Z^2) or in Z^2 (rank 2).
///
/// Rank 1: generated by positive integers with gcd g; the semigroup is g * Gamma' for a numerical
/// semigroup Gamma'. Rank 2: generated by vectors spanning a strictly convex two-dimensional cone C;
/// the semigroup is saturated when it equals C ∩ L for the lattice L it generates.
class AffineSemigroup {
public:
    static AffineSemigroup numerical(std::vector<std::int64_t> generators);
    static AffineSemigroup planar(std::vector<Vec2> generators);

    int rank() const noexcept { return rank_; }
    /// Minimal generating set, sorted.
    const std::vector<Vec2>& generators() const noexcept { return gens_; }
    bool contains(const Vec2& v) const;
    /// q * Gamma
    AffineSemigroup scaled(std::int64_t q) const;
    std::string describe() const;

    // rank 1
    std::int64_t gcd() const;
    /// Every multiple of gcd() at or above this value lies in the semigroup.
    std::int64_t conductor() const;
    /// Elements below `bound`, ascending.
    std::vector<std::int64_t> elements_below(std::int64_t bound) const;

    // rank 2
    bool is_saturated() const noexcept { return saturated_; }
    const Lattice2& lattice() const;
    /// Primitive directions of the two extremal rays, cross(rays[0], rays[1]) > 0.
    const std::array<Vec2, 2>& rays() const;
    /// normals[k] vanishes on rays[k] and is positive on the other ray.
    std::array<Vec2, 2> normals() const;
    /// Smallest lattice points on rays[0] and rays[1].
    std::array<Vec2, 2> ray_points() const;
    /// Hilbert basis of C ∩ L.
    std::vector<Vec2> saturation_basis() const;
    bool in_cone(const Vec2& v) const;

    /// gN for rank 1; the saturation C ∩ L for rank 2.
    AffineSemigroup normalization() const;

    bool operator==(const AffineSemigroup& o) const { return rank_ == o.rank_ && gens_ == o.gens_; }

private:
    AffineSemigroup() = default;
    void require_rank(int r) const;

    int rank_ = 1;
    std::vector<Vec2> gens_;
    // rank 1
    std::int64_t gcd_ = 1;
    std::int64_t conductor_units_ = 0;
    std::vector<char> table_;  // membership of k in Gamma' for k < conductor_units_
    // rank 2
    std::array<Vec2, 2> rays_{};
    Lattice2 lattice_ = Lattice2::standard();
    bool saturated_ = true;
    std::shared_ptr<std::map<Vec2, bool>> memo_;
};

} // namespace frob

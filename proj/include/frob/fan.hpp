#pragma once

#include "frob/lattice.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace frob {

/// Two-dimensional cone spanned by rays[0], rays[1] with cross(rays[0], rays[1]) > 0.
struct Cone2 {
    std::array<Vec2, 2> rays;

    bool operator==(const Cone2&) const = default;
};

/// Complete fan of a strictly convex plane cone. Rays are integer vectors, primitive in
/// `lattice`, which is `scale` times the true lattice of cocharacters; rays are sorted
/// counterclockwise and cone k spans rays k and k + 1.
struct Fan2 {
    Lattice2 lattice = Lattice2::standard();
    std::int64_t scale = 1;
    /// (n, a) when the fan lives over the quotient 1/n(1, a).
    std::optional<std::pair<std::int64_t, std::int64_t>> tag;
    std::vector<Vec2> rays;
    std::vector<std::array<std::size_t, 2>> cones;
    std::vector<std::string> warnings;

    std::vector<Vec2> interior_rays() const;
    /// |det| of the two rays equals the index of the lattice.
    bool is_smooth(std::size_t cone) const;
    bool is_smooth() const;
};

/// Sorts directions counterclockwise; all of them must lie in a common open half-plane.
void sort_counterclockwise(std::vector<Vec2>& rays);

/// Builds a fan whose rays are the given directions made primitive in `lattice`.
Fan2 fan_from_directions(std::vector<Vec2> directions, const Lattice2& lattice, std::int64_t scale);

} // namespace frob

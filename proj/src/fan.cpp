#include "frob/fan.hpp"

#include "frob/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace frob {

std::vector<Vec2> Fan2::interior_rays() const {
    if (rays.size() <= 2) return {};
    return {rays.begin() + 1, rays.end() - 1};
}

bool Fan2::is_smooth(std::size_t cone) const {
    const auto& c = cones.at(cone);
    return std::llabs(cross(rays[c[0]], rays[c[1]])) == lattice.index();
}

bool Fan2::is_smooth() const {
    for (std::size_t k = 0; k < cones.size(); ++k)
        if (!is_smooth(k)) return false;
    return true;
}

void sort_counterclockwise(std::vector<Vec2>& rays) {
    std::sort(rays.begin(), rays.end(), [](const Vec2& a, const Vec2& b) { return cross(a, b) > 0; });
}

Fan2 fan_from_directions(std::vector<Vec2> directions, const Lattice2& lattice, std::int64_t scale) {
    Fan2 f;
    f.lattice = lattice;
    f.scale = scale;
    for (auto& d : directions) {
        if (d == Vec2{0, 0}) throw invariant_error("zero ray direction");
        d = lattice.primitive_on_ray(primitive(d));
    }
    sort_counterclockwise(directions);
    directions.erase(std::unique(directions.begin(), directions.end()), directions.end());
    for (std::size_t k = 0; k + 1 < directions.size(); ++k)
        if (cross(directions[k], directions[k + 1]) <= 0) throw invariant_error("fan rays do not span a convex cone");
    f.rays = std::move(directions);
    for (std::size_t k = 0; k + 1 < f.rays.size(); ++k) f.cones.push_back({k, k + 1});
    return f;
}

} // namespace frob

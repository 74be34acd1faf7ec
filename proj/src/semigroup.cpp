#include "frob/semigroup.hpp"

#include "frob/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>

namespace frob {

namespace {

// Lattice points of L in the closed parallelogram spanned by a and b (cross(a, b) > 0).
std::vector<Vec2> parallelogram_points(const Lattice2& L, const Vec2& a, const Vec2& b) {
    std::int64_t lo0 = std::min({std::int64_t{0}, a[0], b[0], a[0] + b[0]});
    std::int64_t hi0 = std::max({std::int64_t{0}, a[0], b[0], a[0] + b[0]});
    std::int64_t lo1 = std::min({std::int64_t{0}, a[1], b[1], a[1] + b[1]});
    std::int64_t hi1 = std::max({std::int64_t{0}, a[1], b[1], a[1] + b[1]});
    const auto det = cross(a, b);
    std::vector<Vec2> out;
    for (auto x = lo0; x <= hi0; ++x)
        for (auto y = lo1; y <= hi1; ++y) {
            Vec2 v{x, y};
            // v = s a + t b with s = cross(v, b)/det, t = cross(a, v)/det
            auto s = cross(v, b), t = cross(a, v);
            if (s >= 0 && s <= det && t >= 0 && t <= det && L.contains(v)) out.push_back(v);
        }
    return out;
}

} // namespace

void AffineSemigroup::require_rank(int r) const {
    if (rank_ != r) throw precondition_error("operation needs a rank-" + std::to_string(r) + " semigroup");
}

AffineSemigroup AffineSemigroup::numerical(std::vector<std::int64_t> generators) {
    std::int64_t g = 0;
    for (auto x : generators) {
        if (x <= 0) throw precondition_error("numerical semigroup generators must be positive");
        g = std::gcd(g, x);
    }
    if (g == 0) throw precondition_error("a semigroup needs at least one generator");
    AffineSemigroup s;
    s.rank_ = 1;
    s.gcd_ = g;
    std::vector<std::int64_t> units;
    for (auto x : generators) units.push_back(x / g);
    std::sort(units.begin(), units.end());
    units.erase(std::unique(units.begin(), units.end()), units.end());
    // Membership table until `min generator` consecutive hits, which marks the conductor.
    std::vector<char> member{1};
    std::int64_t run = 0;
    const auto m = units.front();
    for (std::int64_t k = 1; run < m; ++k) {
        char in = 0;
        for (auto u : units)
            if (u <= k && member[static_cast<std::size_t>(k - u)]) in = 1;
        member.push_back(in);
        run = in ? run + 1 : 0;
        if (k > 1'000'000) throw precondition_error("semigroup conductor too large");
    }
    std::int64_t c = static_cast<std::int64_t>(member.size()) - m;
    while (c > 0 && member[static_cast<std::size_t>(c - 1)]) --c;
    s.conductor_units_ = c;
    s.table_.assign(member.begin(), member.begin() + c);
    for (auto u : units) {
        bool redundant = false;
        for (auto v : units)
            if (v < u && s.contains({(u - v) * g, 0})) redundant = true;
        if (!redundant) s.gens_.push_back({u * g, 0});
    }
    return s;
}

AffineSemigroup AffineSemigroup::planar(std::vector<Vec2> generators) {
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    if (generators.empty()) throw precondition_error("a semigroup needs at least one generator");
    for (const auto& g : generators)
        if (g == Vec2{0, 0}) throw precondition_error("zero is not allowed as a generator");
    AffineSemigroup s;
    s.rank_ = 2;
    // extremal rays: r0 has every generator weakly to its left, r1 every generator weakly to its right
    std::optional<Vec2> r0, r1;
    for (const auto& g : generators) {
        bool all_left = true, all_right = true;
        for (const auto& h : generators) {
            auto c = cross(g, h);
            if (c < 0 || (c == 0 && dot(g, h) < 0)) all_left = false;
            if (c > 0 || (c == 0 && dot(g, h) < 0)) all_right = false;
        }
        if (all_left) r0 = primitive(g);
        if (all_right) r1 = primitive(g);
    }
    if (!r0 || !r1 || cross(*r0, *r1) <= 0)
        throw precondition_error("generators do not span a strictly convex two-dimensional cone");
    s.rays_ = {*r0, *r1};
    s.lattice_ = Lattice2::spanned_by(generators);
    s.memo_ = std::make_shared<std::map<Vec2, bool>>();
    s.gens_ = generators;

    s.saturated_ = false;
    auto hb = s.saturation_basis();
    s.saturated_ = std::all_of(hb.begin(), hb.end(), [&](const Vec2& h) { return s.contains(h); });
    // minimal generators: drop those that are sums of two nonzero elements
    std::vector<Vec2> minimal;
    for (const auto& g : generators) {
        bool redundant = std::any_of(generators.begin(), generators.end(), [&](const Vec2& h) {
            return h != g && s.in_cone(g - h) && s.contains(g - h);
        });
        if (!redundant) minimal.push_back(g);
    }
    s.gens_ = std::move(minimal);
    s.memo_ = std::make_shared<std::map<Vec2, bool>>();
    return s;
}

bool AffineSemigroup::in_cone(const Vec2& v) const {
    require_rank(2);
    return cross(rays_[0], v) >= 0 && cross(v, rays_[1]) >= 0;
}

bool AffineSemigroup::contains(const Vec2& v) const {
    if (rank_ == 1) {
        if (v[1] != 0 || v[0] < 0 || v[0] % gcd_ != 0) return false;
        auto k = v[0] / gcd_;
        return k >= conductor_units_ || table_[static_cast<std::size_t>(k)];
    }
    if (!in_cone(v) || !lattice_.contains(v)) return false;
    if (saturated_) return true;
    if (v == Vec2{0, 0}) return true;
    if (auto it = memo_->find(v); it != memo_->end()) return it->second;
    bool in = std::any_of(gens_.begin(), gens_.end(), [&](const Vec2& g) { return contains(v - g); });
    (*memo_)[v] = in;
    return in;
}

AffineSemigroup AffineSemigroup::scaled(std::int64_t q) const {
    if (q <= 0) throw precondition_error("scale factor must be positive");
    if (rank_ == 1) {
        std::vector<std::int64_t> g;
        for (const auto& v : gens_) g.push_back(v[0] * q);
        return numerical(std::move(g));
    }
    std::vector<Vec2> g;
    for (const auto& v : gens_) g.push_back(q * v);
    return planar(std::move(g));
}

std::string AffineSemigroup::describe() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ",";
        s += rank_ == 1 ? std::to_string(gens_[i][0]) : to_string(gens_[i]);
    }
    return s + ">";
}

std::int64_t AffineSemigroup::gcd() const {
    require_rank(1);
    return gcd_;
}

std::int64_t AffineSemigroup::conductor() const {
    require_rank(1);
    return conductor_units_ * gcd_;
}

std::vector<std::int64_t> AffineSemigroup::elements_below(std::int64_t bound) const {
    require_rank(1);
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x < bound; x += gcd_)
        if (contains({x, 0})) out.push_back(x);
    return out;
}

const Lattice2& AffineSemigroup::lattice() const {
    require_rank(2);
    return lattice_;
}

const std::array<Vec2, 2>& AffineSemigroup::rays() const {
    require_rank(2);
    return rays_;
}

std::array<Vec2, 2> AffineSemigroup::normals() const {
    require_rank(2);
    return {Vec2{-rays_[0][1], rays_[0][0]}, Vec2{rays_[1][1], -rays_[1][0]}};
}

std::array<Vec2, 2> AffineSemigroup::ray_points() const {
    require_rank(2);
    return {lattice_.primitive_on_ray(rays_[0]), lattice_.primitive_on_ray(rays_[1])};
}

std::vector<Vec2> AffineSemigroup::saturation_basis() const {
    require_rank(2);
    auto [h0, h1] = ray_points();
    auto pts = parallelogram_points(lattice_, h0, h1);
    std::erase(pts, Vec2{0, 0});
    std::vector<Vec2> basis;
    for (const auto& x : pts) {
        bool reducible = std::any_of(pts.begin(), pts.end(), [&](const Vec2& y) {
            return y != x && in_cone(x - y) && (x - y) != Vec2{0, 0};
        });
        if (!reducible) basis.push_back(x);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

AffineSemigroup AffineSemigroup::normalization() const {
    if (rank_ == 1) return numerical({gcd_});
    return planar(saturation_basis());
}

} // namespace frob

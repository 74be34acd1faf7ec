#include "frob/lattice.hpp"

#include "frob/errors.hpp"

#include <cstdlib>
#include <numeric>

namespace frob {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    auto r = a % m;
    return r < 0 ? r + m : r;
}

// g = gcd(a, b) = s*a + t*b
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
    std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        auto qt = a / b;
        auto r = a - qt * b;
        a = b;
        b = r;
        auto s2 = s0 - qt * s1;
        s0 = s1;
        s1 = s2;
        auto t2 = t0 - qt * t1;
        t0 = t1;
        t1 = t2;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    s = s0;
    t = t0;
    return a;
}

} // namespace

Vec2 primitive(const Vec2& v) {
    auto g = std::gcd(std::llabs(v[0]), std::llabs(v[1]));
    if (g == 0) return v;
    return {v[0] / g, v[1] / g};
}

Lattice2::Lattice2(std::int64_t d1, std::int64_t x, std::int64_t d2) : d1_(d1), x_(x), d2_(d2) {
    if (d1 <= 0 || d2 <= 0 || x < 0 || x >= d2) throw precondition_error("not a Hermite normal form");
}

Lattice2 Lattice2::spanned_by(const std::vector<Vec2>& gens) {
    // Row-reduce the first coordinates to a single vector (d1, y).
    Vec2 lead{0, 0};
    std::int64_t d2 = 0;
    for (const auto& g : gens) {
        if (lead[0] == 0 && g[0] == 0) {
            d2 = std::gcd(d2, std::llabs(g[1]));
            continue;
        }
        std::int64_t s = 0, t = 0;
        auto gcd = ext_gcd(lead[0], g[0], s, t);
        Vec2 combined{gcd, s * lead[1] + t * g[1]};
        // The two leftover combinations have zero first coordinate.
        auto a = lead[0] / gcd, b = g[0] / gcd;
        std::int64_t rem = b * lead[1] - a * g[1];
        d2 = std::gcd(d2, std::llabs(rem));
        lead = combined;
        if (d2 != 0) lead[1] = floor_mod(lead[1], d2);
    }
    if (lead[0] == 0 || d2 == 0) throw precondition_error("vectors do not span a rank-2 lattice");
    return {lead[0], floor_mod(lead[1], d2), d2};
}

bool Lattice2::contains(const Vec2& v) const {
    if (v[0] % d1_ != 0) return false;
    auto k = v[0] / d1_;
    return (v[1] - k * x_) % d2_ == 0;
}

Vec2 Lattice2::primitive_on_ray(const Vec2& dir) const {
    auto prim = primitive(dir);
    if (prim[0] == 0 && prim[1] == 0) throw precondition_error("zero direction");
    for (std::int64_t k = 1; k <= index(); ++k)
        if (contains(k * prim)) return k * prim;
    throw invariant_error("lattice index bound violated");
}

Lattice2 Lattice2::scaled_dual() const {
    // Dual basis of (d1, x), (0, d2) is (1/d1, 0), (-x/(d1 d2), 1/d2); scale by d1 d2.
    return spanned_by({Vec2{d2_, 0}, Vec2{-x_, d1_}});
}

std::string to_string(const Vec2& v) { return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")"; }

} // namespace frob

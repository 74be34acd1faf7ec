#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace frob {

using Vec2 = std::array<std::int64_t, 2>;

inline std::int64_t cross(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }
inline std::int64_t dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }
inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 operator*(std::int64_t k, const Vec2& a) { return {k * a[0], k * a[1]}; }

/// Divides out the gcd of the entries (zero stays zero).
Vec2 primitive(const Vec2& v);

/// Strict angular order of directions inside an open half-plane: a before b iff cross(a,b) > 0.
inline bool turns_left(const Vec2& a, const Vec2& b) { return cross(a, b) > 0; }

/// Full-rank sublattice of Z^2 in Hermite normal form: basis (d1, x), (0, d2), 0 <= x < d2.
class Lattice2 {
public:
    Lattice2(std::int64_t d1, std::int64_t x, std::int64_t d2);

    /// Lattice spanned by the given integer vectors; throws if they do not span a rank-2 lattice.
    static Lattice2 spanned_by(const std::vector<Vec2>& gens);
    static Lattice2 standard() { return {1, 0, 1}; }

    std::int64_t d1() const noexcept { return d1_; }
    std::int64_t x() const noexcept { return x_; }
    std::int64_t d2() const noexcept { return d2_; }
    std::array<Vec2, 2> basis() const { return {Vec2{d1_, x_}, Vec2{0, d2_}}; }
    /// [Z^2 : L]
    std::int64_t index() const noexcept { return d1_ * d2_; }

    bool contains(const Vec2& v) const;
    /// Smallest positive multiple of the primitive direction `dir` lying in the lattice.
    Vec2 primitive_on_ray(const Vec2& dir) const;
    /// index() times the dual lattice {w : <w, v> in Z for all v in L}, which is integral.
    Lattice2 scaled_dual() const;

    bool operator==(const Lattice2&) const = default;

private:
    std::int64_t d1_, x_, d2_;
};

std::string to_string(const Vec2& v);

} // namespace frob

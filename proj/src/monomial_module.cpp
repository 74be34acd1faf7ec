#include "frob/monomial_module.hpp"

#include "frob/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace frob {

namespace {

void require_saturated(const AffineSemigroup& base) {
    if (base.rank() == 2 && !base.is_saturated())
        throw precondition_error("rank-2 base " + base.describe() + " is not saturated");
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    auto q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Calls fn(v) for every v in Z^2 with lo[k] <= <normals[k], v> <= hi[k].
void for_each_in_normal_box(const AffineSemigroup& base, const std::array<std::int64_t, 2>& lo,
                            const std::array<std::int64_t, 2>& hi, const std::function<void(const Vec2&)>& fn) {
    if (lo[0] > hi[0] || lo[1] > hi[1]) return;
    const auto n = base.normals();
    const auto det = n[0][0] * n[1][1] - n[0][1] * n[1][0];
    std::int64_t x_lo = std::numeric_limits<std::int64_t>::max(), x_hi = std::numeric_limits<std::int64_t>::min();
    std::int64_t y_lo = x_lo, y_hi = x_hi;
    for (auto c0 : {lo[0], hi[0]})
        for (auto c1 : {lo[1], hi[1]}) {
            auto xn = n[1][1] * c0 - n[0][1] * c1;
            auto yn = -n[1][0] * c0 + n[0][0] * c1;
            x_lo = std::min(x_lo, det > 0 ? floor_div(xn, det) : floor_div(-xn, -det));
            x_hi = std::max(x_hi, det > 0 ? ceil_div(xn, det) : ceil_div(-xn, -det));
            y_lo = std::min(y_lo, det > 0 ? floor_div(yn, det) : floor_div(-yn, -det));
            y_hi = std::max(y_hi, det > 0 ? ceil_div(yn, det) : ceil_div(-yn, -det));
        }
    for (auto x = x_lo; x <= x_hi; ++x)
        for (auto y = y_lo; y <= y_hi; ++y) {
            Vec2 v{x, y};
            auto a = dot(n[0], v), b = dot(n[1], v);
            if (a >= lo[0] && a <= hi[0] && b >= lo[1] && b <= hi[1]) fn(v);
        }
}

bool in_module(const AffineSemigroup& base, const std::vector<Vec2>& gens, const Vec2& v) {
    return std::any_of(gens.begin(), gens.end(), [&](const Vec2& g) { return base.contains(v - g); });
}

// Nonzero generators of the base used for minimality tests.
std::vector<Vec2> base_steps(const AffineSemigroup& base) {
    return base.rank() == 2 ? base.saturation_basis() : base.generators();
}

// Minimal generators of the intersection of the modules (each given by generators) over `base`.
std::vector<Vec2> intersect_modules(const AffineSemigroup& base, const std::vector<std::vector<Vec2>>& modules) {
    for (const auto& m : modules)
        if (m.empty()) return {};
    auto in_all = [&](const Vec2& v) {
        return std::all_of(modules.begin(), modules.end(), [&](const auto& m) { return in_module(base, m, v); });
    };
    const auto steps = base_steps(base);
    auto minimal = [&](const Vec2& v) {
        return std::none_of(steps.begin(), steps.end(), [&](const Vec2& s) { return in_all(v - s); });
    };

    std::vector<Vec2> out;
    if (base.rank() == 1) {
        std::int64_t lo = std::numeric_limits<std::int64_t>::min(), top = std::numeric_limits<std::int64_t>::min();
        for (const auto& m : modules) {
            std::int64_t mn = std::numeric_limits<std::int64_t>::max();
            for (const auto& g : m) {
                mn = std::min(mn, g[0]);
                top = std::max(top, g[0]);
            }
            lo = std::max(lo, mn);
        }
        const auto hi = top + base.conductor() + base.generators().front()[0];
        for (auto x = lo; x <= hi; ++x) {
            Vec2 v{x, 0};
            if (in_all(v) && minimal(v)) out.push_back(v);
        }
        return out;
    }

    const auto n = base.normals();
    const auto h = base.ray_points();
    std::array<std::int64_t, 2> lo{std::numeric_limits<std::int64_t>::min(), std::numeric_limits<std::int64_t>::min()};
    std::array<std::int64_t, 2> hi{std::numeric_limits<std::int64_t>::min(), std::numeric_limits<std::int64_t>::min()};
    for (const auto& m : modules) {
        std::array<std::int64_t, 2> mn{std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::max()};
        for (const auto& g : m)
            for (int k = 0; k < 2; ++k) {
                mn[k] = std::min(mn[k], dot(n[k], g));
                hi[k] = std::max(hi[k], dot(n[k], g));
            }
        for (int k = 0; k < 2; ++k) lo[k] = std::max(lo[k], mn[k]);
    }
    // normals[0] is positive on ray_points[1] and vanishes on ray_points[0]
    hi[0] += dot(n[0], h[1]);
    hi[1] += dot(n[1], h[0]);
    for_each_in_normal_box(base, lo, hi, [&](const Vec2& v) {
        if (in_all(v) && minimal(v)) out.push_back(v);
    });
    std::sort(out.begin(), out.end());
    return out;
}

void require_same_base(const FractionalMonomialModule& a, const FractionalMonomialModule& b) {
    if (!(a.base() == b.base())) throw precondition_error("modules live over different base semigroups");
}

} // namespace

std::vector<Vec2> minimize_generators(const AffineSemigroup& base, std::vector<Vec2> generators) {
    for (const auto& g : generators)
        if (base.rank() == 1 && g[1] != 0) throw precondition_error("rank-1 module generator off the axis");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    std::vector<Vec2> out;
    for (const auto& g : generators) {
        bool redundant = std::any_of(generators.begin(), generators.end(),
                                     [&](const Vec2& h) { return h != g && base.contains(g - h); });
        if (!redundant) out.push_back(g);
    }
    return out;
}

FractionalMonomialModule::FractionalMonomialModule(AffineSemigroup base, std::vector<Vec2> generators)
    : base_(std::move(base)), gens_(minimize_generators(base_, std::move(generators))) {}

FractionalMonomialModule minimize_generators(const FractionalMonomialModule& m) {
    return {m.base(), m.generators()};
}

bool FractionalMonomialModule::contains(const Vec2& v) const { return in_module(base_, gens_, v); }

FractionalMonomialModule FractionalMonomialModule::translated(const Vec2& by) const {
    std::vector<Vec2> g;
    for (const auto& x : gens_) g.push_back(x + by);
    return {base_, std::move(g)};
}

std::string FractionalMonomialModule::describe() const {
    std::string s = "{";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ",";
        s += base_.rank() == 1 ? std::to_string(gens_[i][0]) : to_string(gens_[i]);
    }
    return s + "} + " + base_.describe();
}

FractionalMonomialModule hom_module(const FractionalMonomialModule& from, const FractionalMonomialModule& to) {
    require_same_base(from, to);
    require_saturated(from.base());
    if (from.is_zero()) throw precondition_error("Hom out of the zero module is not finitely generated");
    std::vector<std::vector<Vec2>> translates;
    for (const auto& g : from.generators()) {
        std::vector<Vec2> t;
        for (const auto& j : to.generators()) t.push_back(j - g);
        translates.push_back(std::move(t));
    }
    return {from.base(), intersect_modules(from.base(), translates)};
}

FractionalMonomialModule module_product(const FractionalMonomialModule& a, const FractionalMonomialModule& b) {
    require_same_base(a, b);
    std::vector<Vec2> g;
    for (const auto& x : a.generators())
        for (const auto& y : b.generators()) g.push_back(x + y);
    return {a.base(), std::move(g)};
}

bool module_contains(const FractionalMonomialModule& b, const FractionalMonomialModule& a) {
    require_same_base(a, b);
    return std::all_of(a.generators().begin(), a.generators().end(), [&](const Vec2& g) { return b.contains(g); });
}

std::optional<Vec2> free_offset(const FractionalMonomialModule& m) {
    if (m.is_zero()) return std::nullopt;
    const auto& base = m.base();
    if (base.rank() == 2) {
        require_saturated(base);
        if (m.generators().size() == 1) return m.generators().front();
        return std::nullopt;
    }
    const auto g = base.gcd();
    const auto o = m.generators().front();
    std::int64_t top = o[0];
    for (const auto& x : m.generators()) {
        if ((x[0] - o[0]) % g != 0) return std::nullopt;
        top = std::max(top, x[0]);
    }
    for (auto x = o[0]; x <= top + base.conductor(); x += g)
        if (!m.contains({x, 0})) return std::nullopt;
    return o;
}

std::vector<ResiduePiece> residue_decomposition(const AffineSemigroup& gamma, std::int64_t q, ResidueBase) {
    if (q <= 0) throw precondition_error("q must be positive");
    require_saturated(gamma);
    const auto base = gamma.scaled(q);
    std::vector<ResiduePiece> out;
    auto mod = [q](std::int64_t x) { return ((x % q) + q) % q; };

    if (gamma.rank() == 1) {
        // u - q*h lies in Gamma as soon as u >= conductor + q*h
        const auto bound = gamma.conductor() + q * gamma.generators().front()[0];
        std::map<std::int64_t, std::vector<Vec2>> by_residue;
        for (auto u : gamma.elements_below(bound)) {
            bool minimal = std::none_of(gamma.generators().begin(), gamma.generators().end(),
                                        [&](const Vec2& h) { return gamma.contains({u - q * h[0], 0}); });
            if (minimal) by_residue[mod(u)].push_back({u, 0});
        }
        for (auto& [r, gens] : by_residue) {
            FractionalMonomialModule m(base, gens);
            out.push_back({{r, 0}, m, m.generators().front()});
        }
        return out;
    }

    const auto n = gamma.normals();
    const auto h = gamma.ray_points();
    const auto hb = gamma.saturation_basis();
    std::map<Vec2, std::vector<Vec2>> by_residue;
    for_each_in_normal_box(gamma, {0, 0}, {q * dot(n[0], h[1]) - 1, q * dot(n[1], h[0]) - 1}, [&](const Vec2& u) {
        if (!gamma.contains(u)) return;
        bool minimal = std::none_of(hb.begin(), hb.end(), [&](const Vec2& s) { return gamma.contains(u - q * s); });
        if (minimal) by_residue[{mod(u[0]), mod(u[1])}].push_back(u);
    });
    for (auto& [r, gens] : by_residue) {
        FractionalMonomialModule m(base, gens);
        out.push_back({r, m, m.generators().front()});
    }
    return out;
}

EndRingTable end_ring_table(const std::vector<FractionalMonomialModule>& pieces, const AffineSemigroup& base) {
    for (const auto& p : pieces)
        if (!(p.base() == base)) throw precondition_error("pieces must share the given base");
    const auto n = pieces.size();
    EndRingTable t;
    t.blocks.assign(n, {});
    t.offsets.assign(n, std::vector<std::optional<Vec2>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        t.blocks[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            t.blocks[i].push_back(hom_module(pieces[i], pieces[j]));
            t.offsets[i][j] = free_offset(t.blocks[i][j]);
        }
    }
    return t;
}

EndRingTable end_ring_table(const std::vector<ResiduePiece>& pieces, const AffineSemigroup& base) {
    std::vector<FractionalMonomialModule> mods;
    for (const auto& p : pieces) mods.push_back(p.module);
    return end_ring_table(mods, base);
}

bool is_full_matrix_ring(const EndRingTable& t) {
    const auto n = t.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!t.offsets[i][j]) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (*t.offsets[i][i] != Vec2{0, 0}) return false;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (*t.offsets[i][j] + *t.offsets[j][k] != *t.offsets[i][k]) return false;
    }
    return true;
}

std::vector<Vec2> translation_shape(const FractionalMonomialModule& m) {
    std::vector<Vec2> s = m.generators();
    if (s.empty()) return s;
    const auto o = s.front();
    for (auto& v : s) v = v - o;
    return s;
}

std::vector<SummandClass> summand_classes(const std::vector<FractionalMonomialModule>& pieces) {
    std::vector<SummandClass> out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i > 0 && !(pieces[i].base() == pieces[0].base()))
            throw precondition_error("pieces must share a base");
        auto shape = translation_shape(pieces[i]);
        auto it = std::find_if(out.begin(), out.end(), [&](const SummandClass& c) { return c.shape == shape; });
        if (it == out.end()) {
            out.push_back({std::move(shape), 0, {}});
            it = out.end() - 1;
        }
        ++it->multiplicity;
        it->members.push_back(i);
    }
    return out;
}

std::vector<SummandClass> summand_classes(const std::vector<ResiduePiece>& pieces) {
    std::vector<FractionalMonomialModule> mods;
    for (const auto& p : pieces) mods.push_back(p.module);
    return summand_classes(mods);
}

} // namespace frob

// One line per acceptance criterion; exit status is the number of failures.
#include "frob/constellation.hpp"
#include "frob/fblowup.hpp"
#include "frob/fiber.hpp"
#include "frob/fpurity.hpp"
#include "frob/ghilb.hpp"
#include "frob/monomial_module.hpp"
#include "subspace_oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

using namespace frob;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && t > limit_s) {
        o.ok = false;
        o.detail = "time limit exceeded";
    }
    if (!o.ok) ++failures;
    std::printf("[%s] %s %s (%.3f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, t, limit_s,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
}

std::uint64_t binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    std::uint64_t inv = 1;
    for (std::uint64_t e = p - 2, b = den; e; e >>= 1, b = b * b % p)
        if (e & 1) inv = inv * b % p;
    return num * inv % p;
}

// Expands f^(p-1) over the integers and looks for a surviving term with all exponents below p.
bool fedder_oracle(const PolynomialFp& f, std::uint32_t p) {
    const auto n = f.arity();
    std::map<std::vector<std::uint32_t>, std::int64_t> acc{{std::vector<std::uint32_t>(n, 0), 1}};
    for (std::uint32_t k = 0; k + 1 < p; ++k) {
        std::map<std::vector<std::uint32_t>, std::int64_t> next;
        for (const auto& [a, ca] : acc)
            for (const auto& [m, cb] : f.terms()) {
                auto e = a;
                for (std::size_t i = 0; i < n; ++i) e[i] += m[i];
                next[e] = (next[e] + ca * static_cast<std::int64_t>(cb)) % p;
            }
        acc = std::move(next);
    }
    for (const auto& [e, c] : acc)
        if (c % p != 0 && std::all_of(e.begin(), e.end(), [p](std::uint32_t x) { return x < p; })) return true;
    return false;
}

// counts[chi] = #{(i, j) in [0,q)^2 : i + a j = chi mod n}
std::vector<std::uint64_t> box_counts(std::uint64_t n, std::uint64_t a, std::uint64_t q) {
    std::vector<std::uint64_t> c(n, 0);
    for (std::uint64_t i = 0; i < q; ++i)
        for (std::uint64_t j = 0; j < q; ++j) ++c[(i + a * j) % n];
    return c;
}

struct Tame {
    std::uint32_t n;
    std::int64_t a;
    std::uint32_t p;
    std::uint64_t q;
};

std::vector<Tame> tame_matrix() {
    std::vector<Tame> out;
    for (std::uint32_t n = 2; n <= 7; ++n)
        for (std::int64_t a = 1; a < n; ++a) {
            if (std::gcd<std::int64_t>(a, n) != 1) continue;
            for (std::uint32_t p : {2u, 3u, 5u}) {
                if (n % p == 0) continue;
                std::uint64_t q = p;
                while (q < n) q *= p;
                for (; q <= 64; q *= p) out.push_back({n, a, p, q});
            }
        }
    return out;
}

// Hom(M_i, M_j) = {v : v + M_i ⊆ M_j} for the residue classes of Gamma mod q, tested on a window;
// returns whether every Hom is a single translate of qN (the q-th powers of the normalization) and
// fills the translates.
bool principal_homs(const AffineSemigroup& g, std::int64_t q, std::vector<std::vector<std::int64_t>>& offsets) {
    const std::int64_t span = 40 * q, reach = 4 * span;
    auto in_class = [&](std::int64_t x, std::int64_t r) { return x >= 0 && ((x % q) + q) % q == r && g.contains({x, 0}); };
    offsets.assign(static_cast<std::size_t>(q), std::vector<std::int64_t>(static_cast<std::size_t>(q), 0));
    for (std::int64_t i = 0; i < q; ++i)
        for (std::int64_t j = 0; j < q; ++j) {
            std::vector<std::int64_t> hom;
            for (std::int64_t v = -span; v <= span; ++v) {
                if (((i + v) % q + q) % q != j) continue;
                bool ok = true;
                for (std::int64_t u = i; u <= reach && ok; u += q)
                    if (in_class(u, i) && !in_class(u + v, j)) ok = false;
                if (ok) hom.push_back(v);
            }
            if (hom.empty()) return false;
            const auto m = hom.front();
            offsets[i][j] = m;
            for (std::int64_t v = m; v <= span; ++v) {
                const bool in_hom = std::binary_search(hom.begin(), hom.end(), v);
                if (in_hom != ((v - m) % q == 0)) return false;
            }
        }
    return true;
}

// Lattice points on the compact boundary of conv((L ∩ first quadrant) \ 0), L = {y = a x mod n}.
std::vector<Vec2> resolution_rays(std::int64_t n, std::int64_t a) {
    std::vector<Vec2> pts;
    for (std::int64_t x = 0; x <= n; ++x)
        for (std::int64_t y = 0; y <= n; ++y)
            if ((x || y) && ((y - a * x) % n + n) % n == 0) pts.push_back({x, y});
    auto cr = [](const Vec2& u, const Vec2& v) { return u[0] * v[1] - u[1] * v[0]; };
    std::vector<Vec2> chain;
    Vec2 c{n, 0};
    while (c != Vec2{0, n}) {
        std::optional<Vec2> best;
        for (const auto& p : pts) {
            if (cr(c, p) <= 0) continue;
            const Vec2 d{p[0] - c[0], p[1] - c[1]};
            bool support = true;
            for (const auto& r : pts)
                if (cr(d, {r[0] - c[0], r[1] - c[1]}) > 0) support = false;
            if (!support) continue;
            const auto len = d[0] * d[0] + d[1] * d[1];
            if (!best || len < ((*best)[0] - c[0]) * ((*best)[0] - c[0]) + ((*best)[1] - c[1]) * ((*best)[1] - c[1]))
                best = p;
        }
        c = *best;
        if (c != Vec2{0, n}) chain.push_back(c);
    }
    return chain;
}

// Supports of the invariant subspaces of a constellation over F_2, by walking every subset of vectors.
std::set<std::uint64_t> invariant_supports(const GConstellation& c) {
    const auto n = c.vertex_count();
    const std::uint32_t vectors = 1u << n;
    auto apply = [&](std::size_t var, std::uint32_t v) {
        std::uint32_t out = 0;
        for (std::size_t chi = 0; chi < n; ++chi)
            if ((v >> chi & 1) && c.coeff(var, chi) % 2) out ^= 1u << c.target(var, chi);
        return out;
    };
    std::set<std::uint64_t> found;
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << vectors); subset += 2) {
        auto has = [&](std::uint32_t v) { return (subset >> v & 1) != 0; };
        bool ok = true;
        for (std::uint32_t a = 0; a < vectors && ok; ++a) {
            if (!has(a)) continue;
            for (std::uint32_t b = 0; b < vectors && ok; ++b)
                if (has(b) && !has(a ^ b)) ok = false;
            for (std::size_t var = 0; var < 2 && ok; ++var)
                if (!has(apply(var, a))) ok = false;
            for (std::size_t chi = 0; chi < n && ok; ++chi)
                if (!has(a & (1u << chi))) ok = false;
        }
        if (!ok) continue;
        std::uint64_t support = 0;
        for (std::uint32_t a = 0; a < vectors; ++a)
            if (has(a)) support |= a;
        found.insert(support);
    }
    return found;
}

std::string vec_str(const std::vector<std::int64_t>& v) {
    std::string s = "<";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ">";
}

} // namespace

int main() {
    criterion("AC1", "Fedder criterion on quadrics and the cusp", 1, [](Outcome& o) {
        for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
            for (std::size_t d = 1; d <= 3; ++d) {
                std::string text;
                for (std::size_t i = 0; i <= d; ++i) text += (i ? "+x" : "x") + std::to_string(i) + "^2";
                const auto f = parse_polynomial(text, p, d + 1);
                const auto r = is_f_pure_hypersurface(f, p);
                const auto tag = text + " p=" + std::to_string(p);
                o.require(r.f_pure && r.witness.has_value(), tag + " not F-pure");
                if (!r.witness) continue;
                std::vector<std::uint32_t> expected(d + 1, 0);
                expected[0] = expected[1] = p - 1;
                o.require(r.witness->exponents() == expected, tag + " witness " + to_string(*r.witness));
                const auto c = pow(f, p - 1).coefficient(*r.witness).value();
                o.require(c == binom_mod(p - 1, (p - 1) / 2, p) && c != 0, tag + " witness coefficient");
                o.require(fedder_oracle(f, p), tag + " oracle disagrees");
            }
        const auto cusp = parse_polynomial("y^2-x^3", 3);
        o.require(!is_f_pure_hypersurface(cusp, 3).f_pure, "y^2-x^3 reported F-pure");
        o.require(!fedder_oracle(cusp, 3), "oracle finds the cusp F-pure");
    });

    criterion("AC2", "every irreducible occurs for |G| <= q <= 64", 10, [](Outcome& o) {
        std::size_t cases = 0;
        for (const auto& t : tame_matrix()) {
            const auto act = AbelianAction::cyclic(t.n, {1, t.a}, t.p);
            const auto counts = box_counts(t.n, static_cast<std::uint64_t>(t.a), t.q);
            const bool oracle = std::all_of(counts.begin(), counts.end(), [](std::uint64_t c) { return c > 0; });
            const auto tag = act.describe() + " q=" + std::to_string(t.q);
            o.require(contains_all_irreducibles(act, t.q), tag);
            o.require(oracle, tag + " (oracle)");
            o.require(coinvariant_table(act, t.q).counts == counts, tag + " coinvariant table");
            ++cases;
        }
        o.require(cases > 50, "matrix too small");
    });

    criterion("AC3", "pushforward fullness and the 1/3(1,2), q=4 table", 10, [](Outcome& o) {
        for (const auto& t : tame_matrix()) {
            const auto act = AbelianAction::cyclic(t.n, {1, t.a}, t.p);
            const auto push = pushforward_decomposition(act, t.q);
            const auto counts = box_counts(t.n, static_cast<std::uint64_t>(t.a), t.q);
            const auto tag = act.describe() + " q=" + std::to_string(t.q);
            o.require(std::all_of(push.begin(), push.end(), [](std::uint64_t m) { return m > 0; }), tag + " not full");
            o.require(std::accumulate(push.begin(), push.end(), std::uint64_t{0}) == t.q * t.q, tag + " sum");
            for (std::size_t nu = 0; nu < t.n; ++nu)
                o.require(push[nu] == counts[(nu * t.q) % t.n], tag + " multiplicity");
        }
        const auto z3 = AbelianAction::cyclic(3, {1, 2}, 2);
        o.require(pushforward_decomposition(z3, 4) == std::vector<std::uint64_t>{6, 5, 5}, "1/3(1,2) q=4 table");
        o.require(box_counts(3, 2, 4) == std::vector<std::uint64_t>{6, 5, 5}, "oracle table");
    });

    criterion("AC4", "curve endomorphism rings are full matrix rings", 5, [](Outcome& o) {
        for (std::vector<std::int64_t> gens : {std::vector<std::int64_t>{2, 3}, {2, 5}, {3, 4, 5}, {3, 5, 7}}) {
            const auto g = AffineSemigroup::numerical(gens);
            for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
                if (!g.contains({q, 0})) continue;
                const auto tag = vec_str(gens) + " q=" + std::to_string(q);
                const auto table = end_ring_table(residue_decomposition(g, q), g.scaled(q));
                std::vector<std::vector<std::int64_t>> offs;
                o.require(is_full_matrix_ring(table), tag);
                o.require(principal_homs(g, q, offs), tag + " (oracle)");
                for (std::size_t i = 0; i < offs.size(); ++i)
                    for (std::size_t j = 0; j < offs.size(); ++j)
                        o.require(table.offsets[i][j] && (*table.offsets[i][j])[0] == offs[i][j], tag + " offsets");
            }
        }
        const auto g345 = AffineSemigroup::numerical({3, 4, 5});
        std::vector<std::vector<std::int64_t>> offs;
        o.require(!is_full_matrix_ring(end_ring_table(residue_decomposition(g345, 2), g345.scaled(2))), "<3,4,5> q=2");
        o.require(!principal_homs(g345, 2, offs), "<3,4,5> q=2 (oracle)");

        const auto g23 = AffineSemigroup::numerical({2, 3});
        const auto table = end_ring_table(residue_decomposition(g23, 4), g23.scaled(4));
        const std::vector<std::int64_t> c{0, 5, 2, 3};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                o.require(table.offsets[i][j] && (*table.offsets[i][j])[0] == c[j] - c[i], "<2,3> q=4 offset matrix");
    });

    criterion("AC5", "G-Hilbert fan equals the F-blowup fan", 60, [](Outcome& o) {
        struct Case {
            std::uint32_t n;
            std::int64_t a;
            std::uint32_t p;
            int e;
        };
        for (const auto& c : std::vector<Case>{{2, 1, 3, 1}, {3, 2, 2, 2}, {5, 4, 11, 1}, {7, 6, 2, 3}}) {
            std::int64_t q = 1;
            for (int k = 0; k < c.e; ++k) q *= c.p;
            const auto act = AbelianAction::cyclic(c.n, {1, c.a}, c.p);
            const auto hilb = hilb_fan(act);
            const auto fb = fblowup_fan(quotient_toric_model(act), q);
            const auto cmp = compare_fans(hilb, fb, act, q);
            const auto tag = act.describe() + " q=" + std::to_string(q);
            o.require(cmp.equal && cmp.only_in_hilb.empty() && cmp.only_in_fblowup.empty(), tag + " fans differ");
            const auto expected = resolution_rays(c.n, c.a);
            o.require(hilb.interior_rays() == expected, tag + " G-Hilbert rays vs hull oracle");
            o.require(fb.interior_rays() == expected, tag + " F-blowup rays vs hull oracle");
            if (c.a == static_cast<std::int64_t>(c.n) - 1) o.require(hilb.is_smooth() && fb.is_smooth(), tag + " not smooth");
        }
    });

    criterion("AC6", "stability coherence of clusters, pairing and closed subsets", 60, [](Outcome& o) {
        std::mt19937 rng(6);
        for (auto [n, a] : std::vector<std::pair<std::uint32_t, std::int64_t>>{{2, 1}, {3, 1}, {3, 2}, {4, 3}, {5, 2}, {5, 4}, {7, 3}}) {
            const auto act = AbelianAction::cyclic(n, {1, a}, 11);
            Theta theta(n, 1);
            theta[0] = -static_cast<std::int64_t>(n - 1);
            for (const auto& g : enumerate_g_graphs(act))
                o.require(theta_stability(g_cluster_from_graph(g, act), theta) == Stability::stable,
                          act.describe() + " cluster " + to_string(g));
            for (int trial = 0; trial < 100; ++trial) {
                std::vector<std::uint64_t> mult(n);
                for (auto& m : mult) m = rng() % 4;
                Theta th(n);
                std::int64_t sum = 0;
                for (std::size_t k = 1; k < n; ++k) sum += th[k] = static_cast<std::int64_t>(rng() % 11) - 5;
                th[0] = -sum;
                const auto lambda = theta_to_lambda(th, act);
                const auto dim = dimension_vector(act, mult);
                std::int64_t direct = 0, paired = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    direct += th[k] * static_cast<std::int64_t>(mult[k]);
                    paired += lambda[k] * static_cast<std::int64_t>(dim[k]);
                }
                o.require(direct == paired, act.describe() + " pairing identity");
            }
        }
        std::size_t compared = 0;
        for (auto [n, w] : std::vector<std::pair<std::uint32_t, std::vector<std::int64_t>>>{
                 {1, {0, 0}}, {2, {1, 1}}, {3, {1, 2}}, {3, {1, 1}}}) {
            const auto act = AbelianAction::cyclic(n, w, n == 2 ? 3 : 2);
            for (std::uint32_t bits = 0; bits < (1u << (2 * n)); ++bits) {
                GConstellation c(act);
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t chi = 0; chi < n; ++chi) c.set_coeff(i, chi, bits >> (i * n + chi) & 1);
                if (!check_constellation(c).valid) continue;
                const auto masks = closed_subset_masks(c);
                o.require(std::set<std::uint64_t>(masks.begin(), masks.end()) == invariant_supports(c),
                          act.describe() + " closed subsets");
                ++compared;
            }
        }
        o.require(compared > 20, "too few constellations compared");
    });

    criterion("AC7", "special weight is generic and monomial quotients are stable", 120, [](Outcome& o) {
        for (std::int64_t qd = 2; qd <= 16; ++qd)
            o.require(is_generic({1 - qd, 1}, {1, static_cast<std::uint64_t>(qd - 1)}), "not generic at " + std::to_string(qd));
        std::size_t quotients = 0, oracle_runs = 0;
        for (auto [gens, q] : std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>>{{{2, 3}, 2}, {{2, 3}, 4}, {{2, 5}, 4}}) {
            const auto f = end_action_on_fiber(AffineSemigroup::numerical(gens), q, 2);
            const auto tag = vec_str(gens) + " q=" + std::to_string(q);
            std::vector<FiberModule> modules{f};
            for (const auto& qm : enumerate_monomial_quotients(f, {1, q - 1})) {
                const auto r = lambda_stability_check(qm, {1 - q, 1});
                o.require(r.admissible && r.status == LambdaStatus::stable, tag + " unstable quotient");
                modules.push_back(qm);
                ++quotients;
            }
            for (const auto& m : modules) {
                if (std::pow(double(m.p), double(m.dim())) > 1e4) continue;
                const auto d = static_cast<std::int64_t>(m.dim());
                for (std::array<std::int64_t, 2> lambda : {std::array<std::int64_t, 2>{1 - d, 1}, {d - 1, -1}}) {
                    const bool stable = lambda_stability_check(m, lambda).status == LambdaStatus::stable;
                    o.require(stable == oracle::lambda_stable(m, lambda), tag + " disagrees with subspace oracle");
                    ++oracle_runs;
                }
            }
        }
        o.require(quotients >= 3, "no quotients enumerated");
        o.require(oracle_runs >= 6, "oracle comparisons missing");
    });

    criterion("AC8", "origin fibers", 10, [](Outcome& o) {
        const auto f = fiber_at_origin(AffineSemigroup::numerical({2, 3}), 4, 2);
        std::vector<Vec2> expected;
        for (std::int64_t x : {0, 2, 3, 4, 5, 6, 7, 9}) expected.push_back({x, 0});
        o.require(f.basis == expected, "<2,3> q=4 basis");
        o.require(f.dim_vector() == std::array<std::int64_t, 2>{1, 7}, "<2,3> q=4 dimension vector");
        for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 16}) {
            o.require(fiber_at_origin(AffineSemigroup::numerical({1}), q, 2).dim() == static_cast<std::size_t>(q),
                      "line fiber q=" + std::to_string(q));
            o.require(fiber_at_origin(AffineSemigroup::planar({{1, 0}, {0, 1}}), q, 2).dim() ==
                          static_cast<std::size_t>(q * q),
                      "plane fiber q=" + std::to_string(q));
        }
    });

    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

#include "frob/errors.hpp"
#include "frob/fp.hpp"
#include "frob/fp_linalg.hpp"
#include "frob/lattice.hpp"
#include "frob/monomial_ideal.hpp"
#include "frob/polynomial.hpp"
#include "frob/semigroup.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace frob;

namespace {

using Dense = std::map<std::vector<std::uint32_t>, std::int64_t>;

// Schoolbook expansion with integer coefficients, reduced only at the end.
Dense naive_power(const Dense& f, unsigned n, std::size_t arity) {
    Dense acc{{std::vector<std::uint32_t>(arity, 0), 1}};
    for (unsigned k = 0; k < n; ++k) {
        Dense next;
        for (const auto& [a, ca] : acc)
            for (const auto& [b, cb] : f) {
                auto e = a;
                for (std::size_t i = 0; i < arity; ++i) e[i] += b[i];
                next[e] += ca * cb;
            }
        acc = std::move(next);
    }
    return acc;
}

PolynomialFp from_dense(const Dense& d, std::uint32_t p, std::size_t arity) {
    PolynomialFp f(p, arity);
    for (const auto& [e, c] : d) f.add_term(Monomial(e), fp::reduce(c, p));
    return f;
}

PolynomialFp random_poly(std::mt19937& rng, std::uint32_t p, std::size_t arity, int terms, int max_exp) {
    std::uniform_int_distribution<int> coef(0, static_cast<int>(p) - 1), ex(0, max_exp);
    PolynomialFp f(p, arity);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> e(arity);
        for (auto& x : e) x = static_cast<std::uint32_t>(ex(rng));
        f.add_term(Monomial(e), static_cast<std::uint32_t>(coef(rng)));
    }
    return f;
}

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

} // namespace

TEST_CASE("prime field scalars") {
    FpScalar a(-1, 5);
    CHECK(a.value() == 4);
    CHECK((a * a).value() == 1);
    CHECK((a + FpScalar(3, 5)).value() == 2);
    CHECK(a.inverse() == a);
    CHECK(FpScalar(3, 7).pow(6).value() == 1);
    CHECK_THROWS_AS(FpScalar(1, 6), precondition_error);
    CHECK_THROWS_AS(FpScalar(0, 5).inverse(), precondition_error);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
        for (std::uint32_t x = 1; x < p; ++x) CHECK(fp::mul(x, fp::inv(x, p), p) == 1);
    CHECK(log_p(64, 2) == 6u);
    CHECK(log_p(1, 3) == 0u);
    CHECK_FALSE(log_p(12, 2).has_value());
}

TEST_CASE("parsing and canonical printing") {
    auto f = parse_polynomial("x^2+y^2", 3);
    CHECK(f.size() == 2);
    CHECK(f.coefficient(mono({2, 0})).value() == 1);
    CHECK(f.coefficient(mono({0, 2})).value() == 1);
    CHECK(to_string(f) == "x^2+y^2");

    CHECK(parse_polynomial("3*x", 3).is_zero());
    CHECK(to_string(parse_polynomial("3*x", 3)) == "0");

    auto g = parse_polynomial("y^2-x^3", 5);
    CHECK(g.size() == 2);
    CHECK(g.coefficient(mono({3, 0})).value() == 4);
    CHECK(g.coefficient(mono({0, 2})).value() == 1);
    CHECK(to_string(g) == "4*x^3+y^2");

    CHECK(parse_polynomial("(x+1)^2", 7) == parse_polynomial("x^2 + 2*x + 1", 7));
    CHECK(parse_polynomial("x3", 5).arity() == 4);
    CHECK(parse_polynomial("x", 5, 3).arity() == 3);
}

TEST_CASE("parse errors carry a position") {
    try {
        parse_polynomial("x^2 + * y", 3);
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 6);
    }
    CHECK_THROWS_AS(parse_polynomial("w + 1", 3), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x^", 3), parse_error);
    CHECK_THROWS_AS(parse_polynomial("(x+y", 3), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x", 4), precondition_error);
}

TEST_CASE("powers against schoolbook expansion") {
    auto f = parse_polynomial("x^2+y^2", 3);
    CHECK(pow(f, 2) == parse_polynomial("x^4 + 2*x^2*y^2 + y^4", 3));
    CHECK(pow(f, 0) == PolynomialFp::constant(1, 3, 2));

    auto g = parse_polynomial("y^2-x^3", 3);
    auto g2 = pow(g, 2);
    CHECK(g2 == parse_polynomial("y^4 + x^3*y^2 + x^6", 3));
    Dense dg{{{3, 0}, -1}, {{0, 2}, 1}};
    CHECK(g2 == from_dense(naive_power(dg, 2, 2), 3, 2));

    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t p = std::array<std::uint32_t, 4>{2, 3, 5, 7}[trial % 4];
        auto h = random_poly(rng, p, 3, 3, 2);
        Dense dh;
        for (const auto& [m, c] : h.terms()) dh[m.exponents()] = c;
        const unsigned n = static_cast<unsigned>(trial % 5);
        CHECK(pow(h, n) == from_dense(naive_power(dh, n, 3), p, 3));
    }
}

TEST_CASE("power laws") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[trial % 3];
        auto f = random_poly(rng, p, 2, 3, 3);
        auto g = random_poly(rng, p, 2, 3, 3);
        const unsigned a = static_cast<unsigned>(rng() % 5), b = static_cast<unsigned>(rng() % 5);
        CHECK(pow(f, a + b) == pow(f, a) * pow(f, b));
        CHECK(pow(f + g, p) == pow(f, p) + pow(g, p));
    }
}

TEST_CASE("round trip through the printer") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        auto f = random_poly(rng, 11, 3, 4, 3);
        CHECK(parse_polynomial(to_string(f), 11, 3) == f);
    }
    auto wide = parse_polynomial("x0*x5 + x9^2", 13);
    CHECK(to_string(wide) == "x0*x5+x9^2");
    CHECK(parse_polynomial(to_string(wide), 13) == wide);
}

TEST_CASE("monomial ideal membership") {
    MonomialIdeal cube(2, {mono({3, 0}), mono({0, 3})});
    CHECK_FALSE(monomial_ideal_member(mono({2, 2}), cube));
    CHECK(monomial_ideal_member(mono({3, 1}), cube));
    CHECK(monomial_ideal_member(mono({6, 0}), cube));
    CHECK_THROWS_AS(monomial_ideal_member(mono({1, 1, 1}), cube), precondition_error);

    MonomialIdeal redundant(2, {mono({1, 0}), mono({2, 1}), mono({1, 3})});
    CHECK(redundant.generators().size() == 1);

    // membership is monotone under divisibility
    std::mt19937 rng(3);
    MonomialIdeal mixed(3, {mono({2, 1, 0}), mono({0, 2, 2}), mono({1, 0, 3})});
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint32_t> a(3), b(3);
        for (std::size_t i = 0; i < 3; ++i) {
            a[i] = rng() % 4;
            b[i] = a[i] + rng() % 3;
        }
        if (monomial_ideal_member(mono(a), mixed)) CHECK(monomial_ideal_member(mono(b), mixed));
    }
}

TEST_CASE("frobenius powers of monomial ideals") {
    CHECK(frobenius_power(MonomialIdeal::maximal(2), 3, 3) == MonomialIdeal(2, {mono({3, 0}), mono({0, 3})}));
    MonomialIdeal i(2, {mono({2, 0}), mono({1, 1})});
    CHECK(frobenius_power(i, 1, 2) == i);
    CHECK(frobenius_power(i, 2, 2) == MonomialIdeal(2, {mono({4, 0}), mono({2, 2})}));
    CHECK_THROWS_AS(frobenius_power(i, 6, 2), precondition_error);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        MonomialIdeal j(3, {mono({1, 2, 0}), mono({0, 1, 1}), mono({3, 0, 0})});
        CHECK(frobenius_power(frobenius_power(j, p, p), p, p) == frobenius_power(j, p * p, p));
    }
}

TEST_CASE("lattices in the plane") {
    auto l = Lattice2::spanned_by({{2, 0}, {1, 1}, {0, 2}});
    CHECK(l.index() == 2);
    CHECK(l.contains({3, 1}));
    CHECK_FALSE(l.contains({1, 0}));
    CHECK(l.primitive_on_ray({1, 0}) == Vec2{2, 0});
    // index times the dual of {a + b even} is {v1 = v2 mod 2}
    CHECK(l.scaled_dual() == Lattice2(1, 1, 2));
    auto m = Lattice2::spanned_by({{3, 0}, {1, 1}, {0, 3}});
    CHECK(m.scaled_dual() == Lattice2(1, 2, 3));
    CHECK_THROWS_AS(Lattice2::spanned_by({{1, 1}, {2, 2}}), precondition_error);
}

TEST_CASE("numerical semigroups") {
    auto g = AffineSemigroup::numerical({2, 3});
    CHECK(g.conductor() == 2);
    CHECK(g.elements_below(8) == std::vector<std::int64_t>{0, 2, 3, 4, 5, 6, 7});
    CHECK_FALSE(g.contains({1, 0}));
    auto h = AffineSemigroup::numerical({3, 5, 7});
    CHECK(h.conductor() == 5);
    CHECK(h.generators().size() == 3);
    auto redundant = AffineSemigroup::numerical({4, 6, 10});
    CHECK(redundant.gcd() == 2);
    CHECK(redundant.generators().size() == 2);
    CHECK(redundant.contains({10, 0}));
    CHECK_FALSE(redundant.contains({11, 0}));
    CHECK(g.scaled(4).contains({12, 0}));
    CHECK_FALSE(g.scaled(4).contains({4, 0}));
    CHECK_THROWS_AS(AffineSemigroup::numerical({0}), precondition_error);
}

TEST_CASE("planar semigroups") {
    auto a1 = AffineSemigroup::planar({{2, 0}, {1, 1}, {0, 2}, {3, 1}});
    CHECK(a1.generators().size() == 3);
    CHECK(a1.is_saturated());
    CHECK(a1.contains({5, 3}));
    CHECK_FALSE(a1.contains({1, 0}));

    // the quadrant with the lattice point (1,0) missing
    auto thin = AffineSemigroup::planar({{2, 0}, {3, 0}, {0, 1}, {1, 1}});
    CHECK(thin.generators().size() == 4);
    CHECK_FALSE(thin.is_saturated());
    CHECK_FALSE(thin.contains({1, 0}));
    CHECK(thin.contains({5, 0}));
    CHECK(thin.contains({1, 2}));
    CHECK(thin.normalization().generators() == std::vector<Vec2>{{0, 1}, {1, 0}});
    CHECK_THROWS_AS(AffineSemigroup::planar({{1, 0}, {-1, 0}, {0, 1}}), precondition_error);
}

TEST_CASE("linear algebra over F_p") {
    FpSubspace s(3, 5);
    CHECK(s.insert({1, 2, 3}));
    CHECK_FALSE(s.insert({2, 4, 6}));
    CHECK(s.insert({0, 1, 0}));
    CHECK(s.contains({1, 0, 3}));
    CHECK_FALSE(s.contains({0, 0, 1}));

    FpMatrix shift(3, 3);
    shift.at(1, 0) = 1;
    shift.at(2, 1) = 1;
    CHECK(generated_submodule({shift}, {{1, 0, 0}}, 3, 5).dim() == 3);
    CHECK(generated_submodule({shift}, {{0, 1, 0}}, 3, 5).dim() == 2);
    CHECK(generated_algebra_dim({shift}, 3, 5) == 3);
}

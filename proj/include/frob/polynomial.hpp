#pragma once

#include "frob/fp.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace frob {

/// Exponent vector x^a of a polynomial ring in a fixed number of variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t index, std::size_t arity, std::uint32_t power = 1);

    std::size_t arity() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
    std::uint64_t degree() const noexcept;

    /// Componentwise divisibility; arities must agree.
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    Monomial pow(std::uint32_t n) const;

    /// Plain lexicographic comparison of exponent vectors (x0 most significant).
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic order with x0 > x1 > ...: higher degree first, ties by lex.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Variable names: x, y, z when the ring has at most three variables, otherwise x0..x9.
std::string variable_name(std::size_t index, std::size_t arity);

/// Printed as `x^2*y` (no coefficient); the unit monomial prints as `1`.
std::string to_string(const Monomial& m);

/// Polynomial over F_p in a fixed number of variables; zero coefficients are never stored.
class PolynomialFp {
public:
    using TermMap = std::map<Monomial, std::uint32_t, GrlexGreater>;

    PolynomialFp(std::uint32_t p, std::size_t arity);

    static PolynomialFp constant(std::int64_t c, std::uint32_t p, std::size_t arity);
    static PolynomialFp term(std::int64_t c, Monomial m, std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }
    std::size_t arity() const noexcept { return arity_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Terms in canonical (descending graded-lex) order.
    const TermMap& terms() const noexcept { return terms_; }
    FpScalar coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, std::uint32_t coeff);

    PolynomialFp operator+(const PolynomialFp& o) const;
    PolynomialFp operator-(const PolynomialFp& o) const;
    PolynomialFp operator*(const PolynomialFp& o) const;
    PolynomialFp scaled(std::int64_t c) const;

    /// Same polynomial in a ring with more variables (new variables appended).
    PolynomialFp widened(std::size_t arity) const;
    /// Renames variable i to perm[i].
    PolynomialFp permuted(const std::vector<std::size_t>& perm) const;

    bool operator==(const PolynomialFp& o) const { return p_ == o.p_ && arity_ == o.arity_ && terms_ == o.terms_; }

private:
    void check_compatible(const PolynomialFp& o) const;

    std::uint32_t p_;
    std::size_t arity_;
    TermMap terms_;
};

/// Canonical text: graded-lex descending, explicit `*` and `^`, coefficients in [0, p).
std::string to_string(const PolynomialFp& f);

/// Parses `x^2+y^2`, `y^2-x^3`, `3*x0*x2^4 - (x+1)^2`, ...
/// Variables are x0..x9 with aliases x = x0, y = x1, z = x2. The arity is the largest
/// variable index used plus one unless `arity` is given (which must cover every variable).
PolynomialFp parse_polynomial(std::string_view text, std::uint32_t p,
                              std::optional<std::size_t> arity = std::nullopt);

/// Exact power by repeated squaring; pow(f, 0) = 1.
PolynomialFp pow(const PolynomialFp& f, std::uint64_t n);

} // namespace frob

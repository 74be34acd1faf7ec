#pragma once

#include "frob/polynomial.hpp"

#include <vector>

namespace frob {

/// Ideal generated by monomials; the stored generator set is always minimal under divisibility.
class MonomialIdeal {
public:
    MonomialIdeal(std::size_t arity, std::vector<Monomial> generators);

    /// (x_0, ..., x_{n-1})
    static MonomialIdeal maximal(std::size_t arity);

    std::size_t arity() const noexcept { return arity_; }
    /// Sorted in descending graded-lex order.
    const std::vector<Monomial>& generators() const noexcept { return gens_; }

    bool contains(const Monomial& m) const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    std::size_t arity_;
    std::vector<Monomial> gens_;
};

/// True iff some generator of I divides m.
bool monomial_ideal_member(const Monomial& m, const MonomialIdeal& ideal);

/// I^[q]: generated by q-th powers of the generators. q must be a power of p (q = 1 allowed).
MonomialIdeal frobenius_power(const MonomialIdeal& ideal, std::uint64_t q, std::uint32_t p);

} // namespace frob

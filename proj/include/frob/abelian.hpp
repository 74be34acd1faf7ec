#pragma once

#include "frob/polynomial.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace frob {

/// Z/n_1 x ... x Z/n_k.
class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<std::uint32_t> orders);

    const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }
    std::size_t rank() const noexcept { return orders_.size(); }
    std::uint64_t order() const noexcept { return order_; }

    bool operator==(const AbelianGroup&) const = default;

private:
    std::vector<std::uint32_t> orders_;
    std::uint64_t order_ = 1;
};

/// Character of an abelian group, written additively: the j-th residue lives in Z/n_j.
/// Elements of the group itself use the same representation.
struct Character {
    std::vector<std::uint32_t> residues;

    auto operator<=>(const Character&) const = default;
};

/// Diagonal action of a finite abelian group on k^d: variable i has weight w_i.
class AbelianAction {
public:
    /// Throws precondition_error unless p is prime and the weights generate the character group.
    AbelianAction(AbelianGroup group, std::vector<Character> weights, std::uint32_t p);

    /// 1/n(a_1, ..., a_d)
    static AbelianAction cyclic(std::uint32_t n, const std::vector<std::int64_t>& weights, std::uint32_t p);

    const AbelianGroup& group() const noexcept { return group_; }
    const std::vector<Character>& weights() const noexcept { return weights_; }
    std::uint32_t p() const noexcept { return p_; }
    std::size_t dim() const noexcept { return weights_.size(); }
    std::uint64_t order() const noexcept { return group_.order(); }
    bool is_tame() const noexcept { return order() % p_ != 0; }
    bool is_cyclic() const noexcept { return group_.rank() == 1; }

    // Characters are indexed 0..|G|-1 in lexicographic order of their residue tuples.
    std::size_t character_count() const noexcept { return static_cast<std::size_t>(order()); }
    Character character(std::size_t index) const;
    std::size_t index_of(const Character& chi) const;
    std::vector<Character> characters() const;

    Character add(const Character& a, const Character& b) const;
    Character negate(const Character& a) const;
    Character multiple(std::int64_t k, const Character& a) const;
    Character reduce(std::vector<std::int64_t> residues) const;
    /// Order of chi in the character group.
    std::uint64_t character_order(const Character& chi) const;
    /// Exponent of chi paired with a group element, as a fraction of the common order lcm(n_j).
    std::uint64_t pairing(const Character& chi, const Character& element) const;
    std::uint64_t exponent() const noexcept { return exponent_; }

    /// Size of the subgroup of the character group generated by `gens`.
    std::uint64_t subgroup_order(const std::vector<Character>& gens) const;

    /// 1/n(a_1,...,a_d) for cyclic actions, otherwise a product description.
    std::string describe() const;

private:
    AbelianGroup group_;
    std::vector<Character> weights_;
    std::uint32_t p_;
    std::uint64_t exponent_ = 1;
};

/// Parses the shorthand "1/n(a1,...,ad)".
AbelianAction parse_cyclic_action(std::string_view text, std::uint32_t p);

/// sum_i a_i w_i
Character weight_of(const AbelianAction& action, const std::vector<std::uint32_t>& exponents);
Character weight_of(const AbelianAction& action, const Monomial& m);

/// No nontrivial element fixes a hyperplane (i.e. acts trivially on all but exactly one coordinate).
bool is_small(const AbelianAction& action);

/// Character multiplicities of S/m^[q], i.e. of the monomials in the box [0, q)^d.
struct CoinvariantTable {
    std::uint64_t q = 1;
    /// counts[index] for the character with that index.
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const;
};

CoinvariantTable coinvariant_table(const AbelianAction& action, std::uint64_t q);

/// Every character occurs in S/m^[q].
bool contains_all_irreducibles(const AbelianAction& action, std::uint64_t q);

/// Multiplicity of R^q(U_nu) in R over R^q, indexed by character nu: the number of box
/// monomials of weight q*nu. Requires a tame action.
std::vector<std::uint64_t> pushforward_decomposition(const AbelianAction& action, std::uint64_t q);

/// Minimal monomial generators of the weight-chi part of S over the invariant ring; every
/// generator has i-th exponent below the order of w_i. Sorted by degree, then x before y.
std::vector<Monomial> covariant_generators(const AbelianAction& action, const Character& chi);

} // namespace frob

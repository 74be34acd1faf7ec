#include "frob/monomial_ideal.hpp"

#include "frob/errors.hpp"

#include <algorithm>

namespace frob {

MonomialIdeal::MonomialIdeal(std::size_t arity, std::vector<Monomial> generators) : arity_(arity) {
    for (const auto& g : generators)
        if (g.arity() != arity) throw precondition_error("generator arity mismatch");
    std::sort(generators.begin(), generators.end(), GrlexGreater{});
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
            redundant = j != i && generators[j].divides(generators[i]);
        if (!redundant) gens_.push_back(generators[i]);
    }
}

MonomialIdeal MonomialIdeal::maximal(std::size_t arity) {
    std::vector<Monomial> g;
    for (std::size_t i = 0; i < arity; ++i) g.push_back(Monomial::variable(i, arity));
    return {arity, std::move(g)};
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.arity() != arity_) throw precondition_error("monomial arity does not match the ideal");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool monomial_ideal_member(const Monomial& m, const MonomialIdeal& ideal) { return ideal.contains(m); }

MonomialIdeal frobenius_power(const MonomialIdeal& ideal, std::uint64_t q, std::uint32_t p) {
    if (!is_prime(p)) throw precondition_error("p is not prime");
    if (!log_p(q, p)) throw precondition_error(std::to_string(q) + " is not a power of " + std::to_string(p));
    std::vector<Monomial> g;
    for (const auto& m : ideal.generators()) g.push_back(m.pow(static_cast<std::uint32_t>(q)));
    return {ideal.arity(), std::move(g)};
}

} // namespace frob

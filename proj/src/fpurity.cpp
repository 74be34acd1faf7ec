#include "frob/fpurity.hpp"

#include "frob/errors.hpp"
#include "frob/monomial_ideal.hpp"

namespace frob {

FPurityResult is_f_pure_hypersurface(const PolynomialFp& f, std::uint32_t p) {
    if (f.modulus() != p) throw precondition_error("p does not match the polynomial's field");
    if (f.is_zero()) throw precondition_error("Fedder's criterion needs a nonzero polynomial");

    auto frob_max = frobenius_power(MonomialIdeal::maximal(f.arity()), p, p);
    auto power = pow(f, p - 1);

    FPurityResult out;
    for (const auto& [m, c] : power.terms()) {
        if (frob_max.contains(m)) continue;
        // terms() runs from high to low degree; keep the first hit of the lowest degree seen
        if (!out.witness || m.degree() < out.witness->degree()) out.witness = m;
    }
    out.f_pure = out.witness.has_value();
    return out;
}

} // namespace frob

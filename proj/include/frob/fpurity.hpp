#pragma once

#include "frob/polynomial.hpp"

#include <optional>

namespace frob {

struct FPurityResult {
    bool f_pure = false;
    /// Term of f^(p-1) with every exponent below p, when one exists.
    std::optional<Monomial> witness;
};

/// Fedder's criterion for k[x]/(f): F-pure iff f^(p-1) is not in (x_0^p, ..., x_n^p).
/// The witness is the first qualifying term of lowest degree in canonical print order.
FPurityResult is_f_pure_hypersurface(const PolynomialFp& f, std::uint32_t p);

} // namespace frob

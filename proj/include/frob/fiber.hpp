#pragma once

#include "frob/fp_linalg.hpp"
#include "frob/monomial_module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace frob {

/// Monomial splitting of Gamma into the q-th powers q * Gamma and their complement.
struct SplittingComponents {
    /// q * Gamma as the free module {0} + q * Gamma.
    FractionalMonomialModule e1;
    AffineSemigroup gamma;
    std::int64_t q;

    bool in_e1(const Vec2& v) const { return e1.contains(v); }
    bool in_e2(const Vec2& v) const { return gamma.contains(v) && !e1.contains(v); }
};

SplittingComponents splitting_idempotents(const AffineSemigroup& gamma, std::int64_t q);

/// A finite-dimensional module over F_p with a monomial basis, split as e1 + e2.
struct FiberModule {
    std::vector<Vec2> basis;
    std::vector<std::size_t> e1_indices;
    std::vector<FpMatrix> operators;
    /// One description per operator.
    std::vector<std::string> operator_labels;
    std::uint32_t p = 2;
    std::int64_t q = 1;

    std::size_t dim() const noexcept { return basis.size(); }
    /// (|e1 part|, |e2 part|)
    std::array<std::int64_t, 2> dim_vector() const;
    bool is_e1(std::size_t index) const;
};

/// R / m_{R^q} R for the monomial ring of Gamma: the elements of Gamma outside
/// (q * Gamma)_{>0} + Gamma, ascending. Rank-2 input must be saturated.
FiberModule fiber_at_origin(const AffineSemigroup& gamma, std::int64_t q, std::uint32_t p);

/// Fiber of a numerical semigroup with the monomial generators of End_{R^q}(R) acting, plus
/// the projections onto the e1 and e2 parts.
FiberModule end_action_on_fiber(const AffineSemigroup& gamma, std::int64_t q, std::uint32_t p);

enum class LambdaStatus { stable, not_stable, not_admissible };
std::string to_string(LambdaStatus s);

struct LambdaStabilityReport {
    bool admissible = false;
    LambdaStatus status = LambdaStatus::not_admissible;
    /// Vectors generating a destabilizing submodule; present iff status is not_stable.
    std::optional<std::vector<FpVector>> certificate;
};

/// Largest p^dim handled by the exhaustive checks.
inline constexpr std::uint64_t exhaustive_limit = 1'000'000;

/// King stability of the fiber module for the weight lambda on (e1, e2) dimensions.
LambdaStabilityReport lambda_stability_check(const FiberModule& m, const std::array<std::int64_t, 2>& lambda);

/// Every operator-closed subspace of F_p^n (n = m.dim()), each listed once.
std::vector<FpSubspace> all_submodules(const FiberModule& m);

/// Quotients by operator-closed monomial subspaces whose remaining basis has dimension
/// vector alpha, with induced operators.
std::vector<FiberModule> enumerate_monomial_quotients(const FiberModule& m, const std::array<std::int64_t, 2>& alpha);

} // namespace frob

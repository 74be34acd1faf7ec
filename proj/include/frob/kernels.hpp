#pragma once

// Data-parallel enumeration kernels. Each OpenMP kernel has a `_serial` twin that runs the
// same enumeration in a plain loop; tests pin the two together and bench/ times them.

#include "frob/fp_linalg.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace frob::kernels {

/// Weight data for enumerating the box [0, q)^d in a finite abelian group of `group_size`
/// elements (indices 0..group_size-1, 0 is the identity).
struct BoxWeights {
    std::size_t group_size = 1;
    /// multiples[i][a] = index of a * w_i, for a in [0, q).
    std::vector<std::vector<std::uint32_t>> multiples;
    /// add[x * group_size + y] = index of x + y.
    std::vector<std::uint32_t> add;
};

/// counts[chi] = #{a in [0,q)^d : sum_i a_i w_i = chi}.
std::vector<std::uint64_t> box_weight_histogram(const BoxWeights& w);
std::vector<std::uint64_t> box_weight_histogram_serial(const BoxWeights& w);

/// Subsets S of {0..n-1} (as bitmasks, n <= 20) with succ[v] ⊆ S for all v in S, ascending.
/// `keep` filters the result when given.
std::vector<std::uint64_t> closed_subsets(const std::vector<std::uint64_t>& succ,
                                          const std::function<bool(std::uint64_t)>& keep = {});
std::vector<std::uint64_t> closed_subsets_serial(const std::vector<std::uint64_t>& succ,
                                                 const std::function<bool(std::uint64_t)>& keep = {});

/// Walks all v in F_p^n whose coordinates in `marked` are not all zero, in lexicographic order
/// (coordinate 0 most significant), and returns the first v whose generated submodule under
/// `ops` is proper. Requires p^n to fit comfortably in 64 bits.
std::optional<FpVector> first_non_generating(const std::vector<FpMatrix>& ops, std::size_t n, std::uint32_t p,
                                             const std::vector<std::size_t>& marked);
std::optional<FpVector> first_non_generating_serial(const std::vector<FpMatrix>& ops, std::size_t n,
                                                    std::uint32_t p, const std::vector<std::size_t>& marked);

/// Decodes the lexicographic index used by first_non_generating.
FpVector decode_vector(std::uint64_t index, std::size_t n, std::uint32_t p);

} // namespace frob::kernels

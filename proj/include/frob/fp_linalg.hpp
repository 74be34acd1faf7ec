#pragma once

#include <cstdint>
#include <vector>

namespace frob {

using FpVector = std::vector<std::uint32_t>;

/// Dense square-or-rectangular matrix over F_p, row-major.
struct FpMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> data;

    FpMatrix() = default;
    FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    static FpMatrix identity(std::size_t n);

    std::uint32_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    FpVector apply(const FpVector& v, std::uint32_t p) const;
    FpMatrix multiply(const FpMatrix& o, std::uint32_t p) const;
    /// Keeps the rows and columns listed in `keep` (in that order).
    FpMatrix restricted(const std::vector<std::size_t>& keep) const;
    bool is_zero() const;

    bool operator==(const FpMatrix&) const = default;
};

/// Subspace of F_p^n held as a reduced row echelon basis (canonical per subspace).
class FpSubspace {
public:
    FpSubspace(std::size_t n, std::uint32_t p) : n_(n), p_(p) {}

    std::size_t ambient() const noexcept { return n_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<FpVector>& basis() const noexcept { return rows_; }

    /// Adds v to the span; returns false when v was already inside.
    bool insert(FpVector v);
    bool contains(FpVector v) const;

    bool operator==(const FpSubspace& o) const { return n_ == o.n_ && p_ == o.p_ && rows_ == o.rows_; }
    bool operator<(const FpSubspace& o) const { return rows_ < o.rows_; }

private:
    FpVector reduce(FpVector v) const;

    std::size_t n_;
    std::uint32_t p_;
    std::vector<FpVector> rows_;  // sorted by pivot, fully reduced
    std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing `seeds` and stable under every operator.
FpSubspace generated_submodule(const std::vector<FpMatrix>& ops, const std::vector<FpVector>& seeds,
                               std::size_t n, std::uint32_t p);

/// Dimension of the unital algebra generated by `ops` (as a subspace of n×n matrices).
std::size_t generated_algebra_dim(const std::vector<FpMatrix>& ops, std::size_t n, std::uint32_t p);

} // namespace frob

#include "frob/fp_linalg.hpp"

#include "frob/errors.hpp"
#include "frob/fp.hpp"

#include <algorithm>

namespace frob {

FpMatrix FpMatrix::identity(std::size_t n) {
    FpMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpVector FpMatrix::apply(const FpVector& v, std::uint32_t p) const {
    if (v.size() != cols) throw precondition_error("matrix/vector size mismatch");
    FpVector out(rows, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc += std::uint64_t{at(i, j)} * v[j] % p;
        out[i] = static_cast<std::uint32_t>(acc % p);
    }
    return out;
}

FpMatrix FpMatrix::multiply(const FpMatrix& o, std::uint32_t p) const {
    if (cols != o.rows) throw precondition_error("matrix size mismatch");
    FpMatrix r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            auto a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) = fp::add(r.at(i, j), fp::mul(a, o.at(k, j), p), p);
        }
    return r;
}

FpMatrix FpMatrix::restricted(const std::vector<std::size_t>& keep) const {
    FpMatrix r(keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) r.at(i, j) = at(keep[i], keep[j]);
    return r;
}

bool FpMatrix::is_zero() const {
    return std::all_of(data.begin(), data.end(), [](auto x) { return x == 0; });
}

FpVector FpSubspace::reduce(FpVector v) const {
    for (auto& x : v) x %= p_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto c = v[pivots_[r]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) v[j] = fp::sub(v[j], fp::mul(c, rows_[r][j], p_), p_);
    }
    return v;
}

bool FpSubspace::contains(FpVector v) const {
    if (v.size() != n_) throw precondition_error("vector size mismatch");
    v = reduce(std::move(v));
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

bool FpSubspace::insert(FpVector v) {
    if (v.size() != n_) throw precondition_error("vector size mismatch");
    v = reduce(std::move(v));
    auto it = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    if (it == v.end()) return false;
    std::size_t piv = static_cast<std::size_t>(it - v.begin());
    auto inv = fp::inv(v[piv], p_);
    for (auto& x : v) x = fp::mul(x, inv, p_);
    for (auto& row : rows_) {
        auto c = row[piv];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) row[j] = fp::sub(row[j], fp::mul(c, v[j], p_), p_);
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

FpSubspace generated_submodule(const std::vector<FpMatrix>& ops, const std::vector<FpVector>& seeds,
                               std::size_t n, std::uint32_t p) {
    FpSubspace span(n, p);
    std::vector<FpVector> frontier;
    for (const auto& s : seeds)
        if (span.insert(s)) frontier.push_back(s);
    while (!frontier.empty() && span.dim() < n) {
        auto v = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& op : ops) {
            auto w = op.apply(v, p);
            if (span.insert(w)) frontier.push_back(std::move(w));
        }
    }
    return span;
}

std::size_t generated_algebra_dim(const std::vector<FpMatrix>& ops, std::size_t n, std::uint32_t p) {
    FpSubspace span(n * n, p);
    std::vector<FpMatrix> frontier{FpMatrix::identity(n)};
    span.insert(frontier.front().data);
    while (!frontier.empty()) {
        auto m = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& op : ops) {
            auto prod = op.multiply(m, p);
            if (span.insert(prod.data)) frontier.push_back(std::move(prod));
        }
    }
    return span.dim();
}

} // namespace frob

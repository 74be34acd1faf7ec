#include "frob/kernels.hpp"

#include "frob/errors.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frob::kernels {

namespace {

// Histogram of the sub-box with a_0 fixed; odometer over the remaining coordinates.
void accumulate_slice(const BoxWeights& w, std::uint32_t a0, std::vector<std::uint64_t>& counts) {
    const std::size_t d = w.multiples.size();
    const std::size_t N = w.group_size;
    const std::size_t q = w.multiples[0].size();
    // partial[i] = weight of (a_0, ..., a_i)
    std::vector<std::uint32_t> digit(d, 0), partial(d, 0);
    partial[0] = w.multiples[0][a0];
    for (std::size_t i = 1; i < d; ++i) partial[i] = w.add[partial[i - 1] * N + w.multiples[i][0]];
    for (;;) {
        ++counts[partial[d - 1]];
        std::size_t i = d - 1;
        while (i > 0 && ++digit[i] == q) digit[i--] = 0;
        if (i == 0) return;
        for (std::size_t j = i; j < d; ++j) partial[j] = w.add[partial[j - 1] * N + w.multiples[j][digit[j]]];
    }
}

void check_box(const BoxWeights& w) {
    if (w.multiples.empty()) throw precondition_error("box needs at least one coordinate");
    if (w.add.size() != w.group_size * w.group_size) throw precondition_error("malformed addition table");
    for (const auto& m : w.multiples)
        if (m.size() != w.multiples[0].size() || m.empty()) throw precondition_error("ragged box");
}

bool is_closed(std::uint64_t mask, const std::vector<std::uint64_t>& succ) {
    for (std::size_t v = 0; v < succ.size(); ++v)
        if ((mask >> v & 1) && (succ[v] & ~mask)) return false;
    return true;
}

void check_subsets(const std::vector<std::uint64_t>& succ) {
    if (succ.size() > 20) throw precondition_error("closed-subset enumeration is limited to 20 vertices");
}

std::uint64_t vector_count(std::size_t n, std::uint32_t p) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / p / 4)
            throw precondition_error("vector space too large to enumerate");
        total *= p;
    }
    return total;
}

bool is_candidate(const FpVector& v, const std::vector<std::size_t>& marked) {
    return std::any_of(marked.begin(), marked.end(), [&](std::size_t i) { return v[i] != 0; });
}

bool generates(const std::vector<FpMatrix>& ops, const FpVector& v, std::size_t n, std::uint32_t p) {
    return generated_submodule(ops, {v}, n, p).dim() == n;
}

} // namespace

std::vector<std::uint64_t> box_weight_histogram(const BoxWeights& w) {
    check_box(w);
    const auto q = static_cast<std::int64_t>(w.multiples[0].size());
    std::vector<std::uint64_t> counts(w.group_size, 0);
    if (w.multiples.size() == 1) return box_weight_histogram_serial(w);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(w.group_size, 0);
#pragma omp for schedule(static)
        for (std::int64_t a0 = 0; a0 < q; ++a0) accumulate_slice(w, static_cast<std::uint32_t>(a0), local);
#pragma omp critical
        for (std::size_t c = 0; c < counts.size(); ++c) counts[c] += local[c];
    }
    return counts;
}

std::vector<std::uint64_t> box_weight_histogram_serial(const BoxWeights& w) {
    check_box(w);
    const std::size_t d = w.multiples.size();
    const std::size_t q = w.multiples[0].size();
    std::vector<std::uint64_t> counts(w.group_size, 0);
    std::vector<std::size_t> a(d, 0);
    for (;;) {
        std::uint32_t chi = 0;
        for (std::size_t i = 0; i < d; ++i) chi = w.add[chi * w.group_size + w.multiples[i][a[i]]];
        ++counts[chi];
        std::size_t i = d;
        while (i > 0 && ++a[i - 1] == q) a[--i] = 0;
        if (i == 0) break;
    }
    return counts;
}

std::vector<std::uint64_t> closed_subsets(const std::vector<std::uint64_t>& succ,
                                          const std::function<bool(std::uint64_t)>& keep) {
    check_subsets(succ);
    const auto total = static_cast<std::int64_t>(std::uint64_t{1} << succ.size());
    std::vector<std::uint64_t> out;
#pragma omp parallel
    {
        std::vector<std::uint64_t> local;
#pragma omp for schedule(static)
        for (std::int64_t m = 0; m < total; ++m) {
            auto mask = static_cast<std::uint64_t>(m);
            if (is_closed(mask, succ) && (!keep || keep(mask))) local.push_back(mask);
        }
#pragma omp critical
        out.insert(out.end(), local.begin(), local.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> closed_subsets_serial(const std::vector<std::uint64_t>& succ,
                                                 const std::function<bool(std::uint64_t)>& keep) {
    check_subsets(succ);
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << succ.size()); ++mask)
        if (is_closed(mask, succ) && (!keep || keep(mask))) out.push_back(mask);
    return out;
}

FpVector decode_vector(std::uint64_t index, std::size_t n, std::uint32_t p) {
    FpVector v(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        v[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return v;
}

std::optional<FpVector> first_non_generating(const std::vector<FpMatrix>& ops, std::size_t n, std::uint32_t p,
                                             const std::vector<std::size_t>& marked) {
    const auto total = static_cast<std::int64_t>(vector_count(n, p));
    std::int64_t best = total;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
    for (std::int64_t idx = 0; idx < total; ++idx) {
        if (idx >= best) continue;
        auto v = decode_vector(static_cast<std::uint64_t>(idx), n, p);
        if (is_candidate(v, marked) && !generates(ops, v, n, p)) best = idx;
    }
    if (best == total) return std::nullopt;
    return decode_vector(static_cast<std::uint64_t>(best), n, p);
}

std::optional<FpVector> first_non_generating_serial(const std::vector<FpMatrix>& ops, std::size_t n,
                                                    std::uint32_t p, const std::vector<std::size_t>& marked) {
    const auto total = vector_count(n, p);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto v = decode_vector(idx, n, p);
        if (is_candidate(v, marked) && !generates(ops, v, n, p)) return v;
    }
    return std::nullopt;
}

} // namespace frob::kernels

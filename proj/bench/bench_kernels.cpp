// Times each OpenMP kernel against its serial twin on inputs large enough to matter.
#include "frob/abelian.hpp"
#include "frob/kernels.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

using namespace frob;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %9.3f ms   parallel %9.3f ms   speedup %5.2fx\n", name, serial * 1e3, parallel * 1e3,
                serial / parallel);
}

kernels::BoxWeights box_for(std::uint32_t n, std::vector<std::int64_t> weights, std::uint32_t q) {
    kernels::BoxWeights w;
    w.group_size = n;
    for (auto a : weights) {
        std::vector<std::uint32_t> row(q);
        for (std::uint32_t k = 0; k < q; ++k) row[k] = static_cast<std::uint32_t>((k * a) % n);
        w.multiples.push_back(row);
    }
    w.add.resize(std::size_t{n} * n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) w.add[x * n + y] = (x + y) % n;
    return w;
}

} // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    const auto box = box_for(7, {1, 3, 5}, 128);
    std::vector<std::uint64_t> sink;
    report("box_weight_histogram", seconds([&] { sink = kernels::box_weight_histogram_serial(box); }, 5),
           seconds([&] { sink = kernels::box_weight_histogram(box); }, 5));

    std::vector<std::uint64_t> succ(18, 0);
    for (std::size_t v = 0; v + 3 < succ.size(); v += 2) succ[v] = std::uint64_t{1} << (v + 3);
    std::vector<std::uint64_t> subsets;
    report("closed_subsets", seconds([&] { subsets = kernels::closed_subsets_serial(succ); }, 3),
           seconds([&] { subsets = kernels::closed_subsets(succ); }, 3));

    // Nilpotent shift on F_3^11: every vector generates a proper submodule only when its lead
    // coordinate vanishes, so the search runs through most of the space.
    const std::size_t n = 11;
    FpMatrix shift(n, n);
    for (std::size_t k = 0; k + 1 < n; ++k) shift.at(k + 1, k) = 1;
    std::optional<FpVector> found;
    report("first_non_generating", seconds([&] { found = kernels::first_non_generating_serial({shift}, n, 3, {0}); }, 1),
           seconds([&] { found = kernels::first_non_generating({shift}, n, 3, {0}); }, 1));
    std::printf("checksum %zu %zu %d\n", sink.size(), subsets.size(), found.has_value() ? 1 : 0);
    return 0;
}

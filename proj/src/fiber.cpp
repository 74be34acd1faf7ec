#include "frob/fiber.hpp"

#include "frob/errors.hpp"
#include "frob/fp.hpp"
#include "frob/kernels.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace frob {

SplittingComponents splitting_idempotents(const AffineSemigroup& gamma, std::int64_t q) {
    if (q <= 0) throw precondition_error("q must be positive");
    return {FractionalMonomialModule(gamma.scaled(q), {Vec2{0, 0}}), gamma, q};
}

std::array<std::int64_t, 2> FiberModule::dim_vector() const {
    const auto a = static_cast<std::int64_t>(e1_indices.size());
    return {a, static_cast<std::int64_t>(basis.size()) - a};
}

bool FiberModule::is_e1(std::size_t index) const {
    return std::find(e1_indices.begin(), e1_indices.end(), index) != e1_indices.end();
}

FiberModule fiber_at_origin(const AffineSemigroup& gamma, std::int64_t q, std::uint32_t p) {
    if (!is_prime(p)) throw precondition_error(std::to_string(p) + " is not prime");
    FiberModule f;
    f.p = p;
    f.q = q;
    for (const auto& piece : residue_decomposition(gamma, q))
        f.basis.insert(f.basis.end(), piece.module.generators().begin(), piece.module.generators().end());
    std::sort(f.basis.begin(), f.basis.end());
    const auto e1 = splitting_idempotents(gamma, q);
    for (std::size_t k = 0; k < f.basis.size(); ++k)
        if (e1.in_e1(f.basis[k])) f.e1_indices.push_back(k);
    return f;
}

FiberModule end_action_on_fiber(const AffineSemigroup& gamma, std::int64_t q, std::uint32_t p) {
    if (gamma.rank() != 1) throw precondition_error("the fiber action is implemented for numerical semigroups only");
    auto f = fiber_at_origin(gamma, q, p);
    const auto n = f.dim();
    const auto pieces = residue_decomposition(gamma, q);
    const auto table = end_ring_table(pieces, gamma.scaled(q));
    std::map<Vec2, std::size_t> where;
    for (std::size_t k = 0; k < n; ++k) where[f.basis[k]] = k;
    auto residue = [q](std::int64_t x) { return ((x % q) + q) % q; };

    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = 0; j < pieces.size(); ++j)
            for (const auto& v : table.blocks[i][j].generators()) {
                FpMatrix m(n, n);
                for (std::size_t k = 0; k < n; ++k) {
                    if (residue(f.basis[k][0]) != pieces[i].residue[0]) continue;
                    auto it = where.find(f.basis[k] + v);
                    if (it != where.end()) m.at(it->second, k) = 1;
                }
                if (m.is_zero()) continue;
                f.operators.push_back(std::move(m));
                f.operator_labels.push_back("hom " + std::to_string(pieces[i].residue[0]) + "->" +
                                            std::to_string(pieces[j].residue[0]) + " by " + std::to_string(v[0]));
            }
    FpMatrix e1(n, n), e2(n, n);
    for (std::size_t k = 0; k < n; ++k) (f.is_e1(k) ? e1 : e2).at(k, k) = 1;
    f.operators.push_back(std::move(e1));
    f.operator_labels.push_back("e1");
    f.operators.push_back(std::move(e2));
    f.operator_labels.push_back("e2");
    return f;
}

std::string to_string(LambdaStatus s) {
    switch (s) {
    case LambdaStatus::stable: return "stable";
    case LambdaStatus::not_stable: return "not_stable";
    case LambdaStatus::not_admissible: return "not_admissible";
    }
    return "unknown";
}

namespace {

void require_exhaustive(const FiberModule& m) {
    std::uint64_t size = 1;
    for (std::size_t k = 0; k < m.dim(); ++k) {
        size *= m.p;
        if (size > exhaustive_limit)
            throw precondition_error("p^dim = " + std::to_string(m.p) + "^" + std::to_string(m.dim()) +
                                     " exceeds the exhaustive bound " + std::to_string(exhaustive_limit));
    }
}

// (dim of the e1 coordinates of W, dim of the rest); W must be stable under both projections.
std::array<std::int64_t, 2> split_dims(const FiberModule& m, const FpSubspace& w) {
    FpSubspace e1(m.dim(), m.p);
    for (auto v : w.basis()) {
        for (std::size_t k = 0; k < m.dim(); ++k)
            if (!m.is_e1(k)) v[k] = 0;
        e1.insert(std::move(v));
    }
    const auto a = static_cast<std::int64_t>(e1.dim());
    return {a, static_cast<std::int64_t>(w.dim()) - a};
}

} // namespace

std::vector<FpSubspace> all_submodules(const FiberModule& m) {
    require_exhaustive(m);
    const auto n = m.dim();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= m.p;

    std::set<FpSubspace> cyclic;
    for (std::uint64_t idx = 1; idx < total; ++idx)
        cyclic.insert(generated_submodule(m.operators, {kernels::decode_vector(idx, n, m.p)}, n, m.p));

    std::set<FpSubspace> seen{FpSubspace(n, m.p)};
    std::vector<FpSubspace> frontier{FpSubspace(n, m.p)};
    while (!frontier.empty()) {
        std::vector<FpSubspace> next;
        for (const auto& w : frontier)
            for (const auto& c : cyclic) {
                FpSubspace sum = w;
                bool grew = false;
                for (const auto& v : c.basis()) grew = sum.insert(v) || grew;
                if (grew && seen.insert(sum).second) next.push_back(std::move(sum));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

LambdaStabilityReport lambda_stability_check(const FiberModule& m, const std::array<std::int64_t, 2>& lambda) {
    LambdaStabilityReport r;
    const auto dv = m.dim_vector();
    r.admissible = lambda[0] * dv[0] + lambda[1] * dv[1] == 0;
    if (!r.admissible) {
        r.status = LambdaStatus::not_admissible;
        return r;
    }
    require_exhaustive(m);

    if (dv[0] == 1 && lambda[1] > 0) {
        // A destabilizing submodule here is exactly a proper one meeting the e1 line.
        auto v = kernels::first_non_generating(m.operators, m.dim(), m.p, m.e1_indices);
        if (v) {
            r.status = LambdaStatus::not_stable;
            r.certificate = std::vector<FpVector>{*v};
        } else {
            r.status = LambdaStatus::stable;
        }
        return r;
    }

    const auto n = m.dim();
    for (const auto& w : all_submodules(m)) {
        if (w.dim() == 0 || w.dim() == n) continue;
        const auto d = split_dims(m, w);
        if (lambda[0] * d[0] + lambda[1] * d[1] <= 0) {
            r.status = LambdaStatus::not_stable;
            r.certificate = w.basis();
            return r;
        }
    }
    r.status = LambdaStatus::stable;
    return r;
}

std::vector<FiberModule> enumerate_monomial_quotients(const FiberModule& m, const std::array<std::int64_t, 2>& alpha) {
    const auto n = m.dim();
    if (n > 20) throw precondition_error("monomial quotient enumeration is limited to 20 basis elements");
    std::vector<std::uint64_t> succ(n, 0);
    for (const auto& op : m.operators)
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t row = 0; row < n; ++row)
                if (op.at(row, col) != 0) succ[col] |= std::uint64_t{1} << row;
    std::uint64_t e1_mask = 0;
    for (auto k : m.e1_indices) e1_mask |= std::uint64_t{1} << k;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;

    auto keep = [&](std::uint64_t sub) {
        const auto rest = full & ~sub;
        const auto a = static_cast<std::int64_t>(__builtin_popcountll(rest & e1_mask));
        const auto b = static_cast<std::int64_t>(__builtin_popcountll(rest & ~e1_mask));
        return a == alpha[0] && b == alpha[1];
    };
    std::vector<FiberModule> out;
    for (auto sub : kernels::closed_subsets(succ, keep)) {
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < n; ++k)
            if (!(sub >> k & 1)) rest.push_back(k);
        FiberModule qm;
        qm.p = m.p;
        qm.q = m.q;
        for (std::size_t k = 0; k < rest.size(); ++k) {
            qm.basis.push_back(m.basis[rest[k]]);
            if (m.is_e1(rest[k])) qm.e1_indices.push_back(k);
        }
        for (std::size_t o = 0; o < m.operators.size(); ++o) {
            qm.operators.push_back(m.operators[o].restricted(rest));
            qm.operator_labels.push_back(o < m.operator_labels.size() ? m.operator_labels[o] : std::string{});
        }
        out.push_back(std::move(qm));
    }
    return out;
}

} // namespace frob

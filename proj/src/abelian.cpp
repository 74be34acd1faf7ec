#include "frob/abelian.hpp"

#include "frob/errors.hpp"
#include "frob/kernels.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace frob {

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) orders_.push_back(1);
    for (auto n : orders_) {
        if (n == 0) throw precondition_error("group factor orders must be positive");
        order_ *= n;
        if (order_ > (1u << 20)) throw precondition_error("group too large");
    }
}

AbelianAction::AbelianAction(AbelianGroup group, std::vector<Character> weights, std::uint32_t p)
    : group_(std::move(group)), p_(p) {
    if (!is_prime(p)) throw precondition_error("p = " + std::to_string(p) + " is not prime");
    if (weights.empty()) throw precondition_error("an action needs at least one variable");
    for (auto n : group_.orders()) exponent_ = std::lcm(exponent_, std::uint64_t{n});
    for (auto& w : weights) {
        if (w.residues.size() != group_.rank()) throw precondition_error("weight rank does not match the group");
        for (std::size_t j = 0; j < w.residues.size(); ++j) w.residues[j] %= group_.orders()[j];
    }
    weights_ = std::move(weights);
    if (subgroup_order(weights_) != order())
        throw precondition_error("action is not faithful: the weights do not generate the character group");
}

AbelianAction AbelianAction::cyclic(std::uint32_t n, const std::vector<std::int64_t>& weights, std::uint32_t p) {
    if (n == 0) throw precondition_error("cyclic group order must be positive");
    std::vector<Character> w;
    for (auto a : weights) {
        auto r = a % static_cast<std::int64_t>(n);
        if (r < 0) r += n;
        w.push_back({{static_cast<std::uint32_t>(r)}});
    }
    return {AbelianGroup({n}), std::move(w), p};
}

Character AbelianAction::character(std::size_t index) const {
    if (index >= character_count()) throw precondition_error("character index out of range");
    Character c{std::vector<std::uint32_t>(group_.rank(), 0)};
    for (std::size_t j = group_.rank(); j-- > 0;) {
        c.residues[j] = static_cast<std::uint32_t>(index % group_.orders()[j]);
        index /= group_.orders()[j];
    }
    return c;
}

std::size_t AbelianAction::index_of(const Character& chi) const {
    if (chi.residues.size() != group_.rank()) throw precondition_error("character rank mismatch");
    std::size_t idx = 0;
    for (std::size_t j = 0; j < group_.rank(); ++j) idx = idx * group_.orders()[j] + chi.residues[j] % group_.orders()[j];
    return idx;
}

std::vector<Character> AbelianAction::characters() const {
    std::vector<Character> out;
    for (std::size_t i = 0; i < character_count(); ++i) out.push_back(character(i));
    return out;
}

Character AbelianAction::reduce(std::vector<std::int64_t> residues) const {
    if (residues.size() != group_.rank()) throw precondition_error("character rank mismatch");
    Character c{std::vector<std::uint32_t>(residues.size())};
    for (std::size_t j = 0; j < residues.size(); ++j) {
        std::int64_t n = group_.orders()[j];
        c.residues[j] = static_cast<std::uint32_t>(((residues[j] % n) + n) % n);
    }
    return c;
}

Character AbelianAction::add(const Character& a, const Character& b) const {
    std::vector<std::int64_t> r(group_.rank());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = std::int64_t{a.residues.at(j)} + b.residues.at(j);
    return reduce(std::move(r));
}

Character AbelianAction::negate(const Character& a) const { return multiple(-1, a); }

Character AbelianAction::multiple(std::int64_t k, const Character& a) const {
    std::vector<std::int64_t> r(group_.rank());
    for (std::size_t j = 0; j < r.size(); ++j) {
        std::int64_t n = group_.orders()[j];
        r[j] = ((k % n) * std::int64_t{a.residues.at(j)}) % n;
    }
    return reduce(std::move(r));
}

std::uint64_t AbelianAction::character_order(const Character& chi) const {
    std::uint64_t ord = 1;
    for (std::size_t j = 0; j < group_.rank(); ++j) {
        std::uint64_t n = group_.orders()[j];
        ord = std::lcm(ord, n / std::gcd(n, std::uint64_t{chi.residues.at(j)}));
    }
    return ord;
}

std::uint64_t AbelianAction::pairing(const Character& chi, const Character& element) const {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < group_.rank(); ++j) {
        std::uint64_t n = group_.orders()[j];
        acc += (std::uint64_t{chi.residues.at(j)} * element.residues.at(j) % n) * (exponent_ / n);
    }
    return acc % exponent_;
}

std::uint64_t AbelianAction::subgroup_order(const std::vector<Character>& gens) const {
    std::vector<char> seen(character_count(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::uint64_t count = 1;
    while (!stack.empty()) {
        auto c = character(stack.back());
        stack.pop_back();
        for (const auto& g : gens) {
            auto idx = index_of(add(c, g));
            if (!seen[idx]) {
                seen[idx] = 1;
                ++count;
                stack.push_back(idx);
            }
        }
    }
    return count;
}

std::string AbelianAction::describe() const {
    std::string s;
    if (is_cyclic()) {
        s = "1/" + std::to_string(group_.orders()[0]) + "(";
        for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + std::to_string(weights_[i].residues[0]);
        return s + ")";
    }
    s = "Z";
    for (std::size_t j = 0; j < group_.rank(); ++j) s += (j ? "xZ/" : "/") + std::to_string(group_.orders()[j]);
    s += " weights [";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        s += i ? ",(" : "(";
        for (std::size_t j = 0; j < group_.rank(); ++j)
            s += (j ? "," : "") + std::to_string(weights_[i].residues[j]);
        s += ")";
    }
    return s + "]";
}

namespace {

std::int64_t parse_int(std::string_view& s, std::string_view full) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{})
        throw parse_error("expected an integer in group \"" + std::string(full) + "\"",
                          static_cast<std::size_t>(s.data() - full.data()));
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    return v;
}

void expect(std::string_view& s, char c, std::string_view full) {
    if (s.empty() || s.front() != c)
        throw parse_error(std::string("expected '") + c + "' in group \"" + std::string(full) + "\"",
                          static_cast<std::size_t>(s.data() - full.data()));
    s.remove_prefix(1);
}

} // namespace

AbelianAction parse_cyclic_action(std::string_view text, std::uint32_t p) {
    auto s = text;
    if (parse_int(s, text) != 1)
        throw parse_error("group shorthand must start with \"1/\"", 0);
    expect(s, '/', text);
    auto n = parse_int(s, text);
    if (n <= 0) throw precondition_error("group order must be positive");
    expect(s, '(', text);
    std::vector<std::int64_t> w{parse_int(s, text)};
    while (!s.empty() && s.front() == ',') {
        s.remove_prefix(1);
        w.push_back(parse_int(s, text));
    }
    expect(s, ')', text);
    if (!s.empty()) throw parse_error("trailing characters in group", static_cast<std::size_t>(s.data() - text.data()));
    return AbelianAction::cyclic(static_cast<std::uint32_t>(n), w, p);
}

Character weight_of(const AbelianAction& action, const std::vector<std::uint32_t>& exponents) {
    if (exponents.size() != action.dim()) throw precondition_error("exponent vector arity does not match the action");
    std::vector<std::int64_t> r(action.group().rank(), 0);
    for (std::size_t i = 0; i < exponents.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) {
            std::int64_t n = action.group().orders()[j];
            r[j] = (r[j] + (exponents[i] % n) * std::int64_t{action.weights()[i].residues[j]}) % n;
        }
    return action.reduce(std::move(r));
}

Character weight_of(const AbelianAction& action, const Monomial& m) { return weight_of(action, m.exponents()); }

bool is_small(const AbelianAction& action) {
    // A nontrivial g acting trivially on every coordinate but i lies in the annihilator of
    // {w_j : j != i}, whose order is |G| / |<w_j : j != i>|. Faithfulness makes g act
    // nontrivially on coordinate i, so the action is small iff every such annihilator is trivial.
    for (std::size_t i = 0; i < action.dim(); ++i) {
        std::vector<Character> others;
        for (std::size_t j = 0; j < action.dim(); ++j)
            if (j != i) others.push_back(action.weights()[j]);
        if (action.subgroup_order(others) != action.order()) return false;
    }
    return true;
}

std::uint64_t CoinvariantTable::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

namespace {

void require_q(const AbelianAction& action, std::uint64_t q) {
    if (!log_p(q, action.p()))
        throw precondition_error(std::to_string(q) + " is not a power of p = " + std::to_string(action.p()));
}

kernels::BoxWeights box_weights(const AbelianAction& action, std::uint64_t q) {
    kernels::BoxWeights w;
    w.group_size = action.character_count();
    w.add.resize(w.group_size * w.group_size);
    for (std::size_t x = 0; x < w.group_size; ++x)
        for (std::size_t y = 0; y < w.group_size; ++y)
            w.add[x * w.group_size + y] =
                static_cast<std::uint32_t>(action.index_of(action.add(action.character(x), action.character(y))));
    for (const auto& wt : action.weights()) {
        std::vector<std::uint32_t> mult(q);
        std::uint32_t cur = 0;
        auto step = static_cast<std::uint32_t>(action.index_of(wt));
        for (std::uint64_t a = 0; a < q; ++a) {
            mult[a] = cur;
            cur = w.add[cur * w.group_size + step];
        }
        w.multiples.push_back(std::move(mult));
    }
    return w;
}

} // namespace

CoinvariantTable coinvariant_table(const AbelianAction& action, std::uint64_t q) {
    require_q(action, q);
    return {q, kernels::box_weight_histogram(box_weights(action, q))};
}

bool contains_all_irreducibles(const AbelianAction& action, std::uint64_t q) {
    auto t = coinvariant_table(action, q);
    return std::all_of(t.counts.begin(), t.counts.end(), [](auto c) { return c > 0; });
}

std::vector<std::uint64_t> pushforward_decomposition(const AbelianAction& action, std::uint64_t q) {
    if (!action.is_tame())
        throw precondition_error("wild action: p = " + std::to_string(action.p()) + " divides |G| = " +
                                 std::to_string(action.order()));
    auto table = coinvariant_table(action, q);
    std::vector<std::uint64_t> mult(action.character_count());
    for (std::size_t nu = 0; nu < mult.size(); ++nu)
        mult[nu] = table.counts[action.index_of(action.multiple(static_cast<std::int64_t>(q % action.exponent()),
                                                                 action.character(nu)))];
    return mult;
}

std::vector<Monomial> covariant_generators(const AbelianAction& action, const Character& chi) {
    const std::size_t d = action.dim();
    std::vector<std::uint32_t> bound(d);
    for (std::size_t i = 0; i < d; ++i)
        bound[i] = static_cast<std::uint32_t>(action.character_order(action.weights()[i]));
    const auto target = action.reduce({chi.residues.begin(), chi.residues.end()});

    std::vector<Monomial> candidates;
    std::vector<std::uint32_t> a(d, 0);
    for (;;) {
        if (weight_of(action, a) == target) candidates.emplace_back(a);
        std::size_t i = d;
        while (i > 0 && ++a[i - 1] == bound[i - 1]) a[--i] = 0;
        if (i == 0) break;
    }

    const Character trivial = action.character(0);
    std::vector<Monomial> gens;
    for (const auto& m : candidates) {
        bool redundant = std::any_of(candidates.begin(), candidates.end(), [&](const Monomial& b) {
            if (b == m || !b.divides(m)) return false;
            std::vector<std::uint32_t> diff(d);
            for (std::size_t i = 0; i < d; ++i) diff[i] = m[i] - b[i];
            return weight_of(action, diff) == trivial;
        });
        if (!redundant) gens.push_back(m);
    }
    std::sort(gens.begin(), gens.end(), [](const Monomial& x, const Monomial& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return x > y;
    });
    return gens;
}

} // namespace frob

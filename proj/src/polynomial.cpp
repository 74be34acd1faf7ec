#include "frob/polynomial.hpp"

#include "frob/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace frob {

Monomial Monomial::variable(std::size_t index, std::size_t arity, std::uint32_t power) {
    if (index >= arity) throw precondition_error("variable index out of range");
    Monomial m(arity);
    m.exps_[index] = power;
    return m;
}

std::uint64_t Monomial::degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::divides(const Monomial& other) const {
    if (arity() != other.arity()) throw precondition_error("monomial arity mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (arity() != other.arity()) throw precondition_error("monomial arity mismatch");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    return r;
}

Monomial Monomial::pow(std::uint32_t n) const {
    Monomial r = *this;
    for (auto& e : r.exps_) e *= n;
    return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a > b;
}

std::string variable_name(std::size_t index, std::size_t arity) {
    if (arity <= 3) return std::string(1, "xyz"[index]);
    return "x" + std::to_string(index);
}

std::string to_string(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += variable_name(i, m.arity());
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

PolynomialFp::PolynomialFp(std::uint32_t p, std::size_t arity) : p_(p), arity_(arity) {
    if (!is_prime(p)) throw precondition_error("modulus " + std::to_string(p) + " is not prime");
}

PolynomialFp PolynomialFp::constant(std::int64_t c, std::uint32_t p, std::size_t arity) {
    return term(c, Monomial(arity), p);
}

PolynomialFp PolynomialFp::term(std::int64_t c, Monomial m, std::uint32_t p) {
    PolynomialFp f(p, m.arity());
    f.add_term(m, fp::reduce(c, p));
    return f;
}

FpScalar PolynomialFp::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return {it == terms_.end() ? 0 : it->second, p_};
}

void PolynomialFp::add_term(const Monomial& m, std::uint32_t coeff) {
    if (m.arity() != arity_) throw precondition_error("term arity mismatch");
    coeff %= p_;
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second = fp::add(it->second, coeff, p_);
        if (it->second == 0) terms_.erase(it);
    }
}

void PolynomialFp::check_compatible(const PolynomialFp& o) const {
    if (p_ != o.p_) throw precondition_error("polynomials over different prime fields");
    if (arity_ != o.arity_) throw precondition_error("polynomials in different numbers of variables");
}

PolynomialFp PolynomialFp::operator+(const PolynomialFp& o) const {
    check_compatible(o);
    PolynomialFp r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

PolynomialFp PolynomialFp::operator-(const PolynomialFp& o) const { return *this + o.scaled(-1); }

PolynomialFp PolynomialFp::operator*(const PolynomialFp& o) const {
    check_compatible(o);
    PolynomialFp r(p_, arity_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, fp::mul(c1, c2, p_));
    return r;
}

PolynomialFp PolynomialFp::scaled(std::int64_t c) const {
    PolynomialFp r(p_, arity_);
    auto cc = fp::reduce(c, p_);
    for (const auto& [m, v] : terms_) r.add_term(m, fp::mul(v, cc, p_));
    return r;
}

PolynomialFp PolynomialFp::widened(std::size_t arity) const {
    if (arity < arity_) throw precondition_error("cannot shrink the variable count");
    PolynomialFp r(p_, arity);
    for (const auto& [m, c] : terms_) {
        auto e = m.exponents();
        e.resize(arity, 0);
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

PolynomialFp PolynomialFp::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != arity_) throw precondition_error("permutation size mismatch");
    PolynomialFp r(p_, arity_);
    for (const auto& [m, c] : terms_) {
        std::vector<std::uint32_t> e(arity_, 0);
        for (std::size_t i = 0; i < arity_; ++i) e.at(perm[i]) = m[i];
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

std::string to_string(const PolynomialFp& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : f.terms()) {
        if (!out.empty()) out += '+';
        bool unit = m.degree() == 0;
        if (c != 1 || unit) {
            out += std::to_string(c);
            if (!unit) out += '*';
        }
        if (!unit) out += to_string(m);
    }
    return out;
}

namespace {

constexpr std::size_t kMaxVars = 10;

class Parser {
public:
    Parser(std::string_view text, std::uint32_t p) : text_(text), p_(p) {}

    PolynomialFp parse() {
        auto f = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

    std::size_t max_var() const { return max_var_; }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    PolynomialFp expression() {
        PolynomialFp acc(p_, kMaxVars);
        bool first = true;
        for (;;) {
            int sign = 1;
            if (peek('+') || peek('-')) {
                sign = text_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            auto t = term();
            acc = sign < 0 ? acc - t : acc + t;
            first = false;
        }
        return acc;
    }

    PolynomialFp term() {
        auto acc = factor();
        while (peek('*')) {
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    PolynomialFp factor() {
        auto base = primary();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            return pow(base, integer());
        }
        return base;
    }

    std::uint64_t integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > (std::uint64_t{1} << 58)) fail("integer literal too large");
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
        }
        return v;
    }

    PolynomialFp primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = expression();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return PolynomialFp::constant(static_cast<std::int64_t>(integer() % p_), p_, kMaxVars);
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::size_t index = 0;
            if (c == 'x') {
                ++pos_;
                if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    index = static_cast<std::size_t>(text_[pos_++] - '0');
                    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                        pos_ = start;
                        fail("unknown variable (only x0..x9 are supported)");
                    }
                }
            } else if (c == 'y' || c == 'z') {
                index = c == 'y' ? 1 : 2;
                ++pos_;
            } else {
                fail("unknown variable '" + std::string(1, c) + "'");
            }
            if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                pos_ = start;
                fail("unknown variable");
            }
            max_var_ = std::max(max_var_, index + 1);
            return PolynomialFp::term(1, Monomial::variable(index, kMaxVars), p_);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::uint32_t p_;
    std::size_t pos_ = 0;
    std::size_t max_var_ = 0;
};

} // namespace

PolynomialFp parse_polynomial(std::string_view text, std::uint32_t p, std::optional<std::size_t> arity) {
    if (!is_prime(p)) throw precondition_error("modulus " + std::to_string(p) + " is not prime");
    Parser parser(text, p);
    auto wide = parser.parse();
    std::size_t n = std::max<std::size_t>(parser.max_var(), 1);
    if (arity) {
        if (*arity < parser.max_var())
            throw precondition_error("polynomial uses more than " + std::to_string(*arity) + " variables");
        if (*arity > kMaxVars) throw precondition_error("at most 10 variables are supported");
        n = *arity;
    }
    PolynomialFp f(p, n);
    for (const auto& [m, c] : wide.terms()) {
        auto e = m.exponents();
        e.resize(n);
        f.add_term(Monomial(std::move(e)), c);
    }
    return f;
}

PolynomialFp pow(const PolynomialFp& f, std::uint64_t n) {
    auto result = PolynomialFp::constant(1, f.modulus(), f.arity());
    auto base = f;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

} // namespace frob

#include "frob/fp.hpp"

#include "frob/errors.hpp"

#include <limits>

namespace frob {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<unsigned> log_p(std::uint64_t q, std::uint64_t p) {
    if (p < 2 || q == 0) return std::nullopt;
    unsigned e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return std::nullopt;
    return e;
}

std::uint64_t ipow(std::uint64_t p, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (p != 0 && r > std::numeric_limits<std::uint64_t>::max() / p)
            throw precondition_error("integer power overflows 64 bits");
        r *= p;
    }
    return r;
}

namespace fp {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw precondition_error("zero has no inverse in F_p");
    // Fermat
    std::uint64_t base = a % p, r = 1;
    std::uint64_t n = p - 2;
    while (n) {
        if (n & 1) r = r * base % p;
        base = base * base % p;
        n >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

} // namespace fp

FpScalar::FpScalar(std::int64_t value, std::uint32_t p) : value_(0), p_(p) {
    if (!is_prime(p)) throw precondition_error("modulus " + std::to_string(p) + " is not prime");
    value_ = fp::reduce(value, p);
}

static void check_same(std::uint32_t a, std::uint32_t b) {
    if (a != b) throw precondition_error("mixed moduli in F_p arithmetic");
}

FpScalar FpScalar::operator+(FpScalar o) const {
    check_same(p_, o.p_);
    return {fp::add(value_, o.value_, p_), p_};
}
FpScalar FpScalar::operator-(FpScalar o) const {
    check_same(p_, o.p_);
    return {fp::sub(value_, o.value_, p_), p_};
}
FpScalar FpScalar::operator*(FpScalar o) const {
    check_same(p_, o.p_);
    return {fp::mul(value_, o.value_, p_), p_};
}
FpScalar FpScalar::operator-() const { return {fp::sub(0, value_, p_), p_}; }
FpScalar FpScalar::inverse() const { return {fp::inv(value_, p_), p_}; }

FpScalar FpScalar::pow(std::uint64_t n) const {
    FpScalar r{1, p_}, b = *this;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, FpScalar x) { return os << x.value(); }

} // namespace frob

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>

namespace frob {

bool is_prime(std::uint64_t n);

/// Returns e with q = p^e, or nullopt when q is not a power of p (q = 1 gives e = 0).
std::optional<unsigned> log_p(std::uint64_t q, std::uint64_t p);

/// p^e with overflow check.
std::uint64_t ipow(std::uint64_t p, unsigned e);

/// Element of the prime field F_p.
class FpScalar {
public:
    FpScalar(std::int64_t value, std::uint32_t p);

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FpScalar operator+(FpScalar o) const;
    FpScalar operator-(FpScalar o) const;
    FpScalar operator*(FpScalar o) const;
    FpScalar operator-() const;
    FpScalar inverse() const;
    FpScalar pow(std::uint64_t n) const;

    bool operator==(const FpScalar&) const = default;

private:
    std::uint32_t value_;
    std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, FpScalar x);

namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce(std::int64_t v, std::uint32_t p);

} // namespace fp

} // namespace frob

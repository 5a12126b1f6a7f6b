#pragma once

#include <cstdint>
#include <stdexcept>

namespace qcong {

// Thrown when a requested computation violates a stated hypothesis
// (non-prime modulus, even r in the Hecke setting, ...).
class hypothesis_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when an internal identity that must hold fails to hold
// (nonzero residual in a basis solve, order-search cap exceeded, ...).
class identity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime_u64(std::uint64_t n);

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Inverse of a mod `mod`; throws hypothesis_error if gcd(a, mod) != 1.
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t mod);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// m^k with overflow check against the 2^63 modulus bound.
std::uint64_t checked_pow_u64(std::uint64_t m, unsigned k);

// Kronecker symbol (a/n) with the standard extensions to n <= 0 and even n.
int kronecker(long long a, long long n);

// Overflow-checked signed arithmetic for exponent bookkeeping.
long long checked_add_ll(long long a, long long b);
long long checked_mul_ll(long long a, long long b);

// Floor/ceil division for signed exponents.
inline long long floor_div_ll(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline long long ceil_div_ll(long long a, long long b) {
    return -floor_div_ll(-a, b);
}

} // namespace qcong

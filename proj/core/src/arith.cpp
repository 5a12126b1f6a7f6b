#include "qcong/arith.hpp"

#include <limits>

namespace qcong {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    std::uint64_t r = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, mod);
        base = mulmod_u64(base, base, mod);
        exp >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t mod) {
    // Extended Euclid on signed 128-bit intermediates.
    __int128 t = 0, newt = 1;
    __int128 r = mod, newr = a % mod;
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1)
        throw hypothesis_error("invmod: argument is not a unit modulo the given modulus");
    if (t < 0) t += mod;
    return static_cast<std::uint64_t>(t);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) { std::uint64_t t = a % b; a = b; b = t; }
    return a;
}

std::uint64_t checked_pow_u64(std::uint64_t m, unsigned k) {
    unsigned __int128 v = 1;
    const unsigned __int128 limit = (static_cast<unsigned __int128>(1) << 63);
    for (unsigned i = 0; i < k; ++i) {
        v *= m;
        if (v >= limit)
            throw hypothesis_error("modulus m^k exceeds the 2^63 bound");
    }
    return static_cast<std::uint64_t>(v);
}

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // Pull out factors of 2 from n: (a/2) = (2/a) for odd a.
    while ((n & 1) == 0) {
        n >>= 1;
        long long am = ((a % 8) + 8) % 8;
        if (am == 3 || am == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    // Now 0 <= a < n, n odd positive: standard Jacobi loop.
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            long long nm = n % 8;
            if (nm == 3 || nm == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return (n == 1) ? result : 0;
}

long long checked_add_ll(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("exponent addition overflow");
    return r;
}

long long checked_mul_ll(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("exponent multiplication overflow");
    return r;
}

} // namespace qcong

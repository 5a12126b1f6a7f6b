#pragma once

#include <cstdint>

#include "qcong/arith.hpp"

namespace qcong {

// A prime-power modulus m^k with m >= 5 prime and m^k < 2^63.
struct Modulus {
    std::uint64_t m = 0;
    unsigned k = 0;
    std::uint64_t value = 0;

    Modulus() = default;

    Modulus(std::uint64_t m_, unsigned k_) : m(m_), k(k_) {
        if (m < 5 || !is_prime_u64(m))
            throw hypothesis_error("m must be a prime >= 5");
        if (k < 1)
            throw hypothesis_error("k must be a positive integer");
        value = checked_pow_u64(m, k);
    }

    bool operator==(const Modulus&) const = default;
};

} // namespace qcong

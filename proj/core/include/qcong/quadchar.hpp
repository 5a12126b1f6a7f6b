#pragma once

#include "qcong/arith.hpp"

namespace qcong {

// The quadratic characters used throughout: chi_12 = (12/.), the Legendre
// symbol (./l), and the signed variant ((-1)^lambda n / l).
struct QuadChar {
    enum class Kind { kronecker12, legendre, signed_legendre };

    Kind kind = Kind::kronecker12;
    long long ell = 0;       // odd prime, for the Legendre kinds
    int sign_exponent = 0;   // parity of lambda in ((-1)^lambda n / l)

    static QuadChar chi12() { return {Kind::kronecker12, 0, 0}; }
    static QuadChar legendre(long long l) { return {Kind::legendre, l, 0}; }
    static QuadChar signed_legendre(long long l, long long lambda_parity) {
        return {Kind::signed_legendre, l, static_cast<int>(lambda_parity & 1)};
    }

    int operator()(long long n) const {
        switch (kind) {
        case Kind::kronecker12:
            return kronecker(12, n);
        case Kind::legendre:
            return kronecker(n, ell);
        case Kind::signed_legendre:
            return kronecker(sign_exponent ? -n : n, ell);
        }
        return 0;
    }
};

} // namespace qcong

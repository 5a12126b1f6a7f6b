#pragma once

#include "qcong/modulus.hpp"

namespace qcong {

// Derived data for the triple (m, k, r): beta is the unique representative of
// r/24 in [0, m^k), gamma = (24 beta - r)/m^k, lambda and w follow the
// k-parity split, c_k is 1 for odd k and 2 for even k.
struct MultipartitionParams {
    Modulus mk;
    long long r = 0;
    std::uint64_t beta = 0;
    long long gamma = 0;
    long long lambda = 0;
    long long w = 0;
    int c_k = 1;
};

MultipartitionParams derive_params(std::uint64_t m, unsigned k, long long r);

// Coefficient index up to which agreement proves the congruence identity in
// S_{lambda+gamma/2}(Gamma_0(576), chi_12): ceil((lambda + gamma/2)/12 * 1152)
// with 1152 = [SL_2(Z) : Gamma_0(576)].
long long sturm_bound(const MultipartitionParams& p);

} // namespace qcong

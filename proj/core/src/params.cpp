#include "qcong/params.hpp"

namespace qcong {

MultipartitionParams derive_params(std::uint64_t m, unsigned k, long long r) {
    if (r < 1) throw hypothesis_error("r must be a positive integer");
    MultipartitionParams p;
    p.mk = Modulus(m, k);
    p.r = r;

    const std::uint64_t mkval = p.mk.value;
    const std::uint64_t inv24 = invmod_u64(24 % mkval, mkval);
    const std::uint64_t rmod = static_cast<std::uint64_t>(r % static_cast<long long>(mkval));
    p.beta = mulmod_u64(rmod, inv24, mkval);

    const __int128 num = static_cast<__int128>(24) * p.beta - r;
    p.gamma = static_cast<long long>(num / static_cast<__int128>(mkval));

    const __int128 mk1 = static_cast<__int128>(mkval) / m;  // m^{k-1}
    const __int128 euler = static_cast<__int128>(mkval) - mk1;
    __int128 lambda, w;
    if (k % 2 == 1) {
        lambda = euler * r / 2 - (p.gamma + r) / 2;
        w = (2 * static_cast<__int128>(mkval) - mk1 - 1) * r / 2;
        p.c_k = 1;
    } else {
        lambda = euler * r - (p.gamma + r) / 2;
        w = (3 * static_cast<__int128>(mkval) - 2 * mk1 - 1) * r / 2;
        p.c_k = 2;
    }
    p.lambda = static_cast<long long>(lambda);
    p.w = static_cast<long long>(w);
    return p;
}

long long sturm_bound(const MultipartitionParams& p) {
    // (lambda + gamma/2)/12 * 1152 = (2*lambda + gamma) * 48, always integral.
    long long b = (2 * p.lambda + p.gamma) * 48;
    return b > 0 ? b : 0;
}

} // namespace qcong

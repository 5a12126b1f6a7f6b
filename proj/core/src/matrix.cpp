#include "qcong/matrix.hpp"

namespace qcong {

MatrixModMk mat_mul(const MatrixModMk& a, const MatrixModMk& b) {
    if (a.dim() != b.dim() || a.modulus() != b.modulus())
        throw hypothesis_error("mat_mul: dimension or modulus mismatch");
    const long long n = a.dim();
    const std::uint64_t mod = a.modulus();
    MatrixModMk r(n, mod);
    for (long long i = 0; i < n; ++i) {
        for (long long kk = 0; kk < n; ++kk) {
            const std::uint64_t aik = a.at(i, kk);
            if (aik == 0) continue;
            for (long long j = 0; j < n; ++j) {
                const std::uint64_t b_kj = b.at(kk, j);
                if (b_kj == 0) continue;
                r.at(i, j) = static_cast<std::uint64_t>(
                    (static_cast<unsigned __int128>(aik) * b_kj + r.at(i, j)) % mod);
            }
        }
    }
    return r;
}

MatrixModMk mat_pow(const MatrixModMk& a, std::uint64_t e) {
    MatrixModMk result = MatrixModMk::identity(a.dim(), a.modulus());
    MatrixModMk base = a;
    while (e) {
        if (e & 1) result = mat_mul(result, base);
        if (e >>= 1) base = mat_mul(base, base);
    }
    return result;
}

} // namespace qcong

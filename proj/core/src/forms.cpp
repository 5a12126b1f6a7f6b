#include "qcong/forms.hpp"

#include <algorithm>
#include <string>

#include "qcong/cache.hpp"

namespace qcong {

std::vector<std::pair<long long, int>> pentagonal_terms(long long limit) {
    std::vector<std::pair<long long, int>> out;
    for (long long j = 1;; ++j) {
        long long g1 = j * (3 * j - 1) / 2;
        long long g2 = j * (3 * j + 1) / 2;
        int s = (j & 1) ? -1 : 1;
        if (g1 >= limit) break;
        out.emplace_back(g1, s);
        if (g2 < limit) out.emplace_back(g2, s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RSeries partition_r_series(long long r, long long N, const Modulus& mk) {
    if (r < 1) throw hypothesis_error("partition_r_series: r must be >= 1");
    auto compute = [&] {
        RSeries s = RSeries::constant(ModRing(mk), 1, N);
        for (long long i = 0; i < r; ++i) divide_by_euler(s);
        return s;
    };
    if (const SeriesCache* cache = global_series_cache(); cache && cache->enabled()) {
        std::string key = "pr_r" + std::to_string(r) + "_N" + std::to_string(N) + "_mod" +
                          std::to_string(mk.value);
        return cache->residue(key, compute);
    }
    return compute();
}

ZSeries partition_r_series_exact(long long r, long long N) {
    if (r < 1) throw hypothesis_error("partition_r_series_exact: r must be >= 1");
    ZSeries s = ZSeries::constant(ExactRing{}, 1, N);
    for (long long i = 0; i < r; ++i) divide_by_euler(s);
    return s;
}

long long dim_M(long long lambda) {
    if (lambda < 0 || lambda % 2 != 0 || lambda == 2) return 0;
    return lambda % 12 == 2 ? lambda / 12 : lambda / 12 + 1;
}

std::vector<MonomialBasisElement> monomial_family(long long lambda) {
    std::vector<MonomialBasisElement> out;
    const long long d = dim_M(lambda);
    for (long long j = 0; j < d; ++j) {
        long long w = lambda - 12 * j;
        long long b = (w % 4 == 0) ? 0 : 1;
        long long a = (w - 6 * b) / 4;
        if (a < 0) continue;
        out.push_back({a, b, j});
    }
    return out;
}

EchelonBasis echelon_basis_M(long long lambda, long long N, const Modulus& mk) {
    if (lambda < 0 || lambda % 2 != 0)
        throw hypothesis_error("echelon_basis_M: lambda must be even and nonnegative");
    EchelonBasis basis;
    basis.lambda = lambda;
    basis.dimension = dim_M(lambda);
    if (basis.dimension == 0) return basis;
    if (N <= basis.dimension)
        throw hypothesis_error("echelon_basis_M: truncation too small for the basis dimension");

    basis.monomials = monomial_family(lambda);
    const ModRing ring(mk);

    // a decreases by 3 per step, b is constant across the family; build the
    // E4 powers by one inverse of E4^3 and successive multiplications.
    const long long a0 = basis.monomials.front().a;
    RSeries e4 = eisenstein(ring, EisensteinKind::E4, N);
    RSeries head = series_pow(e4, a0);
    if (basis.monomials.front().b == 1)
        head = series_mul(head, eisenstein(ring, EisensteinKind::E6, N));
    RSeries e4cube_inv;
    if (basis.dimension > 1)
        e4cube_inv = series_inv(series_pow(e4, 3));

    RSeries dpow = RSeries::constant(ring, 1, N);
    RSeries delta = delta_series(ring, N);
    for (std::size_t j = 0; j < basis.monomials.size(); ++j) {
        if (j > 0) {
            head = series_mul(head, e4cube_inv).truncated(N);
            dpow = series_mul(dpow, delta).truncated(N);
        }
        basis.monomial_forms.push_back(series_mul(head, dpow).truncated(N));
    }

    // Gauss-Jordan pass with unit pivots: clear coefficients at the leading
    // exponents of the later elements, from the bottom row up.
    basis.elements = basis.monomial_forms;
    const long long d = basis.dimension;
    for (long long j = d - 2; j >= 0; --j) {
        for (long long i = j + 1; i < d; ++i) {
            auto c = basis.elements[static_cast<std::size_t>(j)].coeff(i);
            if (ring.is_zero(c)) continue;
            auto& ej = basis.elements[static_cast<std::size_t>(j)];
            const auto& ei = basis.elements[static_cast<std::size_t>(i)];
            for (long long n = i; n < N; ++n)
                ej.set(n, ring.sub(ej.coeff(n), ring.mul(c, ei.coeff(n))));
        }
    }
    return basis;
}

std::vector<RSeries> basis_S(long long gamma, long long lambda, long long N,
                             const Modulus& mk, BasisFamily family) {
    const long long d = dim_M(lambda);
    if (d > 0 && N <= gamma + 24 * (d - 1))
        throw hypothesis_error("basis_S: truncation does not reach the last leading exponent");
    const long long Nq = ceil_div_ll(N - gamma, 24) + 1;
    EchelonBasis mb = echelon_basis_M(lambda, std::max<long long>(Nq, d + 1), mk);
    RSeries eta = eta24_pow(ModRing(mk), gamma, N);
    std::vector<RSeries> out;
    const auto& fam = family == BasisFamily::monomial ? mb.monomial_forms : mb.elements;
    for (const auto& phi : fam)
        out.push_back(series_mul(eta, op_V(phi, 24)).truncated(N));
    return out;
}

namespace {

template <class Ring>
Series<Ring> eta_quotient_impl(const Ring& ring, std::uint64_t mkval, long long r, long long N) {
    // (eta(m^k z)^{m^k} / eta(z))^r
    //   = q^{(m^{2k}-1)r/24} * prod(1-q^{m^k n})^{m^k r} * prod(1-q^n)^{-r}.
    const unsigned __int128 m2k = static_cast<unsigned __int128>(mkval) * mkval;
    const long long v0 = static_cast<long long>((m2k - 1) * static_cast<unsigned __int128>(r) / 24);
    if (N <= v0) throw hypothesis_error("eta_quotient_f: truncation below the leading exponent");
    const long long len = N - v0;
    Series<Ring> denom = series_pow(euler_product(ring, len), -r);
    Series<Ring> numer = op_V(euler_product(ring, ceil_div_ll(len, static_cast<long long>(mkval)) + 1),
                              static_cast<long long>(mkval));
    numer = series_pow(numer.truncated(len), r * static_cast<long long>(mkval));
    return series_mul(numer, denom).shifted(v0).truncated(N);
}

} // namespace

RSeries eta_quotient_f(const Modulus& mk, long long r, long long N) {
    if (r < 1) throw hypothesis_error("eta_quotient_f: r must be >= 1");
    return eta_quotient_impl(ModRing(mk), mk.value, r, N);
}

ZSeries eta_quotient_f_exact(std::uint64_t m, unsigned k, long long r, long long N) {
    if (r < 1) throw hypothesis_error("eta_quotient_f_exact: r must be >= 1");
    Modulus mk(m, k);  // validates m, k and the 2^63 bound
    return eta_quotient_impl(ExactRing{}, mk.value, r, N);
}

} // namespace qcong

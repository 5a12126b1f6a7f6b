#include "qcong/oracle.hpp"

#include "qcong/arith.hpp"

namespace qcong::oracle {

namespace {

// Generalized pentagonal (exponent, sign) pairs below `limit`.
std::vector<std::pair<long long, int>> pent_terms(long long limit) {
    std::vector<std::pair<long long, int>> out;
    for (long long j = 1;; ++j) {
        long long g1 = j * (3 * j - 1) / 2;
        if (g1 >= limit) break;
        int s = (j & 1) ? -1 : 1;
        out.emplace_back(g1, s);
        long long g2 = j * (3 * j + 1) / 2;
        if (g2 < limit) out.emplace_back(g2, s);
    }
    return out;
}

} // namespace

std::vector<mpz_class> exact_partition(long long N) {
    if (N < 1) throw hypothesis_error("exact_partition: N must be >= 1");
    // sigma_1 sieve; sigma_1(n) < n^2 fits unsigned long comfortably here.
    std::vector<unsigned long> sigma(static_cast<std::size_t>(N), 0);
    for (long long d = 1; d < N; ++d)
        for (long long n = d; n < N; n += d)
            sigma[static_cast<std::size_t>(n)] += static_cast<unsigned long>(d);

    std::vector<mpz_class> p(static_cast<std::size_t>(N));
    p[0] = 1;
    mpz_class acc;
    for (long long n = 1; n < N; ++n) {
        acc = 0;
        for (long long j = 1; j <= n; ++j)
            acc += sigma[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(n - j)];
        mpz_divexact_ui(p[static_cast<std::size_t>(n)].get_mpz_t(), acc.get_mpz_t(),
                        static_cast<unsigned long>(n));
    }
    return p;
}

std::vector<mpz_class> exact_p_r(long long r, long long N) {
    if (r < 1 || N < 1) throw hypothesis_error("exact_p_r: r and N must be >= 1");
    std::vector<mpz_class> p(static_cast<std::size_t>(N), 0);
    p[0] = 1;
    auto pents = pent_terms(N);
    for (long long pass = 0; pass < r; ++pass) {
        for (long long n = 1; n < N; ++n) {
            mpz_class& pn = p[static_cast<std::size_t>(n)];
            for (auto [g, s] : pents) {
                if (g > n) break;
                if (s > 0)
                    pn -= p[static_cast<std::size_t>(n - g)];
                else
                    pn += p[static_cast<std::size_t>(n - g)];
            }
        }
    }
    return p;
}

std::vector<std::uint64_t> residue_p_r(long long r, long long N, std::uint64_t modulus) {
    if (r < 1 || N < 1) throw hypothesis_error("residue_p_r: r and N must be >= 1");
    std::vector<std::uint64_t> p(static_cast<std::size_t>(N), 0);
    p[0] = 1 % modulus;
    auto pents = pent_terms(N);
    for (long long pass = 0; pass < r; ++pass) {
        for (long long n = 1; n < N; ++n) {
            std::uint64_t pn = p[static_cast<std::size_t>(n)];
            for (auto [g, s] : pents) {
                if (g > n) break;
                std::uint64_t prev = p[static_cast<std::size_t>(n - g)];
                if (s > 0)
                    pn = pn >= prev ? pn - prev : pn + modulus - prev;
                else {
                    pn += prev;
                    if (pn >= modulus) pn -= modulus;
                }
            }
            p[static_cast<std::size_t>(n)] = pn;
        }
    }
    return p;
}

ProgressionReport verify_progression(long long A, long long B, std::uint64_t M, long long r,
                                     long long n_max) {
    if (A < 1 || B < 0 || B >= A)
        throw hypothesis_error("verify_progression: need A >= 1 and 0 <= B < A");
    ProgressionReport rep;
    const long long N = A * n_max + B + 1;
    auto p = exact_p_r(r, N);
    for (long long n = 0; n <= n_max; ++n) {
        const mpz_class& v = p[static_cast<std::size_t>(A * n + B)];
        ++rep.checked;
        if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(M))) {
            rep.ok = false;
            rep.counterexample_n = n;
            rep.counterexample_value = v.get_str();
            break;
        }
    }
    return rep;
}

HeckeInstanceReport verify_hecke_instance(const MultipartitionParams& p, long long ell,
                                          long long e, long long n_max, long long index_budget) {
    HeckeInstanceReport rep;
    // m^k l^e, checked against the index budget.
    __int128 scale = p.mk.value;
    for (long long i = 0; i < e; ++i) {
        scale *= ell;
        if ((scale * n_max + p.r) / 24 > index_budget)
            throw std::overflow_error("verify_hecke_instance: index beyond configured series budget");
    }
    const __int128 top = scale * n_max + p.r;
    const long long max_index = static_cast<long long>(top / 24);
    auto pr = residue_p_r(p.r, max_index + 1, p.mk.value);
    rep.max_index = max_index;

    const long long s24 = static_cast<long long>(scale % 24);
    for (long long n = 1; n <= n_max; ++n) {
        if (n % ell == 0) continue;
        if ((s24 * n + p.r) % 24 != 0) continue;
        const long long idx = static_cast<long long>((scale * n + p.r) / 24);
        ++rep.checked;
        if (pr[static_cast<std::size_t>(idx)] != 0) {
            rep.ok = false;
            rep.counterexample_n = n;
            rep.counterexample_value = pr[static_cast<std::size_t>(idx)];
            break;
        }
    }
    return rep;
}

} // namespace qcong::oracle

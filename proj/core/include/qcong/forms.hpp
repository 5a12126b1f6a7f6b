#pragma once

#include <vector>

#include "qcong/series.hpp"

namespace qcong {

// Generalized pentagonal exponents g = j(3j-1)/2 below `limit`, paired with
// the sign (-1)^j, in increasing exponent order.
std::vector<std::pair<long long, int>> pentagonal_terms(long long limit);

// prod_{n>=1} (1 - q^n) to truncation N via the pentagonal expansion.
template <class Ring>
Series<Ring> euler_product(const Ring& ring, long long N) {
    if (N < 1) throw hypothesis_error("euler_product: N must be >= 1");
    Series<Ring> e(ring, 0, N);
    e.set(0, ring.one());
    for (auto [g, s] : pentagonal_terms(N))
        e.set(g, s > 0 ? ring.one() : ring.neg(ring.one()));
    return e;
}

// In-place division by prod (1 - q^n) using the pentagonal recurrence.
template <class Ring>
void divide_by_euler(Series<Ring>& c) {
    const Ring& R = c.ring();
    const auto len = static_cast<std::size_t>(c.length());
    auto pents = pentagonal_terms(static_cast<long long>(len));
    for (std::size_t n = 0; n < len; ++n) {
        auto acc = c.rel(n);
        for (auto [g, s] : pents) {
            if (static_cast<std::size_t>(g) > n) break;
            const auto& prev = c.rel(n - static_cast<std::size_t>(g));
            acc = s > 0 ? R.sub(acc, prev) : R.add(acc, prev);
        }
        c.rel(n) = acc;
    }
}

// (q prod (1 - q^24n))^gamma, i.e. eta(24z)^gamma, with offset gamma.
// Negative gamma goes through series_inv.
template <class Ring>
Series<Ring> eta24_pow(const Ring& ring, long long gamma, long long N) {
    if (N <= gamma) throw hypothesis_error("eta24_pow: truncation window is empty");
    const long long len = N - gamma;
    Series<Ring> base = op_V(euler_product(ring, ceil_div_ll(len, 24) + 1), 24);
    Series<Ring> p = series_pow(base.truncated(len), gamma);
    return p.shifted(gamma).truncated(N);
}

enum class EisensteinKind { E4, E6 };

// E4 = 1 + 240 sum sigma_3(n) q^n, E6 = 1 - 504 sum sigma_5(n) q^n,
// divisor power sums by sieve.
template <class Ring>
Series<Ring> eisenstein(const Ring& ring, EisensteinKind which, long long N) {
    if (N < 1) throw hypothesis_error("eisenstein: N must be >= 1");
    Series<Ring> e(ring, 0, N);
    e.set(0, ring.one());
    const int p = which == EisensteinKind::E4 ? 3 : 5;
    const long long factor = which == EisensteinKind::E4 ? 240 : -504;
    const auto f = ring.from_int(factor);
    for (long long d = 1; d < N; ++d) {
        auto dp = ring.from_int(d);
        auto dpow = dp;
        for (int i = 1; i < p; ++i) dpow = ring.mul(dpow, dp);
        auto term = ring.mul(f, dpow);
        for (long long n = d; n < N; n += d)
            e.rel(static_cast<std::size_t>(n)) = ring.add(e.rel(static_cast<std::size_t>(n)), term);
    }
    return e;
}

// Delta(z) = q prod (1-q^n)^24, offset 1.
template <class Ring>
Series<Ring> delta_series(const Ring& ring, long long N) {
    if (N < 2) throw hypothesis_error("delta_series: need N >= 2");
    Series<Ring> e = euler_product(ring, N - 1);
    return series_pow(e, 24).shifted(1).truncated(N);
}

// sum p_r(n) q^n mod m^k by r successive pentagonal divisions.
RSeries partition_r_series(long long r, long long N, const Modulus& mk);

// Exact-mode counterpart (used by the residue-vs-exact equivalence checks).
ZSeries partition_r_series_exact(long long r, long long N);

// dim M_lambda(SL2(Z)) by the level-1 dimension formula.
long long dim_M(long long lambda);

// A monomial E4^a E6^b Delta^c of weight 4a + 6b + 12c.
struct MonomialBasisElement {
    long long a = 0;
    long long b = 0;  // 0 or 1
    long long c = 0;
    long long weight() const { return 4 * a + 6 * b + 12 * c; }
};

// The canonical monomial family for weight lambda: c = j, b fixed by
// lambda mod 4, a = (lambda - 12j - 6b)/4, for j = 0..dim-1. Each member has
// q-valuation j and leading coefficient 1.
std::vector<MonomialBasisElement> monomial_family(long long lambda);

// Basis of M_lambda (or of S_{gamma,lambda} after the 24-rescaling) with
// strictly increasing leading exponents and leading coefficient exactly 1.
// `monomial_forms` are the raw triangular monomial expansions; `elements`
// are the fully reduced echelon series (element j = q^j + O(q^d)).
struct EchelonBasis {
    long long lambda = 0;
    long long dimension = 0;
    std::vector<MonomialBasisElement> monomials;
    std::vector<RSeries> monomial_forms;
    std::vector<RSeries> elements;
};

// Echelonized basis of M_lambda over Z/m^k to truncation N. Row reduction
// uses only unit pivots; valid over Z/m^k.
EchelonBasis echelon_basis_M(long long lambda, long long N, const Modulus& mk);

// Which expansion family of M_lambda feeds a basis of S_{gamma,lambda}.
enum class BasisFamily { monomial, reduced };

// Basis of S_{gamma,lambda}: f_j = eta(24z)^gamma * (family element j)(24z),
// leading exponents gamma + 24j, leading coefficients 1, truncated to N.
// The monomial family matches the Delta-graded basis used for the Hecke
// matrix displays; the reduced family is the coordinate basis for phi.
std::vector<RSeries> basis_S(long long gamma, long long lambda, long long N,
                             const Modulus& mk,
                             BasisFamily family = BasisFamily::monomial);

// (eta(m^k z)^{m^k} / eta(z))^r as a residue-mode q-series with offset
// (m^{2k} - 1) r / 24.
RSeries eta_quotient_f(const Modulus& mk, long long r, long long N);
ZSeries eta_quotient_f_exact(std::uint64_t m, unsigned k, long long r, long long N);

} // namespace qcong

#include "doctest.h"
#include "qcong/forms.hpp"
#include "qcong/oracle.hpp"

using namespace qcong;

TEST_CASE("pentagonal exponents") {
    auto terms = pentagonal_terms(100);
    const long long expect[] = {1, 2, 5, 7, 12, 15, 22, 26, 35, 40, 51, 57, 70, 77, 92};
    REQUIRE(terms.size() == 15);
    for (std::size_t i = 0; i < terms.size(); ++i) CHECK(terms[i].first == expect[i]);
    // Signs: (-1)^j for g = j(3j +- 1)/2.
    CHECK(terms[0].second == -1);  // j=1
    CHECK(terms[1].second == -1);  // j=1
    CHECK(terms[2].second == 1);   // j=2
    CHECK(terms[3].second == 1);
    CHECK(terms[4].second == -1);  // j=3
}

TEST_CASE("euler product expansion") {
    ModRing R(121);
    RSeries e = euler_product(R, 100);
    // prod(1-q^n) = 1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + ...
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(1) == 120);
    CHECK(e.coeff(2) == 120);
    CHECK(e.coeff(3) == 0);
    CHECK(e.coeff(5) == 1);
    CHECK(e.coeff(7) == 1);
    CHECK(e.coeff(12) == 120);
    CHECK(e.coeff(15) == 120);
    CHECK(e.coeff(22) == 1);
    // Inverse relation: e * (partition generating series) = 1.
    RSeries prod = series_mul(e, partition_r_series(1, 100, Modulus(11, 2)));
    CHECK(prod.coeff(0) == 1);
    for (long long n = 1; n < prod.trunc(); ++n) CHECK(prod.coeff(n) == 0);
}

TEST_CASE("multipartition generating series") {
    Modulus big(9999999943ULL, 1);  // large prime, no wraparound below it
    RSeries p2 = partition_r_series(2, 6, big);
    const std::uint64_t p2vals[] = {1, 2, 5, 10, 20, 36};
    for (long long n = 0; n < 6; ++n) CHECK(p2.coeff(n) == p2vals[n]);
    CHECK(partition_r_series(3, 2, big).coeff(1) == 3);
    CHECK(partition_r_series(8, 5, big).coeff(4) == 726);

    // Exact mode agrees with the independent oracle recurrences.
    ZSeries p5 = partition_r_series_exact(5, 200);
    auto oracle5 = oracle::exact_p_r(5, 200);
    for (long long n = 0; n < 200; ++n) CHECK(p5.coeff(n) == oracle5[static_cast<std::size_t>(n)]);
}

TEST_CASE("Eisenstein series and the discriminant") {
    Modulus big(9999999943ULL, 1);
    ModRing R(big.value);
    RSeries e4 = eisenstein(R, EisensteinKind::E4, 6);
    const std::uint64_t e4vals[] = {1, 240, 2160, 6720, 17520, 30240};
    for (long long n = 0; n < 6; ++n) CHECK(e4.coeff(n) == e4vals[n]);

    RSeries e6 = eisenstein(R, EisensteinKind::E6, 6);
    const long long e6vals[] = {1, -504, -16632, -122976, -532728, -1575504};
    for (long long n = 0; n < 6; ++n) CHECK(e6.coeff(n) == R.from_int(e6vals[n]));

    RSeries dl = delta_series(R, 7);
    const long long tau[] = {0, 1, -24, 252, -1472, 4830, -6048};
    CHECK(dl.offset() == 1);
    for (long long n = 1; n < 7; ++n) CHECK(dl.coeff(n) == R.from_int(tau[n]));
}

TEST_CASE("E4^3 - E6^2 = 1728 Delta exactly to 500 terms") {
    ExactRing Z;
    const long long N = 500;
    ZSeries e4 = eisenstein(Z, EisensteinKind::E4, N);
    ZSeries e6 = eisenstein(Z, EisensteinKind::E6, N);
    ZSeries lhs = series_sub(series_pow(e4, 3), series_pow(e6, 2));
    ZSeries rhs = series_scale(delta_series(Z, N), 1728);
    CHECK(series_equal(lhs, rhs));
    CHECK(first_mismatch(lhs, rhs) == N);
}

TEST_CASE("eta(24z)^gamma expansions") {
    ModRing R(125);
    // gamma = 1: eta(24z) = q prod(1 - q^{24n}) = q - q^25 - q^49 + q^121 + ...
    RSeries eta = eta24_pow(R, 1, 200);
    CHECK(eta.offset() == 1);
    CHECK(eta.coeff(1) == 1);
    CHECK(eta.coeff(25) == 124);
    CHECK(eta.coeff(49) == 124);
    CHECK(eta.coeff(121) == 1);
    CHECK(eta.coeff(169) == 1);
    for (long long n = 1; n < 200; ++n)
        if (n % 24 != 1) CHECK(eta.coeff(n) == 0);

    // Negative gamma inverts: eta^3 * eta^-3 = 1.
    RSeries prod = series_mul(eta24_pow(R, 3, 150), eta24_pow(R, -3, 150));
    CHECK(prod.coeff(0) == 1);
    for (long long n = 1; n < prod.trunc(); ++n) CHECK(prod.coeff(n) == 0);
}

TEST_CASE("dimension formula for level-one forms") {
    CHECK(dim_M(0) == 1);
    CHECK(dim_M(2) == 0);
    CHECK(dim_M(4) == 1);
    CHECK(dim_M(6) == 1);
    CHECK(dim_M(10) == 1);
    CHECK(dim_M(12) == 2);
    CHECK(dim_M(14) == 1);
    CHECK(dim_M(48) == 5);
    CHECK(dim_M(114) == 10);
    CHECK(dim_M(198) == 17);
    CHECK(dim_M(-4) == 0);
    CHECK(dim_M(7) == 0);
    // Cross-check: the dimension equals the count of monomials
    // E4^a E6^b Delta^c of the given weight with b in {0,1}.
    for (long long lam = 0; lam <= 400; lam += 2) {
        long long count = 0;
        for (long long b = 0; b <= 1; ++b)
            for (long long c = 0; 12 * c + 6 * b <= lam; ++c)
                if ((lam - 6 * b - 12 * c) % 4 == 0) ++count;
        CHECK(dim_M(lam) == count);
    }
}

TEST_CASE("monomial family and echelon basis structure") {
    Modulus mk(5, 2);
    for (long long lam : {12LL, 48LL, 102LL, 114LL}) {
        const long long d = dim_M(lam);
        const long long N = d + 40;
        EchelonBasis basis = echelon_basis_M(lam, N, mk);
        REQUIRE(basis.dimension == d);
        REQUIRE(static_cast<long long>(basis.monomials.size()) == d);
        for (long long j = 0; j < d; ++j) {
            const auto& mono = basis.monomials[static_cast<std::size_t>(j)];
            CHECK(mono.weight() == lam);
            CHECK(mono.c == j);
            CHECK((mono.b == 0 || mono.b == 1));
            // Monomial j = Delta^j * (weight filler): valuation j, leading 1.
            const RSeries& raw = basis.monomial_forms[static_cast<std::size_t>(j)];
            CHECK(raw.valuation() == j);
            CHECK(raw.coeff(j) == 1);
            // Reduced element j = q^j + O(q^d).
            const RSeries& red = basis.elements[static_cast<std::size_t>(j)];
            CHECK(red.valuation() == j);
            CHECK(red.coeff(j) == 1);
            for (long long n = 0; n < d; ++n)
                if (n != j) CHECK(red.coeff(n) == 0);
        }
    }
}

TEST_CASE("basis of the eta-shifted space") {
    Modulus mk(5, 2);
    const long long gamma = 21, lambda = 48;
    const long long d = dim_M(lambda);
    const long long N = gamma + 24 * d + 200;
    for (auto family : {BasisFamily::monomial, BasisFamily::reduced}) {
        auto basis = basis_S(gamma, lambda, N, mk, family);
        REQUIRE(static_cast<long long>(basis.size()) == d);
        for (long long j = 0; j < d; ++j) {
            const RSeries& f = basis[static_cast<std::size_t>(j)];
            CHECK(f.valuation() == gamma + 24 * j);
            CHECK(f.coeff(gamma + 24 * j) == 1);
            for (long long n = f.offset(); n < f.trunc(); ++n)
                if (((n - gamma) % 24 + 24) % 24 != 0) CHECK(f.coeff(n) == 0);
        }
    }
}

TEST_CASE("eta quotient leading exponent and consistency across modes") {
    Modulus mk(5, 1);
    // (eta(5z)^5/eta(z))^r has leading exponent (25-1)r/24 = r.
    for (long long r = 1; r <= 4; ++r) {
        RSeries f = eta_quotient_f(mk, r, 60);
        CHECK(f.offset() == r);
        CHECK(f.coeff(r) == 1);
    }
    ZSeries fe = eta_quotient_f_exact(5, 1, 3, 120);
    RSeries fr = eta_quotient_f(mk, 3, 120);
    CHECK(series_equal(reduce_mod(fe, mk), fr));

    Modulus mk72(7, 2);
    RSeries f72 = eta_quotient_f(mk72, 3, 350);
    CHECK(f72.offset() == (49LL * 49 - 1) * 3 / 24);
    CHECK(f72.coeff(f72.offset()) == 1);
}

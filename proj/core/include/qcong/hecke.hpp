#pragma once

#include <vector>

#include "qcong/certificate.hpp"
#include "qcong/congruence.hpp"
#include "qcong/matrix.hpp"
#include "qcong/params.hpp"

namespace qcong {

// l^e mod `mod`, with negative e through the inverse.
std::uint64_t powmod_signed(std::uint64_t base, long long e, std::uint64_t mod);

// Half-integral-weight Hecke operator on a residue-mode expansion:
//   b(n) = a(l^2 n) + chi12(l) ((-1)^{lambda_h} n / l) l^{lambda_h-1} a(n)
//        + chi12(l^2) l^{2 lambda_h - 1} a(n / l^2),
// the last term contributing only when l^2 | n.
RSeries hecke_T(const RSeries& f, long long ell, long long lambda_h);

// The Hecke system for (m,k,r) and a prime l != 2,3,m: the Delta-graded basis
// of S_{gamma,lambda}, the matrix A of T_{l^2}, the companion matrix X, and
// the orders K (projective, X^K = c I) and M (full, X^M = I).
struct HeckeSystem {
    MultipartitionParams params;
    long long ell = 0;
    long long lambda_h = 0;  // lambda + (gamma-1)/2
    long long d = 0;
    long long basis_trunc = 0;
    std::vector<RSeries> basis;
    MatrixModMk A;
    MatrixModMk X;
    long long K = 0;
    std::uint64_t c = 0;
    long long M_order = 0;
};

// Truncation the basis must reach so hecke_matrix can read d coordinates and
// check the residual: l^2 (gamma + 24 d) + 24.
long long hecke_required_trunc(const MultipartitionParams& p, long long ell);

// Checks the Theorem hypotheses (r odd, r < m^k, l prime not in {2,3,m}),
// builds the basis, A, X and both orders. `order_cap` bounds the mod-m
// order search.
HeckeSystem make_hecke_system(const MultipartitionParams& p, long long ell,
                              long long order_cap = 200000);

// Row i = coordinates of basis[i]|T_{l^2} in the basis; throws identity_error
// if any residual is nonzero (the invariance of S_{gamma,lambda} fails).
MatrixModMk hecke_matrix(const MultipartitionParams& p, long long ell,
                         const std::vector<RSeries>& basis, long long lambda_h);

// X = (A, I; -l^{gamma+2lambda-2} I, 0) over the same modulus.
MatrixModMk build_X(const MatrixModMk& A, long long ell, long long gamma, long long lambda);

// Minimal K >= 1 and unit c with X^K = c I mod m^k. The search finds the
// minimal t with X^t scalar mod m, then lifts by powers of m.
std::pair<long long, std::uint64_t> projective_order(const MatrixModMk& X, const Modulus& mk,
                                                     long long cap);

// Minimal M with X^M = I mod m^k, via the same two-stage lift.
long long full_order(const MatrixModMk& X, const Modulus& mk, long long cap);

// Verify f_i|U_{l^2}^s = A_s f_i + B_s g_i + C_s f_i|V_{l^2} coefficientwise,
// with a basis recomputed to truncation N (N >= l^{2s} * basis window).
IdentityCheck check_Us_recursion(const HeckeSystem& sys, long long s, long long N);

// The vanishing (exponents 2 mu K - 1) and periodicity (period 2M)
// certificates carried by a computed system.
std::vector<CongruenceCertificate> certify(const HeckeSystem& sys);

} // namespace qcong

#include "qcong/hecke.hpp"

#include <sstream>

#include "qcong/quadchar.hpp"

namespace qcong {

std::uint64_t powmod_signed(std::uint64_t base, long long e, std::uint64_t mod) {
    if (e >= 0) return powmod_u64(base, static_cast<std::uint64_t>(e), mod);
    return invmod_u64(powmod_u64(base, static_cast<std::uint64_t>(-e), mod), mod);
}

namespace {

void require_hecke_prime(const Modulus& mk, long long ell) {
    if (ell == 2 || ell == 3 || static_cast<std::uint64_t>(ell) == mk.m ||
        !is_prime_u64(static_cast<std::uint64_t>(ell)))
        throw hypothesis_error("Theorem hypothesis violated: l must be a prime different from 2, 3 and m");
}

} // namespace

RSeries hecke_T(const RSeries& f, long long ell, long long lambda_h) {
    const ModRing& R = f.ring();
    if (ell < 5 || !is_prime_u64(static_cast<std::uint64_t>(ell)) || R.mod % ell == 0)
        throw hypothesis_error("hecke_T: l must be a prime with gcd(l, 6m) = 1");
    const long long l2 = ell * ell;
    const long long off = std::min(f.offset(), ceil_div_ll(f.offset(), l2));
    long long tr = ceil_div_ll(f.trunc(), l2);
    if (tr < off) tr = off;
    RSeries out(R, off, tr);

    // The middle character is the twelve-symbol times (n/l): the sign part of the
    // form's character cancels against the (-1)^{lambda_h} of the generic operator.
    // The same sign ((-1)^{lambda_h}/l) survives on the l^{2*lambda_h-1} term.
    const int chi_l = kronecker(12, ell);
    const int third_sign = (lambda_h & 1) ? kronecker(-1, ell) : 1;
    const std::uint64_t mid_pow = powmod_signed(static_cast<std::uint64_t>(ell), lambda_h - 1, R.mod);
    const std::uint64_t last_pow =
        powmod_signed(static_cast<std::uint64_t>(ell), 2 * lambda_h - 1, R.mod);

    for (long long n = off; n < tr; ++n) {
        std::uint64_t v = f.coeff(checked_mul_ll(n, l2));
        if (n >= f.offset() && n < f.trunc()) {
            int ks = kronecker(n, ell);
            if (ks != 0) {
                std::uint64_t t = R.mul(mid_pow, f.coeff(n));
                v = chi_l * ks == 1 ? R.add(v, t) : R.sub(v, t);
            }
        }
        if (((n % l2) + l2) % l2 == 0) {
            long long q = n / l2;
            if (q < f.trunc()) {
                std::uint64_t t = R.mul(last_pow, f.coeff(q));
                v = third_sign == 1 ? R.add(v, t) : R.sub(v, t);
            }
        }
        out.set(n, v);
    }
    return out;
}

long long hecke_required_trunc(const MultipartitionParams& p, long long ell) {
    return checked_add_ll(
        checked_mul_ll(ell * ell, p.gamma + 24 * dim_M(p.lambda)), 24);
}

MatrixModMk hecke_matrix(const MultipartitionParams& p, long long ell,
                         const std::vector<RSeries>& basis, long long lambda_h) {
    const long long d = static_cast<long long>(basis.size());
    const ModRing ring(p.mk);
    MatrixModMk A(d, p.mk.value);
    for (long long i = 0; i < d; ++i) {
        RSeries work = hecke_T(basis[static_cast<std::size_t>(i)], ell, lambda_h);
        for (long long j = 0; j < d; ++j) {
            const long long lead = p.gamma + 24 * j;
            if (lead >= work.trunc())
                throw hypothesis_error("hecke_matrix: basis truncation too small to read coordinates");
            std::uint64_t c = lead < work.offset() ? 0 : work.coeff(lead);
            A.at(i, j) = c;
            if (c == 0) continue;
            const RSeries& fj = basis[static_cast<std::size_t>(j)];
            for (long long n = std::max(lead, work.offset()); n < work.trunc(); ++n)
                work.set(n, ring.sub(work.coeff(n), ring.mul(c, fj.coeff(n))));
        }
        long long bad = work.valuation();
        if (bad < work.trunc()) {
            std::ostringstream os;
            os << "hecke_matrix: row " << i << " has nonzero residual at q^" << bad
               << " (invariance failure, l=" << ell << ")";
            throw identity_error(os.str());
        }
    }
    return A;
}

MatrixModMk build_X(const MatrixModMk& A, long long ell, long long gamma, long long lambda) {
    const long long d = A.dim();
    const std::uint64_t mod = A.modulus();
    const std::uint64_t scale =
        powmod_signed(static_cast<std::uint64_t>(ell), gamma + 2 * lambda - 2, mod);
    MatrixModMk X(2 * d, mod);
    for (long long i = 0; i < d; ++i) {
        for (long long j = 0; j < d; ++j) X.at(i, j) = A.at(i, j);
        X.at(i, d + i) = 1;
        X.at(d + i, i) = scale == 0 ? 0 : mod - scale;
    }
    return X;
}

namespace {

// Minimal t with X^t scalar mod m, plus that scalar.
std::pair<long long, std::uint64_t> scalar_order_mod_m(const MatrixModMk& X, const Modulus& mk,
                                                       long long cap) {
    MatrixModMk Xm = X.reduced(mk.m);
    MatrixModMk P = Xm;
    long long t = 1;
    while (!P.is_scalar()) {
        if (++t > cap)
            throw identity_error("order search cap exceeded (mod-m scalar stage)");
        P = mat_mul(P, Xm);
    }
    return {t, P.at(0, 0)};
}

} // namespace

std::pair<long long, std::uint64_t> projective_order(const MatrixModMk& X, const Modulus& mk,
                                                     long long cap) {
    auto [t1, c0] = scalar_order_mod_m(X, mk, cap);
    (void)c0;
    MatrixModMk Z = mat_pow(X, static_cast<std::uint64_t>(t1));
    long long K = t1;
    for (unsigned s = 0; s < mk.k; ++s) {
        if (auto c = Z.scalar()) return {K, *c};
        Z = mat_pow(Z, mk.m);
        K = checked_mul_ll(K, static_cast<long long>(mk.m));
    }
    throw identity_error("projective_order: lift by powers of m failed");
}

long long full_order(const MatrixModMk& X, const Modulus& mk, long long cap) {
    auto [t1, c0] = scalar_order_mod_m(X, mk, cap);
    // Minimal exponent mod m is t1 * ord(c0): X^{t1 u} = c0^u I mod m.
    long long u = 1;
    std::uint64_t cp = c0;
    while (cp != 1) {
        cp = mulmod_u64(cp, c0, mk.m);
        if (++u > static_cast<long long>(mk.m))
            throw identity_error("full_order: scalar is not a unit mod m");
    }
    long long t2 = checked_mul_ll(t1, u);
    MatrixModMk Z = mat_pow(X, static_cast<std::uint64_t>(t2));
    long long M = t2;
    for (unsigned s = 0; s < mk.k; ++s) {
        if (Z.is_identity()) return M;
        Z = mat_pow(Z, mk.m);
        M = checked_mul_ll(M, static_cast<long long>(mk.m));
    }
    throw identity_error("full_order: lift by powers of m failed");
}

HeckeSystem make_hecke_system(const MultipartitionParams& p, long long ell, long long order_cap) {
    if (p.r % 2 == 0)
        throw hypothesis_error("Theorem hypothesis violated: r must be an odd positive integer");
    if (static_cast<std::uint64_t>(p.r) >= p.mk.value)
        throw hypothesis_error("Theorem hypothesis violated: r must be less than m^k");
    require_hecke_prime(p.mk, ell);
    if (p.lambda < 0 || dim_M(p.lambda) == 0)
        throw hypothesis_error("make_hecke_system: S_{gamma,lambda} is zero-dimensional");

    HeckeSystem sys;
    sys.params = p;
    sys.ell = ell;
    sys.lambda_h = p.lambda + (p.gamma - 1) / 2;
    sys.d = dim_M(p.lambda);
    sys.basis_trunc = hecke_required_trunc(p, ell);
    sys.basis = basis_S(p.gamma, p.lambda, sys.basis_trunc, p.mk, BasisFamily::monomial);
    sys.A = hecke_matrix(p, ell, sys.basis, sys.lambda_h);
    sys.X = build_X(sys.A, ell, p.gamma, p.lambda);
    auto [K, c] = projective_order(sys.X, p.mk, order_cap);
    sys.K = K;
    sys.c = c;
    sys.M_order = full_order(sys.X, p.mk, order_cap);
    return sys;
}

IdentityCheck check_Us_recursion(const HeckeSystem& sys, long long s, long long N) {
    const MultipartitionParams& p = sys.params;
    const ModRing ring(p.mk);
    const long long d = sys.d;
    const long long l2 = sys.ell * sys.ell;

    std::vector<RSeries> basis = basis_S(p.gamma, p.lambda, N, p.mk, BasisFamily::monomial);

    // Companion matrix consistent with the operator's l^{2*lambda_h-1} sign; it
    // coincides with sys.X whenever lambda_h is even or l == 1 (mod 4).
    const int third_sign = (sys.lambda_h & 1) ? kronecker(-1, sys.ell) : 1;
    MatrixModMk Xrec = sys.X;
    if (third_sign == -1) {
        const ModRing rr(p.mk);
        for (long long i = 0; i < d; ++i)
            Xrec.at(d + i, i) = rr.neg(Xrec.at(d + i, i));
    }
    MatrixModMk Xs = mat_pow(Xrec, static_cast<std::uint64_t>(s));

    const std::uint64_t bpow =
        powmod_signed(static_cast<std::uint64_t>(sys.ell), p.lambda + (p.gamma - 3) / 2, p.mk.value);
    const int bchar = kronecker(12, sys.ell);
    const std::uint64_t cpow = powmod_signed(static_cast<std::uint64_t>(sys.ell),
                                             p.gamma + 2 * p.lambda - 2, p.mk.value);

    auto scaled = [&](const RSeries& f, std::uint64_t c) {
        RSeries r = f;
        for (long long n = f.offset(); n < f.trunc(); ++n)
            r.set(n, ring.mul(c, f.coeff(n)));
        return r;
    };

    for (long long i = 0; i < d; ++i) {
        RSeries lhs = basis[static_cast<std::size_t>(i)];
        for (long long t = 0; t < s; ++t) lhs = op_U(lhs, l2);

        RSeries rhs(ring, lhs.offset(), lhs.trunc());
        for (long long j = 0; j < d; ++j) {
            const RSeries& fj = basis[static_cast<std::size_t>(j)];
            const std::uint64_t As_ij = Xs.at(i, j);
            const std::uint64_t Asm1_ij = Xs.at(i, d + j);
            if (As_ij != 0)
                rhs = series_add(rhs, scaled(fj, As_ij)).truncated(lhs.trunc());
            if (Asm1_ij != 0) {
                // B_s = -l^{lambda+(gamma-3)/2} (12/l) A_{s-1}
                std::uint64_t b = ring.mul(bpow, Asm1_ij);
                if (bchar == 1) b = ring.neg(b);
                else if (bchar == -1) { /* minus times minus */ }
                else b = 0;
                if (b != 0) {
                    RSeries gj = op_twist(fj, QuadChar::legendre(sys.ell));
                    rhs = series_add(rhs, scaled(gj, b)).truncated(lhs.trunc());
                }
                // C_s = -sign * l^{gamma+2lambda-2} A_{s-1}
                std::uint64_t cc = ring.mul(cpow, Asm1_ij);
                cc = third_sign == 1 ? ring.neg(cc) : cc;
                if (cc != 0)
                    rhs = series_add(rhs, scaled(op_V(fj, l2), cc)).truncated(lhs.trunc());
            }
        }
        long long mis = first_mismatch(lhs, rhs);
        if (mis < std::min(lhs.trunc(), rhs.trunc()))
            return {false, mis};
    }
    return {true, -1};
}

std::vector<CongruenceCertificate> certify(const HeckeSystem& sys) {
    std::vector<CongruenceCertificate> out;
    CongruenceCertificate base;
    base.m = sys.params.mk.m;
    base.k = sys.params.mk.k;
    base.r = sys.params.r;
    base.modulus = sys.params.mk.value;
    base.beta = sys.params.beta;
    base.ell = sys.ell;
    base.K = sys.K;
    base.M = sys.M_order;
    base.scalar_c = sys.c;
    base.verification = {"hecke-matrix-order", sys.basis_trunc, false, -1};

    CongruenceCertificate vanish = base;
    vanish.kind = CongruenceCertificate::Kind::hecke_vanishing;
    vanish.coprimality_side_condition = true;
    out.push_back(vanish);

    CongruenceCertificate period = base;
    period.kind = CongruenceCertificate::Kind::hecke_periodicity;
    out.push_back(period);
    return out;
}

} // namespace qcong

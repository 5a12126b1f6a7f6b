#include "qcong/congruence.hpp"

#include <sstream>

namespace qcong {

namespace {

template <class Ring, class PartitionFn>
Series<Ring> compute_F_impl(const Ring& ring, const MultipartitionParams& p, long long N,
                            PartitionFn&& p_r_series) {
    if (N <= p.gamma)
        throw hypothesis_error("compute_F: truncation does not reach the leading exponent");
    const long long t_count = ceil_div_ll(N - p.gamma, 24);
    const long long max_index =
        checked_add_ll(checked_mul_ll(static_cast<long long>(p.mk.value), t_count - 1),
                       static_cast<long long>(p.beta));
    Series<Ring> pr = p_r_series(max_index + 1);
    Series<Ring> F(ring, p.gamma, N);
    for (long long t = 0; t < t_count; ++t) {
        long long e = p.gamma + 24 * t;
        if (e >= N) break;
        F.set(e, pr.coeff(static_cast<long long>(p.mk.value) * t + static_cast<long long>(p.beta)));
    }
    return F;
}

struct SpanSolve {
    std::vector<std::uint64_t> coords;
    bool ok = true;
    long long first_bad = -1;
};

// Greedy unit-pivot solve of g against the reduced echelon elements of
// M_lambda (leading exponents 0..d-1), then residual check to g.trunc.
SpanSolve solve_in_basis(RSeries g, const EchelonBasis& basis) {
    SpanSolve out;
    const ModRing& R = g.ring();
    for (long long j = 0; j < basis.dimension; ++j) {
        std::uint64_t c = j < g.offset() ? 0 : g.coeff(j);
        out.coords.push_back(c);
        if (c == 0) continue;
        const RSeries& ej = basis.elements[static_cast<std::size_t>(j)];
        for (long long n = std::max(j, g.offset()); n < g.trunc(); ++n)
            g.set(n, R.sub(g.coeff(n), R.mul(c, n < ej.trunc() ? ej.coeff(n) : 0)));
    }
    for (long long n = g.offset(); n < g.trunc(); ++n) {
        if (g.coeff(n) != 0) {
            out.ok = false;
            out.first_bad = n;
            break;
        }
    }
    return out;
}

} // namespace

RSeries compute_F(const MultipartitionParams& p, long long N) {
    const ModRing ring(p.mk);
    return compute_F_impl(ring, p, N,
                          [&](long long len) { return partition_r_series(p.r, len, p.mk); });
}

ZSeries compute_F_exact(const MultipartitionParams& p, long long N) {
    return compute_F_impl(ExactRing{}, p, N,
                          [&](long long len) { return partition_r_series_exact(p.r, len); });
}

PhiExpression solve_phi(const MultipartitionParams& p, long long N) {
    const long long d = dim_M(p.lambda);
    const long long min_N = p.gamma + 24 * (std::max<long long>(d, 1) + 2);
    if (N < min_N)
        throw hypothesis_error("solve_phi: truncation too small for the basis dimension");

    const ModRing ring(p.mk);
    RSeries F = compute_F(p, N);
    RSeries G = op_U(F.shifted(-p.gamma), 24);
    const long long Nq = G.trunc();
    // F q^{-gamma} = P(q^24)^gamma phi(q^24), so phi = U_24(q^{-gamma} F) P^{-gamma}.
    RSeries phi_q = series_mul(G, series_pow(euler_product(ring, Nq), -p.gamma)).truncated(Nq);

    PhiExpression out;
    out.lambda = p.lambda;
    out.verified_to = N;
    out.sturm_grade = N >= sturm_bound(p);

    if (d == 0) {
        long long v = phi_q.valuation();
        if (v < phi_q.trunc()) {
            std::ostringstream os;
            os << "solve_phi: dim M_" << p.lambda << " = 0 but psi has a nonzero coefficient at q^"
               << v << " (m=" << p.mk.m << ", k=" << p.mk.k << ", r=" << p.r << ")";
            throw identity_error(os.str());
        }
        return out;
    }

    EchelonBasis basis = echelon_basis_M(p.lambda, Nq, p.mk);
    SpanSolve sol = solve_in_basis(phi_q, basis);
    if (!sol.ok) {
        std::ostringstream os;
        os << "solve_phi: nonzero residual at q^" << sol.first_bad << " (m=" << p.mk.m
           << ", k=" << p.mk.k << ", r=" << p.r << ")";
        throw identity_error(os.str());
    }
    out.coords = std::move(sol.coords);
    return out;
}

RSeries reconstruct_F(const MultipartitionParams& p, const PhiExpression& phi, long long N) {
    const ModRing ring(p.mk);
    if (phi.is_zero())
        return RSeries(ring, p.gamma, N);
    const long long Nq = ceil_div_ll(N - p.gamma, 24) + 1;
    EchelonBasis basis = echelon_basis_M(p.lambda, Nq, p.mk);
    RSeries phi_q(ring, 0, Nq);
    for (std::size_t j = 0; j < phi.coords.size(); ++j) {
        if (phi.coords[j] == 0) continue;
        const RSeries& ej = basis.elements[j];
        for (long long n = 0; n < Nq; ++n)
            phi_q.set(n, ring.add(phi_q.coeff(n), ring.mul(phi.coords[j], ej.coeff(n))));
    }
    RSeries eta = eta24_pow(ring, p.gamma, N);
    return series_mul(eta, op_V(phi_q, 24)).truncated(N);
}

std::optional<CongruenceCertificate> detect_ramanujan(const MultipartitionParams& p, long long N) {
    PhiExpression phi = solve_phi(p, N);
    if (!phi.is_zero()) return std::nullopt;
    CongruenceCertificate cert;
    cert.kind = CongruenceCertificate::Kind::ramanujan;
    cert.m = p.mk.m;
    cert.k = p.mk.k;
    cert.r = p.r;
    cert.modulus = p.mk.value;
    cert.beta = p.beta;
    cert.verification = {"phi-basis-solve", N, phi.sturm_grade, -1};
    return cert;
}

bool F_vanishes_to(const MultipartitionParams& p, long long N) {
    return compute_F(p, N).is_zero();
}

namespace {

template <class Ring, class FFn, class EtaFn>
IdentityCheck lemma_impl(const Ring& ring, const MultipartitionParams& p, long long N,
                         FFn&& make_F, EtaFn&& make_eta_quotient) {
    const long long mkv = static_cast<long long>(p.mk.value);
    const long long mkr = checked_mul_ll(mkv, p.r);
    const long long TU = ceil_div_ll(N + mkr, 24) + 2;
    Series<Ring> f = make_eta_quotient(checked_mul_ll(mkv, TU));
    Series<Ring> fUV = op_V(op_U(f, mkv), 24);
    Series<Ring> eta_inv = eta24_pow(ring, -mkr, N - mkr - p.gamma + 48);
    Series<Ring> rhs = series_mul(fUV, eta_inv);
    Series<Ring> F = make_F(N);

    IdentityCheck out;
    long long mis = first_mismatch(F, rhs);
    if (mis < std::min(F.trunc(), rhs.trunc())) {
        out.ok = false;
        out.first_mismatch = mis;
    }
    return out;
}

} // namespace

IdentityCheck check_lemma_funF(const MultipartitionParams& p, long long N, bool exact) {
    if (exact) {
        return lemma_impl(
            ExactRing{}, p, N, [&](long long n) { return compute_F_exact(p, n); },
            [&](long long n) { return eta_quotient_f_exact(p.mk.m, p.mk.k, p.r, n); });
    }
    const ModRing ring(p.mk);
    return lemma_impl(
        ring, p, N, [&](long long n) { return compute_F(p, n); },
        [&](long long n) { return eta_quotient_f(p.mk, p.r, n); });
}

IdentityCheck check_G_in_Mw(const MultipartitionParams& p, long long N) {
    const long long dw = dim_M(p.w);
    if (N < dw + 2)
        throw hypothesis_error("check_G_in_Mw: truncation too small for dim M_w");
    const long long mkv = static_cast<long long>(p.mk.value);
    RSeries fU = op_U(eta_quotient_f(p.mk, p.r, checked_mul_ll(mkv, N)), mkv);

    IdentityCheck out;
    if (dw == 0) {
        long long v = fU.valuation();
        if (v < fU.trunc()) {
            out.ok = false;
            out.first_mismatch = v;
        }
        return out;
    }
    EchelonBasis basis = echelon_basis_M(p.w, N, p.mk);
    SpanSolve sol = solve_in_basis(fU, basis);
    out.ok = sol.ok;
    out.first_mismatch = sol.first_bad;
    return out;
}

} // namespace qcong

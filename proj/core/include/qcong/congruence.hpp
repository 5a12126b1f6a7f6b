#pragma once

#include <optional>
#include <vector>

#include "qcong/certificate.hpp"
#include "qcong/forms.hpp"
#include "qcong/params.hpp"

namespace qcong {

// F = sum_{t>=0} p_r(m^k t + beta) q^{24t+gamma} mod m^k, to truncation N.
RSeries compute_F(const MultipartitionParams& p, long long N);
ZSeries compute_F_exact(const MultipartitionParams& p, long long N);

// Coordinates of phi in the reduced echelon basis of M_lambda mod m^k.
struct PhiExpression {
    long long lambda = 0;
    std::vector<std::uint64_t> coords;  // empty when dim M_lambda = 0
    long long verified_to = 0;
    bool sturm_grade = false;

    bool is_zero() const {
        for (auto c : coords)
            if (c != 0) return false;
        return true;
    }
};

// Solve F = eta(24z)^gamma phi(24z) mod m^k for phi and verify the residual
// vanishes for all exponents below N. Throws identity_error on a nonzero
// residual (that would contradict the representability of F).
PhiExpression solve_phi(const MultipartitionParams& p, long long N);

// Reconstruct eta(24z)^gamma phi(24z) from coordinates, to truncation N.
RSeries reconstruct_F(const MultipartitionParams& p, const PhiExpression& phi, long long N);

// Certificate p_r(m^k n + beta) == 0 (mod m^k), issued iff phi = 0.
std::optional<CongruenceCertificate> detect_ramanujan(const MultipartitionParams& p, long long N);

// Fast zero test for F mod m^k up to N (no basis solve). Equivalent to
// phi = 0 when checked to the Sturm bound.
bool F_vanishes_to(const MultipartitionParams& p, long long N);

// Cross-check F against (f|U_{m^k})|V_24 / eta(24z)^{m^k r}, coefficientwise
// to N. `exact` verifies the identity over Z rather than mod m^k.
struct IdentityCheck {
    bool ok = true;
    long long first_mismatch = -1;
};
IdentityCheck check_lemma_funF(const MultipartitionParams& p, long long N, bool exact = false);

// Check f|U_{m^k} mod m^k lies in the coefficient span of the echelon basis
// of M_w up to N.
IdentityCheck check_G_in_Mw(const MultipartitionParams& p, long long N);

} // namespace qcong

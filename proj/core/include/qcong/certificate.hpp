#pragma once

#include <cstdint>
#include <string>

namespace qcong {

struct VerificationRecord {
    std::string method;
    long long truncation = 0;
    bool sturm_grade = false;
    long long oracle_checked_to = -1;  // largest n spot-checked, -1 if none
};

// A machine-checkable congruence statement.
//  ramanujan:          p_r(m^k n + beta) == 0 (mod m^k) for all n >= 0
//  hecke_vanishing:    p_r((m^k l^{2 mu K - 1} n + r)/24) == 0 (mod m^k)
//                      for all mu >= 1 and n > 0 coprime to l
//  hecke_periodicity:  p_r((m^k l^i n + r)/24) == p_r((m^k l^{2M+i} n + r)/24)
//                      (mod m^k) for all i, n >= 0
struct CongruenceCertificate {
    enum class Kind { ramanujan, hecke_vanishing, hecke_periodicity };

    Kind kind = Kind::ramanujan;
    std::uint64_t m = 0;
    unsigned k = 0;
    long long r = 0;
    std::uint64_t modulus = 0;  // m^k
    std::uint64_t beta = 0;

    // Hecke kinds only.
    long long ell = 0;
    long long K = 0;
    long long M = 0;
    std::uint64_t scalar_c = 0;
    bool coprimality_side_condition = false;  // n must be coprime to ell

    VerificationRecord verification;

    std::string statement() const;
};

} // namespace qcong

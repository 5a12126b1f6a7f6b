#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qcong/params.hpp"

// Exact-arithmetic ground truth, deliberately implemented apart from the
// q-series engine so agreement between the two is evidence.
namespace qcong::oracle {

// p(0..N-1) exactly, via n p(n) = sum_{j=1..n} sigma_1(j) p(n-j).
std::vector<mpz_class> exact_partition(long long N);

// p_r(0..N-1) exactly, by r-fold pentagonal division.
std::vector<mpz_class> exact_p_r(long long r, long long N);

// p_r(0..N-1) mod `modulus`, same recurrence over machine residues (reaches
// indices in the millions).
std::vector<std::uint64_t> residue_p_r(long long r, long long N, std::uint64_t modulus);

struct ProgressionReport {
    bool ok = true;
    long long counterexample_n = -1;
    std::string counterexample_value;  // decimal, empty on success
    long long checked = 0;
};

// Check p_r(A n + B) == 0 (mod M) for 0 <= n <= n_max, exact arithmetic.
ProgressionReport verify_progression(long long A, long long B, std::uint64_t M, long long r,
                                     long long n_max);

struct HeckeInstanceReport {
    bool ok = true;
    long long counterexample_n = -1;
    std::uint64_t counterexample_value = 0;
    long long checked = 0;         // number of admissible n tested
    long long max_index = 0;       // largest partition index reached
};

// Check p_r((m^k l^e n + r)/24) == 0 (mod m^k) for admissible n <= n_max
// (24 | m^k l^e n + r and gcd(n, l) = 1). Residue-mode partition values;
// `index_budget` caps the series length.
HeckeInstanceReport verify_hecke_instance(const MultipartitionParams& p, long long ell,
                                          long long e, long long n_max,
                                          long long index_budget = 4000000);

} // namespace qcong::oracle

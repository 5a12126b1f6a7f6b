#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcong/arith.hpp"

namespace qcong {

// Dense square matrix over Z/modulus, row-major, entries in [0, modulus).
class MatrixModMk {
public:
    MatrixModMk() = default;
    MatrixModMk(long long n, std::uint64_t modulus)
        : n_(n), mod_(modulus), e_(static_cast<std::size_t>(n * n), 0) {}

    static MatrixModMk identity(long long n, std::uint64_t modulus) {
        MatrixModMk I(n, modulus);
        for (long long i = 0; i < n; ++i) I.at(i, i) = 1 % modulus;
        return I;
    }

    long long dim() const { return n_; }
    std::uint64_t modulus() const { return mod_; }

    std::uint64_t& at(long long i, long long j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
    std::uint64_t at(long long i, long long j) const {
        return e_[static_cast<std::size_t>(i * n_ + j)];
    }

    MatrixModMk reduced(std::uint64_t new_mod) const {
        MatrixModMk r(n_, new_mod);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] % new_mod;
        return r;
    }

    bool is_identity() const {
        return is_scalar() && at(0, 0) == 1 % mod_;
    }

    bool is_scalar() const {
        for (long long i = 0; i < n_; ++i)
            for (long long j = 0; j < n_; ++j)
                if (i != j ? at(i, j) != 0 : at(i, j) != at(0, 0)) return false;
        return true;
    }

    // The scalar c with this = c*I, if any.
    std::optional<std::uint64_t> scalar() const {
        if (!is_scalar()) return std::nullopt;
        return at(0, 0);
    }

    bool operator==(const MatrixModMk&) const = default;

private:
    long long n_ = 0;
    std::uint64_t mod_ = 0;
    std::vector<std::uint64_t> e_;
};

MatrixModMk mat_mul(const MatrixModMk& a, const MatrixModMk& b);
MatrixModMk mat_pow(const MatrixModMk& a, std::uint64_t e);

} // namespace qcong

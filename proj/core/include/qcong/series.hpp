#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "qcong/arith.hpp"
#include "qcong/modulus.hpp"

namespace qcong {

// Coefficients reduced into [0, mod). `mod` is any prime-power value m^k < 2^63.
struct ModRing {
    using value_type = std::uint64_t;
    std::uint64_t mod = 0;

    ModRing() = default;
    explicit ModRing(std::uint64_t mod_) : mod(mod_) {}
    explicit ModRing(const Modulus& mk) : mod(mk.value) {}

    value_type zero() const { return 0; }
    value_type one() const { return mod == 1 ? 0 : 1; }
    value_type from_int(long long v) const {
        long long r = v % static_cast<long long>(mod);
        if (r < 0) r += static_cast<long long>(mod);
        return static_cast<value_type>(r);
    }
    value_type add(value_type a, value_type b) const {
        value_type s = a + b;
        return s >= mod ? s - mod : s;
    }
    value_type sub(value_type a, value_type b) const {
        return a >= b ? a - b : a + mod - b;
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : mod - a; }
    value_type mul(value_type a, value_type b) const { return mulmod_u64(a, b, mod); }
    value_type inv(value_type a) const { return invmod_u64(a, mod); }
    bool is_unit(value_type a) const { return gcd_u64(a, mod) == 1; }
    bool is_zero(value_type a) const { return a == 0; }
    bool operator==(const ModRing&) const = default;
};

// Exact arbitrary-precision coefficients.
struct ExactRing {
    using value_type = mpz_class;

    value_type zero() const { return mpz_class(0); }
    value_type one() const { return mpz_class(1); }
    value_type from_int(long long v) const { return mpz_class(static_cast<long>(v)); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const {
        if (a != 1 && a != -1)
            throw hypothesis_error("exact-mode inverse requires a leading coefficient of +-1");
        return a;
    }
    bool is_unit(const value_type& a) const { return a == 1 || a == -1; }
    bool is_zero(const value_type& a) const { return a == 0; }
    bool operator==(const ExactRing&) const = default;
};

// Truncated q-series: coefficients are authoritative for exponents in
// [offset, trunc); everything below offset is zero, everything at or above
// trunc is unknown. Operations compute the tightest valid trunc.
template <class Ring>
class Series {
public:
    using value_type = typename Ring::value_type;

    Series() = default;

    Series(Ring ring, long long offset, long long trunc)
        : ring_(std::move(ring)), offset_(offset), trunc_(trunc) {
        if (trunc < offset)
            throw std::invalid_argument("series trunc below offset");
        coeffs_.assign(static_cast<std::size_t>(trunc - offset), ring_.zero());
    }

    static Series constant(Ring ring, long long value, long long trunc) {
        Series s(ring, 0, trunc);
        if (trunc > 0) s.coeffs_[0] = s.ring_.from_int(value);
        return s;
    }

    const Ring& ring() const { return ring_; }
    long long offset() const { return offset_; }
    long long trunc() const { return trunc_; }
    long long length() const { return trunc_ - offset_; }

    bool knows(long long n) const { return n < trunc_; }

    value_type coeff(long long n) const {
        if (n < offset_) return ring_.zero();
        if (n >= trunc_)
            throw std::out_of_range("coefficient index beyond series truncation");
        return coeffs_[static_cast<std::size_t>(n - offset_)];
    }

    void set(long long n, value_type v) {
        if (n < offset_ || n >= trunc_)
            throw std::out_of_range("coefficient index outside series window");
        coeffs_[static_cast<std::size_t>(n - offset_)] = std::move(v);
    }

    const value_type& rel(std::size_t i) const { return coeffs_[i]; }
    value_type& rel(std::size_t i) { return coeffs_[i]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!ring_.is_zero(c)) return false;
        return true;
    }

    // Smallest exponent with nonzero coefficient, or trunc() if none stored.
    long long valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!ring_.is_zero(coeffs_[i])) return offset_ + static_cast<long long>(i);
        return trunc_;
    }

    std::size_t nonzero_count() const {
        std::size_t n = 0;
        for (const auto& c : coeffs_)
            if (!ring_.is_zero(c)) ++n;
        return n;
    }

    // Multiply by q^e.
    Series shifted(long long e) const {
        Series r = *this;
        r.offset_ = checked_add_ll(offset_, e);
        r.trunc_ = checked_add_ll(trunc_, e);
        return r;
    }

    // Drop coefficients at exponents >= new_trunc.
    Series truncated(long long new_trunc) const {
        if (new_trunc >= trunc_) return *this;
        if (new_trunc < offset_) new_trunc = offset_;
        Series r(ring_, offset_, new_trunc);
        for (long long n = offset_; n < new_trunc; ++n)
            r.set(n, coeff(n));
        return r;
    }

private:
    Ring ring_{};
    long long offset_ = 0;
    long long trunc_ = 0;
    std::vector<value_type> coeffs_;
};

using RSeries = Series<ModRing>;
using ZSeries = Series<ExactRing>;

namespace detail {

template <class Ring>
void require_same_ring(const Series<Ring>& a, const Series<Ring>& b) {
    if (!(a.ring() == b.ring()))
        throw hypothesis_error("series mode/modulus mismatch");
}

} // namespace detail

template <class Ring>
Series<Ring> series_add(const Series<Ring>& a, const Series<Ring>& b) {
    detail::require_same_ring(a, b);
    long long off = std::min(a.offset(), b.offset());
    long long tr = std::min(a.trunc(), b.trunc());
    if (tr < off) tr = off;
    Series<Ring> r(a.ring(), off, tr);
    for (long long n = off; n < tr; ++n)
        r.set(n, a.ring().add(n < a.trunc() ? a.coeff(n) : a.ring().zero(),
                              n < b.trunc() ? b.coeff(n) : a.ring().zero()));
    return r;
}

template <class Ring>
Series<Ring> series_neg(const Series<Ring>& a) {
    Series<Ring> r = a;
    for (long long n = a.offset(); n < a.trunc(); ++n)
        r.set(n, a.ring().neg(a.coeff(n)));
    return r;
}

template <class Ring>
Series<Ring> series_sub(const Series<Ring>& a, const Series<Ring>& b) {
    return series_add(a, series_neg(b));
}

template <class Ring>
Series<Ring> series_scale(const Series<Ring>& a, long long c) {
    Series<Ring> r = a;
    auto cc = a.ring().from_int(c);
    for (long long n = a.offset(); n < a.trunc(); ++n)
        r.set(n, a.ring().mul(a.coeff(n), cc));
    return r;
}

// Convolution. offset = a.offset + b.offset; trunc = min(a.trunc + b.offset,
// b.trunc + a.offset). Iterates over the nonzero entries of the sparser
// operand, which makes division-by-pentagonal-series workloads cheap.
template <class Ring>
Series<Ring> series_mul(const Series<Ring>& a, const Series<Ring>& b) {
    detail::require_same_ring(a, b);
    long long off = checked_add_ll(a.offset(), b.offset());
    long long tr = std::min(checked_add_ll(a.trunc(), b.offset()),
                            checked_add_ll(b.trunc(), a.offset()));
    if (tr < off) tr = off;
    Series<Ring> r(a.ring(), off, tr);
    const std::size_t len = static_cast<std::size_t>(tr - off);
    if (len == 0) return r;

    const Series<Ring>* sparse = &a;
    const Series<Ring>* dense = &b;
    if (b.nonzero_count() < a.nonzero_count()) std::swap(sparse, dense);

    const Ring& R = r.ring();
    for (std::size_t u = 0; u < static_cast<std::size_t>(sparse->length()) && u < len; ++u) {
        const auto& sv = sparse->rel(u);
        if (R.is_zero(sv)) continue;
        const std::size_t vmax = std::min(len - u, static_cast<std::size_t>(dense->length()));
        for (std::size_t v = 0; v < vmax; ++v) {
            const auto& dv = dense->rel(v);
            if (R.is_zero(dv)) continue;
            auto& slot = r.rel(u + v);
            slot = R.add(slot, R.mul(sv, dv));
        }
    }
    return r;
}

// Multiplicative inverse to truncation. Requires a unit leading coefficient;
// result offset is -a.offset and the relative length matches a's.
template <class Ring>
Series<Ring> series_inv(const Series<Ring>& a) {
    const Ring& R = a.ring();
    if (a.length() == 0)
        throw hypothesis_error("cannot invert an empty series window");
    if (R.is_zero(a.rel(0)) || !R.is_unit(a.rel(0)))
        throw hypothesis_error("series_inv: leading coefficient is not a unit");
    const std::size_t len = static_cast<std::size_t>(a.length());
    Series<Ring> r(R, -a.offset(), -a.offset() + static_cast<long long>(len));

    // Nonzero profile of a (relative indices >= 1) for the back-substitution.
    std::vector<std::size_t> nz;
    for (std::size_t j = 1; j < len; ++j)
        if (!R.is_zero(a.rel(j))) nz.push_back(j);

    auto lead_inv = R.inv(a.rel(0));
    r.rel(0) = lead_inv;
    for (std::size_t i = 1; i < len; ++i) {
        auto acc = R.zero();
        for (std::size_t j : nz) {
            if (j > i) break;
            acc = R.add(acc, R.mul(a.rel(j), r.rel(i - j)));
        }
        r.rel(i) = R.neg(R.mul(lead_inv, acc));
    }
    return r;
}

// Integer power; negative exponents go through series_inv.
template <class Ring>
Series<Ring> series_pow(const Series<Ring>& a, long long e) {
    if (e < 0) return series_pow(series_inv(a), -e);
    Series<Ring> result = Series<Ring>::constant(a.ring(), 1, a.length());
    Series<Ring> base = a;
    long long n = e;
    while (n > 0) {
        if (n & 1) result = series_mul(result, base);
        if (n >>= 1) base = series_mul(base, base);
    }
    return result;
}

// U-operator: coefficient at n of the result is the coefficient at l*n of f.
template <class Ring>
Series<Ring> op_U(const Series<Ring>& f, long long l) {
    if (l < 1) throw hypothesis_error("op_U: l must be >= 1");
    if (l == 1) return f;
    long long off = ceil_div_ll(f.offset(), l);
    long long tr = ceil_div_ll(f.trunc(), l);
    Series<Ring> r(f.ring(), off, tr);
    for (long long n = off; n < tr; ++n)
        r.set(n, f.coeff(checked_mul_ll(n, l)));
    return r;
}

// V-operator: q^n -> q^{l n}.
template <class Ring>
Series<Ring> op_V(const Series<Ring>& f, long long l) {
    if (l < 1) throw hypothesis_error("op_V: l must be >= 1");
    if (l == 1) return f;
    long long off = checked_mul_ll(f.offset(), l);
    long long tr = checked_mul_ll(f.trunc(), l);
    Series<Ring> r(f.ring(), off, tr);
    for (long long n = f.offset(); n < f.trunc(); ++n)
        r.set(checked_mul_ll(n, l), f.coeff(n));
    return r;
}

// Twist: coefficient at n multiplied by psi(n), psi taking values in {-1,0,1}.
template <class Ring, class Char>
Series<Ring> op_twist(const Series<Ring>& f, const Char& psi) {
    Series<Ring> r = f;
    const Ring& R = f.ring();
    for (long long n = f.offset(); n < f.trunc(); ++n) {
        int v = psi(n);
        if (v == 1) continue;
        r.set(n, v == 0 ? R.zero() : R.neg(f.coeff(n)));
    }
    return r;
}

// Reduce an exact series modulo m^k.
RSeries reduce_mod(const ZSeries& a, const Modulus& mk);

// Equality of stored coefficients on the common known window.
template <class Ring>
bool series_equal(const Series<Ring>& a, const Series<Ring>& b) {
    long long tr = std::min(a.trunc(), b.trunc());
    long long off = std::min(a.offset(), b.offset());
    for (long long n = off; n < tr; ++n) {
        auto av = n < a.offset() ? a.ring().zero() : a.coeff(n);
        auto bv = n < b.offset() ? b.ring().zero() : b.coeff(n);
        if (!(av == bv)) return false;
    }
    return true;
}

// First exponent on the common window where a and b disagree, or trunc if none.
template <class Ring>
long long first_mismatch(const Series<Ring>& a, const Series<Ring>& b) {
    long long tr = std::min(a.trunc(), b.trunc());
    long long off = std::min(a.offset(), b.offset());
    for (long long n = off; n < tr; ++n) {
        auto av = n < a.offset() ? a.ring().zero() : a.coeff(n);
        auto bv = n < b.offset() ? b.ring().zero() : b.coeff(n);
        if (!(av == bv)) return n;
    }
    return tr;
}

} // namespace qcong

#include "qcong/series.hpp"

namespace qcong {

RSeries reduce_mod(const ZSeries& a, const Modulus& mk) {
    RSeries r(ModRing(mk), a.offset(), a.trunc());
    for (long long n = a.offset(); n < a.trunc(); ++n) {
        const mpz_class& c = a.coeff(n);
        r.set(n, mpz_fdiv_ui(c.get_mpz_t(), mk.value));
    }
    return r;
}

} // namespace qcong

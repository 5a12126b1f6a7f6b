#include "qcong/certificate.hpp"

#include <sstream>

namespace qcong {

std::string CongruenceCertificate::statement() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::ramanujan:
        os << "p_" << r << "(" << modulus << "*n + " << beta << ") == 0 (mod " << modulus
           << ") for all n >= 0";
        break;
    case Kind::hecke_vanishing:
        os << "p_" << r << "((" << modulus << "*" << ell << "^(2*mu*" << K << "-1)*n + " << r
           << ")/24) == 0 (mod " << modulus << ") for all mu >= 1 and all n > 0 with gcd(n, "
           << ell << ") = 1";
        break;
    case Kind::hecke_periodicity:
        os << "p_" << r << "((" << modulus << "*" << ell << "^i*n + " << r << ")/24) == p_" << r
           << "((" << modulus << "*" << ell << "^(" << 2 * M << "+i)*n + " << r
           << ")/24) (mod " << modulus << ") for all i, n >= 0";
        break;
    }
    return os.str();
}

} // namespace qcong

#include "stepmom/zmap.hpp"

#include <cmath>

#include "stepmom/core.hpp"

namespace stepmom {

double mu0_from_znojil(double E_z, double Z) {
    if (!std::isfinite(E_z) || !std::isfinite(Z) || !(Z > 0.0) || E_z < 0.0)
        throw DomainError("parameter map requires Z > 0 and E_z >= 0");
    return Z / (E_z + std::hypot(E_z, Z));
}

ZnojilParams znojil_from_mu0(double mu0, double E_mu) {
    if (!std::isfinite(mu0) || !std::isfinite(E_mu) || !(mu0 > 0.0) || !(E_mu > 0.0))
        throw DomainError("parameter map requires mu0 > 0 and E_mu > 0");
    const double q = 1.0 + mu0 * mu0;
    const double scale = E_mu / (q * q);
    return {(1.0 - mu0) * (1.0 + mu0) * scale, 2.0 * mu0 * scale, E_mu, mu0};
}

ZnojilParams step_from_znojil(double E_z, double Z) {
    const double mu0 = mu0_from_znojil(E_z, Z);
    return {E_z, Z, (1.0 + mu0 * mu0) * std::hypot(E_z, Z), mu0};
}

}  // namespace stepmom

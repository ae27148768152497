#pragma once

namespace stepmom {

// Parameter map between the PT step-momentum well and the non-Hermitian
// square well with energy E_z and non-Hermiticity Z, obtained by equating
// kappa_z^2 = E_z - iZ with kappa_mu^2 = E_mu / (1 + i mu0)^2. Units hbar^2 = 2m = 1.

struct ZnojilParams {
    double E_z;
    double Z;
    double E_mu;
    double mu0;
};

/// mu0 = (E_z/Z)(-1 + sqrt(1 + Z^2/E_z^2)), evaluated as Z / (E_z + sqrt(E_z^2 + Z^2)).
/// Requires Z > 0 and E_z >= 0.
double mu0_from_znojil(double E_z, double Z);

/// E_z = (1 - mu0^2) E_mu / (1 + mu0^2)^2,  Z = 2 mu0 E_mu / (1 + mu0^2)^2.
ZnojilParams znojil_from_mu0(double mu0, double E_mu);

/// Full parameter set from (E_z, Z); E_mu = (1 + mu0^2) sqrt(E_z^2 + Z^2).
ZnojilParams step_from_znojil(double E_z, double Z);

}  // namespace stepmom

#include <cmath>
#include <random>

#include "doctest.h"
#include "stepmom/core.hpp"
#include "stepmom/zmap.hpp"

using namespace stepmom;

TEST_CASE("spot values") {
    CHECK(mu0_from_znojil(1.0, 1.0) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));
    CHECK(mu0_from_znojil(0.0, 3.0) == 1.0);
    const ZnojilParams p = step_from_znojil(1.0, 1.0);
    const double mu = std::sqrt(2.0) - 1.0;
    CHECK(p.E_mu == doctest::Approx((1.0 + mu * mu) * std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("small-Z limit is Z / (2 E_z) without cancellation") {
    for (double z : {1e-3, 1e-8, 1e-14, 1e-200}) CHECK(mu0_from_znojil(1.0, z) / (0.5 * z) == doctest::Approx(1.0).epsilon(1e-6));
    // The textbook form loses every digit here.
    const double ratio = 1e-9;
    const double textbook = (1.0 / ratio) * (-1.0 + std::sqrt(1.0 + ratio * ratio));
    CHECK(textbook == 0.0);
    CHECK(mu0_from_znojil(1.0, ratio) > 0.0);
}

TEST_CASE("both forms agree at moderate ratios") {
    for (double E_z : {0.5, 1.0, 4.0})
        for (double Z : {0.1, 1.0, 7.0}) {
            const double textbook = (E_z / Z) * (-1.0 + std::sqrt(1.0 + Z * Z / (E_z * E_z)));
            CHECK(mu0_from_znojil(E_z, Z) == doctest::Approx(textbook).epsilon(1e-12));
        }
}

TEST_CASE("round trip and the wave-number identity") {
    std::mt19937_64 rng(20261015);
    std::uniform_real_distribution<double> mu_dist(1e-3, 0.999);
    std::uniform_real_distribution<double> e_dist(1e-2, 1e3);
    for (int trial = 0; trial < 500; ++trial) {
        const double mu0 = mu_dist(rng);
        const double E_mu = e_dist(rng);
        const ZnojilParams z = znojil_from_mu0(mu0, E_mu);
        CHECK(z.E_z > 0.0);
        CHECK(z.Z > 0.0);
        const ZnojilParams back = step_from_znojil(z.E_z, z.Z);
        CHECK(back.mu0 == doctest::Approx(mu0).epsilon(1e-12));
        CHECK(back.E_mu == doctest::Approx(E_mu).epsilon(1e-12));

        const cplx lhs(z.E_z, -z.Z);
        const cplx one_plus_imu(1.0, mu0);
        const cplx rhs = E_mu / (one_plus_imu * one_plus_imu);
        CHECK(std::abs(lhs - rhs) < 1e-12 * E_mu);
    }
}

TEST_CASE("mu0 grows with Z at fixed E_z and stays below one") {
    double previous = 0.0;
    for (double Z = 0.01; Z < 1e4; Z *= 1.5) {
        const double mu = mu0_from_znojil(2.0, Z);
        CHECK(mu > previous);
        CHECK(mu < 1.0);
        previous = mu;
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(mu0_from_znojil(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(mu0_from_znojil(1.0, -1.0), DomainError);
    CHECK_THROWS_AS(mu0_from_znojil(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(mu0_from_znojil(NAN, 1.0), DomainError);
    CHECK_THROWS_AS(znojil_from_mu0(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(znojil_from_mu0(0.2, 0.0), DomainError);
    CHECK_THROWS_AS(step_from_znojil(1.0, 0.0), DomainError);
}

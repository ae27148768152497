#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stepmom/core.hpp"

using namespace stepmom;

TEST_CASE("energy ratio of the undeformed well") {
    CHECK(energy_ratio(kPi / 2, 0.0, Mode::Hermitian) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(energy_ratio(kPi, 0.0, Mode::PTSymmetric) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("PT energy ratio carries the (1 + mu0^2)^2 factor") {
    const double eta = oracle::kPT01[0].eta;
    CHECK(energy_ratio(eta, 0.1, Mode::PTSymmetric) == doctest::Approx(oracle::kPT01[0].energy_ratio).epsilon(1e-14));
    // The published 1.0422 is the same root expressed with pi rounded to 3.14.
    const double published_scale = std::pow(kPi / 3.14, 2);
    CHECK(std::abs(energy_ratio(eta, 0.1, Mode::PTSymmetric) * published_scale - 1.0422) < 1e-4);
}

TEST_CASE("energy ratio rejects out-of-domain input") {
    CHECK_THROWS_AS(energy_ratio(0.0, 0.1, Mode::Hermitian), DomainError);
    CHECK_THROWS_AS(energy_ratio(-1.0, 0.1, Mode::PTSymmetric), DomainError);
    CHECK_THROWS_AS(energy_ratio(1.0, 1.0, Mode::Hermitian), DomainError);
    CHECK_THROWS_AS(energy_ratio(1.0, -0.1, Mode::PTSymmetric), DomainError);
    CHECK_NOTHROW(energy_ratio(1.0, 2.5, Mode::PTSymmetric));
}

TEST_CASE("wave numbers") {
    auto k = wave_numbers(kPi / 2, 0.0, Mode::Hermitian);
    CHECK(k.kappa_l == cplx(kPi / 2, 0.0));
    CHECK(k.kappa_bar_l == cplx(kPi / 2, 0.0));

    k = wave_numbers(1.0, 0.5, Mode::Hermitian);
    CHECK(k.kappa_l.real() == doctest::Approx(2.0 / 3.0));
    CHECK(k.kappa_bar_l.real() == doctest::Approx(2.0));
    CHECK(k.kappa_l.imag() == 0.0);
    CHECK(k.kappa_bar_l.imag() == 0.0);

    k = wave_numbers(1.0, 0.3, Mode::PTSymmetric);
    CHECK(k.kappa_l == cplx(1.0, -0.3));
    CHECK(k.kappa_bar_l == cplx(1.0, 0.3));
}

TEST_CASE("wave number and energy properties over random inputs") {
    std::mt19937_64 rng(20261015);
    std::uniform_real_distribution<double> eta_dist(1e-3, 40.0);
    std::uniform_real_distribution<double> mu_dist(0.0, 0.999);
    for (int i = 0; i < 2000; ++i) {
        const double eta = eta_dist(rng);
        const double mu0 = mu_dist(rng);
        const auto h = wave_numbers(eta, mu0, Mode::Hermitian);
        CHECK(h.kappa_l.real() * (1.0 + mu0) == doctest::Approx(eta).epsilon(1e-15));
        CHECK(h.kappa_bar_l.real() * (1.0 - mu0) == doctest::Approx(eta).epsilon(1e-15));

        const auto p = wave_numbers(eta, mu0, Mode::PTSymmetric);
        CHECK(p.kappa_bar_l == std::conj(p.kappa_l));

        const double bump = eta * (1.0 + 1e-9);
        CHECK(energy_ratio(bump, mu0, Mode::Hermitian) > energy_ratio(eta, mu0, Mode::Hermitian));
        CHECK(energy_ratio(bump, mu0, Mode::PTSymmetric) > energy_ratio(eta, mu0, Mode::PTSymmetric));
    }
}

TEST_CASE("both modes agree at mu0 = 0") {
    for (double eta : {0.3, 1.0, 2.7, 11.0}) {
        const auto h = wave_numbers(eta, 0.0, Mode::Hermitian);
        const auto p = wave_numbers(eta, 0.0, Mode::PTSymmetric);
        CHECK(h.kappa_l == p.kappa_l);
        CHECK(h.kappa_bar_l == p.kappa_bar_l);
        CHECK(energy_ratio(eta, 0.0, Mode::Hermitian) == energy_ratio(eta, 0.0, Mode::PTSymmetric));
    }
}

TEST_CASE("step profiles") {
    const auto h = StepProfile::two_step(Mode::Hermitian, 0.2);
    REQUIRE(h.segments().size() == 2);
    CHECK(h.segments()[0].left == -1.0);
    CHECK(h.segments()[0].right == 0.0);
    CHECK(h.segments()[0].alpha == cplx(1.2, 0.0));
    CHECK(h.segments()[1].alpha == cplx(0.8, 0.0));

    const auto p = StepProfile::two_step(Mode::PTSymmetric, 0.3, 2.0);
    CHECK(p.segments()[0].alpha == cplx(1.0, 0.3));
    CHECK(p.segments()[1].alpha == cplx(1.0, -0.3));
    CHECK(p.right_end() == 2.0);

    CHECK_THROWS_AS(StepProfile::two_step(Mode::Hermitian, 1.0), DomainError);
    CHECK_THROWS_AS(StepProfile::from_segments({{-1.0, 0.0, 1.0}, {0.1, 1.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(StepProfile::from_segments({{-1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}}), DomainError);
    CHECK_THROWS_AS(StepProfile::from_segments({{-1.0, 0.5, 1.0}}), DomainError);
    CHECK_NOTHROW(StepProfile::from_segments({{-1.0, -0.2, 1.0}, {-0.2, 0.5, 1.5}, {0.5, 1.0, 0.7}}));
}

TEST_CASE("well and root config") {
    const WellConfig well;
    CHECK(well.ground_energy() == doctest::Approx(kPi * kPi / 4.0));
    CHECK(WellConfig{2.0, 1.0, 0.5}.ground_energy() == doctest::Approx(kPi * kPi / 16.0));
    CHECK_THROWS_AS(WellConfig{0.0}.ground_energy(), DomainError);

    CHECK_NOTHROW(RootConfig{}.validate());
    CHECK_THROWS_AS((RootConfig{1.0, 0.5}.validate()), DomainError);
    CHECK_THROWS_AS((RootConfig{1e-6, 1.0, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((RootConfig{1e-6, 1.0, 1e-3, -1.0}.validate()), DomainError);
}

TEST_CASE("mode parsing") {
    CHECK(parse_mode("hermitian") == Mode::Hermitian);
    CHECK(parse_mode("PT") == Mode::PTSymmetric);
    CHECK(to_string(Mode::PTSymmetric) == "pt");
    CHECK_THROWS_AS(parse_mode("unitary"), DomainError);
}

TEST_CASE("uniform grid puts the origin on a node") {
    const auto g = uniform_grid(-1.0, 1.0, 2001);
    CHECK(g.front() == -1.0);
    CHECK(g.back() == 1.0);
    CHECK(g[1000] == 0.0);
    CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 1), DomainError);
}

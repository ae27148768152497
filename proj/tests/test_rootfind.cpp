#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "stepmom/characteristic.hpp"
#include "stepmom/rootfind.hpp"

using namespace stepmom;

namespace {
RootConfig window(double hi) {
    RootConfig cfg;
    cfg.eta_max = hi;
    return cfg;
}
double sin2(double x) { return std::sin(2.0 * x); }
}  // namespace

TEST_CASE("scan_brackets finds the zeros of sin(2 eta)") {
    const auto brackets = scan_brackets(sin2, window(2 * kPi));
    REQUIRE(brackets.size() == 4);
    for (std::size_t i = 0; i < 3; ++i) {
        const double root = static_cast<double>(i + 1) * kPi / 2;
        CHECK(brackets[i].lo <= root);
        CHECK(brackets[i].hi >= root);
    }
    // The last zero sits on the window end: sin(4 pi) rounds to a tiny negative value.
    CHECK(brackets[3].hi == 2 * kPi);
}

TEST_CASE("scan_brackets finds nothing for the PT step at mu0 = 0.4") {
    CHECK(scan_brackets([](double e) { return pt_char(e, 0.4); }, window(4 * kPi)).empty());
}

TEST_CASE("scan_brackets bracket count matches a 100x denser scan") {
    const auto f = [](double e) { return hermitian_char(e, 0.2); };
    const auto coarse = scan_brackets(f, window(3 * kPi));
    const auto dense = oracle::dense_sign_changes(f, 1e-6, 3 * kPi, 1e-5);
    CHECK(coarse.size() >= 3);
    CHECK(coarse.size() == dense.size());
}

TEST_CASE("exact zeros on the grid become degenerate brackets") {
    RootConfig cfg;
    cfg.eta_min = 0.5;
    cfg.eta_max = 1.5;
    cfg.grid_step = 0.25;
    const auto b = scan_brackets([](double x) { return x - 1.0; }, cfg);
    REQUIRE(b.size() == 1);
    CHECK(b[0].lo == 1.0);
    CHECK(b[0].hi == 1.0);
    const RootRecord r = refine([](double x) { return x - 1.0; }, b[0], cfg);
    CHECK(r.eta == 1.0);
    CHECK(r.iterations == 0);
}

TEST_CASE("near-tangent pairs below the grid resolution are recovered") {
    // Two roots 3e-5 apart between grid nodes; |f(1)| ~ 7e-10 against a scale of 0.25.
    const double c = 1.00003;
    const double d = 1.5e-5;
    const auto f = [c, d](double x) { return (x - c) * (x - c) - d * d; };
    RootConfig cfg;
    cfg.eta_min = 0.5;
    cfg.eta_max = 1.5;
    cfg.grid_step = 1e-3;
    const auto roots = find_roots(f, cfg);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].eta == doctest::Approx(c - d).epsilon(1e-11));
    CHECK(roots[1].eta == doctest::Approx(c + d).epsilon(1e-11));
}

TEST_CASE("refine converges to tolerance") {
    const RootConfig cfg;
    const RootRecord r = refine(sin2, {1.5, 1.6}, cfg);
    CHECK(std::abs(r.eta - kPi / 2) < 1e-12);
    CHECK(r.residual < 1e-11);
    CHECK(r.eta >= 1.5);
    CHECK(r.eta <= 1.6);
    CHECK(r.iterations > 0);
    CHECK_THROWS_AS(refine(sin2, {0.1, 0.2}, cfg), DomainError);
}

TEST_CASE("refine on the characteristic functions") {
    const auto h = [](double e) { return hermitian_char(e, 0.1); };
    const auto hb = scan_brackets(h, window(4 * kPi));
    const RootRecord r1 = refine(h, hb.at(0), RootConfig{});
    CHECK(std::abs(r1.eta - oracle::kHermitian01[0].eta) < 1e-12);
    CHECK(std::abs(energy_ratio(r1.eta, 0.1, Mode::Hermitian) * std::pow(kPi / 3.14, 2) - 0.9621) < 1e-3);

    const auto p = [](double e) { return pt_char(e, 0.2); };
    const auto pb = scan_brackets(p, window(4 * kPi));
    const RootRecord r3 = refine(p, pb.at(2), RootConfig{});
    CHECK(std::abs(r3.eta - oracle::kPT02[2].eta) < 1e-12);
    CHECK(std::abs(energy_ratio(r3.eta, 0.2, Mode::PTSymmetric) * std::pow(kPi / 3.14, 2) - 11.6578) < 1e-3);
}

TEST_CASE("refine reports an exhausted budget") {
    RootConfig cfg;
    cfg.max_refine_iters = 2;
    CHECK_THROWS_AS(refine(sin2, {1.0, 2.0}, cfg), RefineError);
}

TEST_CASE("find_roots of sin(2 eta) returns k pi / 2") {
    const RootConfig cfg = window(8 * kPi + 1e-3);
    const auto roots = find_roots(sin2, cfg);
    REQUIRE(roots.size() == 16);
    for (std::size_t k = 0; k < roots.size(); ++k)
        CHECK(std::abs(roots[k].eta - static_cast<double>(k + 1) * kPi / 2) <= cfg.refine_tol);
}

TEST_CASE("find_roots on the closed forms") {
    const auto h = find_roots([](double e) { return hermitian_char(e, 0.3); }, window(4 * kPi));
    REQUIRE(h.size() >= 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(h[i].eta - oracle::kHermitian03[i].eta) < 1e-12);

    const auto p = find_roots([](double e) { return pt_char(e, 0.3); }, window(4 * kPi));
    CHECK(p.size() == 2);
}

TEST_CASE("each root has exactly one sign change in its neighbourhood; results are deterministic") {
    const RootConfig cfg = window(4 * kPi);
    for (double mu0 : {0.1, 0.2, 0.3}) {
        const auto f = [mu0](double e) { return pt_char(e, mu0); };
        const auto roots = find_roots(f, cfg);
        const auto again = find_roots(f, cfg);
        REQUIRE(roots.size() == again.size());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            CHECK(roots[i].eta == again[i].eta);
            const double eta = roots[i].eta;
            const auto local = oracle::dense_sign_changes(f, eta - cfg.grid_step, eta + cfg.grid_step,
                                                          cfg.grid_step / 100);
            CHECK(local.size() == 1);
            if (i > 0) CHECK(roots[i].eta > roots[i - 1].eta);
        }
    }
}

TEST_CASE("default grid resolves the closest PT pair at mu0 = 0.37") {
    const auto f = [](double e) { return pt_char(e, 0.37); };
    const auto dense = oracle::dense_sign_changes(f, 1e-6, 4 * kPi, 1e-6);
    REQUIRE(dense.size() == 2);
    CHECK(find_roots(f, window(4 * kPi)).size() == 2);
}

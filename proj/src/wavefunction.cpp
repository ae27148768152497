#include "stepmom/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace stepmom {

namespace {

constexpr double kSingularCos = 1e-8;
constexpr double kNullSupNorm = 1e-12;
constexpr double kDegenerateAmplitude = 1e-6;
constexpr double kDegenerateEtaFloor = 1e-3;

// sinh(c)/c and sin(c)/c without cancellation near 0.
double sinhc(double c) { return std::abs(c) < 1e-4 ? 1.0 + c * c / 6.0 : std::sinh(c) / c; }
double sinc(double c) { return std::abs(c) < 1e-4 ? 1.0 - c * c / 6.0 : std::sin(c) / c; }

// Integral over u in [0, l] of |sin(k u)|^2 with kl = a + ib, i.e. of (cosh 2bu - cos 2au)/2.
double sin_squared_integral(cplx kl, double l) {
    return 0.5 * l * (sinhc(2.0 * kl.imag()) - sinc(2.0 * kl.real()));
}

struct Branches {
    cplx left_amp;
    cplx right_amp;
    WaveNumbers k;
};

// Unnormalized eigenfunction left_amp sin(k(x+l)) | right_amp sin(kbar(x-l)).
// Normally the closed form with amplitudes sin(kbar l) and -sin(k l); these both
// vanish when psi has a node at x = 0, and then the shooting form with
// psi'(-l) = 1 and derivative matching at the origin is used instead.
Branches raw_branches(double eta, double mu0, Mode mode) {
    const WaveNumbers k = wave_numbers(eta, mu0, mode);
    const cplx s_left = std::sin(k.kappa_bar_l);
    const cplx s_right = std::sin(k.kappa_l);
    if (eta < kDegenerateEtaFloor || std::min(std::abs(s_left), std::abs(s_right)) >= kDegenerateAmplitude)
        return {s_left, -s_right, k};

    const cplx cos_left = std::cos(k.kappa_l);
    const cplx beta = cos_left / (k.kappa_bar_l * std::cos(k.kappa_bar_l));
    // PT symmetry psi*(-x) = psi(x) forces psi'(0) to be imaginary.
    const cplx phase = mode == Mode::Hermitian ? cplx(1.0, 0.0) : cplx(0.0, 1.0) * std::conj(cos_left) / std::abs(cos_left);
    return {phase / k.kappa_l, phase * beta, k};
}

}  // namespace

CoefficientSet coefficients(double eta, double mu0, Mode mode) {
    const WaveNumbers k = wave_numbers(eta, mu0, mode);
    const cplx i(0.0, 1.0);
    const cplx kl = k.kappa_l;
    const cplx kb = k.kappa_bar_l;

    CoefficientSet out;
    out.b = -std::exp(-2.0 * i * kl);
    const cplx phase = std::exp(2.0 * i * kb);
    if (std::abs(std::cos(kb)) > kSingularCos) {
        out.c = kl * std::cos(kl) / (kb * std::cos(kb)) * std::exp(-i * (kl + kb));
    } else {
        const cplx denom = 1.0 - phase;
        if (std::abs(denom) <= kSingularCos)
            throw SingularRepresentationError(
                "plane-wave coefficients are singular here; sample the closed two-branch eigenfunction instead");
        out.c = (1.0 + out.b) / denom;
    }
    out.d = -out.c * phase;
    return out;
}

SampledFunction momentum_eigenfunction(double momentum, double mu0, Mode mode, std::span<const double> grid,
                                       double hbar) {
    if (mode != Mode::Hermitian)
        throw DomainError("momentum eigenfunctions are only defined here for the Hermitian step");
    validate_mu0(mu0, mode);
    if (!std::isfinite(momentum)) throw DomainError("momentum eigenvalue must be finite");
    if (!(hbar > 0.0)) throw DomainError("hbar must be positive");

    SampledFunction out;
    out.grid.assign(grid.begin(), grid.end());
    out.values.reserve(grid.size());
    const cplx i(0.0, 1.0);
    for (double x : grid) {
        if (x < 0.0) out.values.push_back(std::exp(i * momentum * x / (hbar * (1.0 + mu0))));
        else if (x > 0.0) out.values.push_back(std::exp(i * momentum * x / (hbar * (1.0 - mu0))));
        else out.values.push_back(1.0);
    }
    out.meta = {mode, mu0, std::nullopt, momentum, "momentum eigenfunction"};
    out.validate();
    return out;
}

double raw_sup_norm(double eta, double mu0, Mode mode) {
    const Branches br = raw_branches(eta, mu0, mode);
    double sup = 0.0;
    constexpr int samples = 257;
    for (int j = 0; j < samples; ++j) {
        const double u = static_cast<double>(j) / (samples - 1);  // x + l on the left, l - x on the right
        sup = std::max(sup, std::abs(br.left_amp * std::sin(br.k.kappa_l * u)));
        sup = std::max(sup, std::abs(br.right_amp * std::sin(-br.k.kappa_bar_l * u)));
    }
    return sup;
}

double normalization_constant(double eta, double mu0, Mode mode, const WellConfig& well) {
    well.validate();
    if (raw_sup_norm(eta, mu0, mode) < kNullSupNorm)
        throw DomainError("eigenfunction vanishes identically (trivial root eta = " + std::to_string(eta) + ")");
    const Branches br = raw_branches(eta, mu0, mode);
    const double l = well.half_width;
    const double integral = std::norm(br.left_amp) * sin_squared_integral(br.k.kappa_l, l) +
                            std::norm(br.right_amp) * sin_squared_integral(br.k.kappa_bar_l, l);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw DomainError("eigenfunction has no finite positive norm");
    return 1.0 / std::sqrt(integral);
}

Eigenfunction::Eigenfunction(const EigenState& state, Mode mode, double mu0, const WellConfig& well)
    : state_(state), mode_(mode), mu0_(mu0), l_(well.half_width) {
    well.validate();
    const WaveNumbers k = wave_numbers(state.eta, mu0, mode);
    const double tol = 1e-12 * std::max(1.0, state.eta);
    if (std::abs(k.kappa_l - state.kappa_l) > tol || std::abs(k.kappa_bar_l - state.kappa_bar_l) > tol)
        throw DomainError("eigen state " + std::to_string(state.n) + " was not produced for this (mode, mu0)");
    const double norm = normalization_constant(state.eta, mu0, mode, well);
    if (!(std::abs(state.norm - norm) <= 1e-9 * norm))
        throw DomainError("eigen state " + std::to_string(state.n) + " is not normalized for this well");
    const Branches br = raw_branches(state.eta, mu0, mode);
    k_ = k.kappa_l / l_;
    kbar_ = k.kappa_bar_l / l_;
    left_amp_ = state.norm * br.left_amp;
    right_amp_ = state.norm * br.right_amp;
}

cplx Eigenfunction::left(double x) const { return left_amp_ * std::sin(k_ * (x + l_)); }
cplx Eigenfunction::right(double x) const { return right_amp_ * std::sin(kbar_ * (x - l_)); }
cplx Eigenfunction::left_derivative(double x) const { return left_amp_ * k_ * std::cos(k_ * (x + l_)); }
cplx Eigenfunction::right_derivative(double x) const { return right_amp_ * kbar_ * std::cos(kbar_ * (x - l_)); }

double Eigenfunction::left_occupancy() const {
    return std::norm(left_amp_) * sin_squared_integral(k_ * l_, l_);
}

SampledFunction eigenfunction(const EigenState& state, Mode mode, double mu0, std::span<const double> grid,
                              const WellConfig& well) {
    const Eigenfunction psi(state, mode, mu0, well);
    const double l = well.half_width;
    SampledFunction out;
    out.grid.assign(grid.begin(), grid.end());
    out.values.reserve(grid.size());
    for (double x : grid) {
        if (x < -l * (1.0 + 1e-12) || x > l * (1.0 + 1e-12))
            throw DomainError("sample point " + std::to_string(x) + " lies outside the well");
        out.values.push_back(psi(x));
    }
    out.meta = {mode, mu0, state.n, std::nullopt, "eigenfunction"};
    out.validate();
    return out;
}

SampledFunction probability_density(const EigenState& state, Mode mode, double mu0, std::span<const double> grid,
                                    const WellConfig& well) {
    SampledFunction out = eigenfunction(state, mode, mu0, grid, well);
    for (cplx& v : out.values) v = std::norm(v);
    out.meta.label = mode == Mode::Hermitian ? "probability density" : "pseudo-probability density";
    return out;
}

}  // namespace stepmom

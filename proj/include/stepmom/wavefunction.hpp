#pragma once

#include <span>
#include <stdexcept>

#include "stepmom/core.hpp"

namespace stepmom {

/// Raised when neither closed route for the plane-wave coefficients is usable.
class SingularRepresentationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Plane-wave coefficient ratios B/A, C/A, D/A.
struct CoefficientSet {
    cplx b;
    cplx c;
    cplx d;
};

/// Coefficients at a characteristic root. Uses b = -exp(-2i kl) and the closed
/// expression for c; switches to the continuity equation for c when
/// |cos(kappa_bar l)| < 1e-8.
CoefficientSet coefficients(double eta, double mu0, Mode mode);

/// Momentum eigenfunction: exp(i p x / (hbar (1 + mu0))) for x < 0,
/// 1 at x = 0 and exp(i p x / (hbar (1 - mu0))) for x > 0. Hermitian only.
SampledFunction momentum_eigenfunction(double momentum, double mu0, Mode mode, std::span<const double> grid,
                                       double hbar = 1.0);

/// Normalization constant N from the closed-form integrals of |sin|^2 on each
/// branch. Throws DomainError for a null (trivial-root) function.
double normalization_constant(double eta, double mu0, Mode mode, const WellConfig& well = {});

/// Largest |psi| of the unnormalized two-branch function, sampled on 257 points.
double raw_sup_norm(double eta, double mu0, Mode mode);

/// Closed two-branch eigenfunction
///   N sin(kbar l) sin(k (x + l))     on [-l, 0]
///  -N sin(k l)    sin(kbar (x - l))  on [0, l]
/// States with a node at x = 0 (where both amplitudes vanish) fall back to the
/// shooting form N sin(k (x + l)) / (k l) on the left.
class Eigenfunction {
public:
    Eigenfunction(const EigenState& state, Mode mode, double mu0, const WellConfig& well = {});

    /// Left branch at x <= 0, right branch at x > 0.
    cplx operator()(double x) const { return x <= 0.0 ? left(x) : right(x); }

    cplx left(double x) const;
    cplx right(double x) const;
    cplx left_derivative(double x) const;
    cplx right_derivative(double x) const;

    /// Integral of |psi|^2 over [-l, 0] (closed form).
    double left_occupancy() const;

    double half_width() const { return l_; }
    const EigenState& state() const { return state_; }
    Mode mode() const { return mode_; }
    double mu0() const { return mu0_; }

private:
    EigenState state_;
    Mode mode_;
    double mu0_;
    double l_;
    cplx k_;
    cplx kbar_;
    cplx left_amp_;
    cplx right_amp_;
};

SampledFunction eigenfunction(const EigenState& state, Mode mode, double mu0, std::span<const double> grid,
                              const WellConfig& well = {});

/// |psi|^2 on the grid, labelled "pseudo-probability" in PT mode.
SampledFunction probability_density(const EigenState& state, Mode mode, double mu0, std::span<const double> grid,
                                    const WellConfig& well = {});

}  // namespace stepmom

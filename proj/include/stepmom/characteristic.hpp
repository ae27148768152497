#pragma once

#include <array>

#include "stepmom/core.hpp"

namespace stepmom {

enum class CharacteristicKind { HermitianClosedForm, PTClosedForm, DeterminantForm, TransferMatrixForm };

// Quantization functions. Only their zeros and signs carry meaning; each is
// scaled by a positive factor so values stay O(1) over the scan window.

/// (1-mu0) sin(eta/(1-mu0)) cos(eta/(1+mu0)) + (1+mu0) cos(eta/(1-mu0)) sin(eta/(1+mu0))
double hermitian_char(double eta, double mu0);

/// sin(2 eta) + mu0 sinh(2 eta mu0)
double pt_char(double eta, double mu0);

/// Closed form matching the mode.
double closed_form_char(double eta, double mu0, Mode mode);

using Matrix4c = std::array<std::array<cplx, 4>, 4>;

/// Coefficient matrix of the four matching conditions for (A, B, C, D).
Matrix4c boundary_matrix(const WaveNumbers& k);

/// Determinant by LU with partial pivoting.
cplx determinant(Matrix4c m);

/// Boundary-matching determinant divided by 2i*eta. Real for real eta in both
/// modes; equals hermitian_char/(1-mu0^2) or pt_char.
cplx determinant_char(double eta, double mu0, Mode mode);

/// Shooting value lambda * psi(l) for psi(-l) = 0, psi'(-l) = 1, where in each
/// segment psi'' + (lambda/alpha)^2 psi = 0 and psi, psi' are continuous.
/// `lambda` is sqrt(2mE)/hbar in units of 1/length.
cplx transfer_matrix_char(double lambda, const StepProfile& profile, const WellConfig& well = {});

/// transfer_matrix_char on the two-step profile, parameterised by the mode's eta.
cplx transfer_matrix_char_eta(double eta, double mu0, Mode mode);

}  // namespace stepmom

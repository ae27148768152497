#include "stepmom/characteristic.hpp"

#include <cmath>
#include <utility>

namespace stepmom {

double hermitian_char(double eta, double mu0) {
    validate_mu0(mu0, Mode::Hermitian);
    const double a = eta / (1.0 + mu0);
    const double b = eta / (1.0 - mu0);
    return (1.0 - mu0) * std::sin(b) * std::cos(a) + (1.0 + mu0) * std::cos(b) * std::sin(a);
}

double pt_char(double eta, double mu0) {
    validate_mu0(mu0, Mode::PTSymmetric);
    return std::sin(2.0 * eta) + mu0 * std::sinh(2.0 * eta * mu0);
}

double closed_form_char(double eta, double mu0, Mode mode) {
    return mode == Mode::Hermitian ? hermitian_char(eta, mu0) : pt_char(eta, mu0);
}

Matrix4c boundary_matrix(const WaveNumbers& k) {
    const cplx i(0.0, 1.0);
    const cplx kl = k.kappa_l;
    const cplx kb = k.kappa_bar_l;
    // Rows: psi continuous at 0, psi(-l) = 0, psi(l) = 0, psi' continuous at 0.
    return {{{1.0, 1.0, -1.0, -1.0},
             {std::exp(-i * kl), std::exp(i * kl), 0.0, 0.0},
             {0.0, 0.0, std::exp(i * kb), std::exp(-i * kb)},
             {kl, -kl, -kb, kb}}};
}

cplx determinant(Matrix4c m) {
    cplx det = 1.0;
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < 4; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (m[pivot][col] == cplx(0.0, 0.0)) return 0.0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < 4; ++r) {
            const cplx factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < 4; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

cplx determinant_char(double eta, double mu0, Mode mode) {
    const WaveNumbers k = wave_numbers(eta, mu0, mode);
    return determinant(boundary_matrix(k)) / cplx(0.0, 2.0 * eta);
}

cplx transfer_matrix_char(double lambda, const StepProfile& profile, const WellConfig& well) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive and finite");
    well.validate();
    if (std::abs(profile.right_end() - well.half_width) > 1e-12 * well.half_width)
        throw DomainError("step profile does not span the well [-l, l]");
    cplx psi = 0.0;
    cplx dpsi = 1.0;
    for (const Segment& s : profile.segments()) {
        const cplx k = lambda / s.alpha;
        const double len = s.right - s.left;
        const cplx c = std::cos(k * len);
        const cplx sn = std::sin(k * len);
        const cplx next_psi = c * psi + sn / k * dpsi;
        const cplx next_dpsi = -k * sn * psi + c * dpsi;
        psi = next_psi;
        dpsi = next_dpsi;
    }
    return lambda * psi;
}

cplx transfer_matrix_char_eta(double eta, double mu0, Mode mode) {
    static const WellConfig unit_well{};
    const StepProfile profile = StepProfile::two_step(mode, mu0, unit_well.half_width);
    return transfer_matrix_char(eta * momentum_scale(mu0, mode) / unit_well.half_width, profile, unit_well);
}

}  // namespace stepmom

#include "stepmom/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace stepmom {

std::string_view to_string(Mode mode) {
    return mode == Mode::Hermitian ? "hermitian" : "pt";
}

Mode parse_mode(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "hermitian" || lower == "h") return Mode::Hermitian;
    if (lower == "pt" || lower == "pt-symmetric" || lower == "ptsymmetric") return Mode::PTSymmetric;
    throw DomainError("unknown mode '" + std::string(text) + "' (expected hermitian or pt)");
}

void validate_mu0(double mu0, Mode mode) {
    if (!std::isfinite(mu0) || mu0 < 0.0)
        throw DomainError("mu0 must be finite and non-negative, got " + std::to_string(mu0));
    if (mode == Mode::Hermitian && mu0 >= 1.0)
        throw DomainError("Hermitian step requires mu0 < 1, got " + std::to_string(mu0));
}

StepProfile StepProfile::two_step(Mode mode, double mu0, double half_width) {
    validate_mu0(mu0, mode);
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw DomainError("well half-width must be positive");
    const cplx step = mode == Mode::Hermitian ? cplx(mu0, 0.0) : cplx(0.0, mu0);
    StepProfile p;
    p.segments_ = {{-half_width, 0.0, 1.0 + step}, {0.0, half_width, 1.0 - step}};
    p.mode_ = mode;
    p.mu0_ = mu0;
    return p;
}

StepProfile StepProfile::from_segments(std::vector<Segment> segments) {
    if (segments.empty()) throw DomainError("step profile needs at least one segment");
    const double span = segments.back().right - segments.front().left;
    const double gap_tol = 1e-12 * std::max(1.0, std::abs(span));
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const auto& s = segments[i];
        if (!std::isfinite(s.left) || !std::isfinite(s.right) || !(s.right > s.left))
            throw DomainError("segment " + std::to_string(i) + " has an empty or invalid interval");
        if (s.alpha == cplx(0.0, 0.0))
            throw DomainError("segment " + std::to_string(i) + " has a degenerate factor alpha = 0");
        if (i > 0 && std::abs(s.left - segments[i - 1].right) > gap_tol)
            throw DomainError("segments " + std::to_string(i - 1) + " and " + std::to_string(i) +
                              " leave a gap or overlap");
    }
    const double l = segments.back().right;
    if (std::abs(segments.front().left + l) > gap_tol)
        throw DomainError("segments must partition a symmetric interval [-l, l]");
    StepProfile p;
    p.segments_ = std::move(segments);
    return p;
}

double WellConfig::ground_energy() const {
    validate();
    return kPi * kPi * hbar * hbar / (8.0 * mass * half_width * half_width);
}

void WellConfig::validate() const {
    if (!(half_width > 0.0) || !(hbar > 0.0) || !(mass > 0.0))
        throw DomainError("well half-width, hbar and mass must be positive");
}

void RootConfig::validate() const {
    if (!(eta_min > 0.0)) throw DomainError("eta_min must be positive");
    if (!(eta_min < eta_max)) throw DomainError("eta_min must be below eta_max");
    if (!(grid_step > 0.0)) throw DomainError("grid_step must be positive");
    if (!(refine_tol > 0.0)) throw DomainError("refine_tol must be positive");
    if (max_refine_iters < 1) throw DomainError("max_refine_iters must be at least 1");
}

void SampledFunction::validate() const {
    if (grid.size() != values.size()) throw DomainError("grid and values differ in length");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw DomainError("grid is not strictly increasing");
}

namespace {

void check_eta(double eta) {
    if (!(eta > 0.0) || !std::isfinite(eta))
        throw DomainError("eta must be positive and finite, got " + std::to_string(eta));
}

}  // namespace

double energy_ratio(double eta, double mu0, Mode mode) {
    check_eta(eta);
    validate_mu0(mu0, mode);
    const double base = 2.0 * eta / kPi;
    const double scale = momentum_scale(mu0, mode);
    return base * base * scale * scale;
}

WaveNumbers wave_numbers(double eta, double mu0, Mode mode) {
    check_eta(eta);
    validate_mu0(mu0, mode);
    if (mode == Mode::Hermitian) return {eta / (1.0 + mu0), eta / (1.0 - mu0)};
    return {cplx(eta, -eta * mu0), cplx(eta, eta * mu0)};
}

double momentum_scale(double mu0, Mode mode) {
    return mode == Mode::Hermitian ? 1.0 : 1.0 + mu0 * mu0;
}

std::vector<double> uniform_grid(double a, double b, std::size_t points) {
    if (points < 2) throw DomainError("a grid needs at least two points");
    if (!(b > a)) throw DomainError("grid interval must satisfy a < b");
    std::vector<double> grid(points);
    const double n = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) grid[i] = a + (b - a) * (static_cast<double>(i) / n);
    grid.back() = b;
    return grid;
}

}  // namespace stepmom

#pragma once

#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stepmom {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Raised for arguments outside an operation's domain (eta <= 0, mu0 out of range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Real step (Hermitian) or imaginary step (PT-symmetric) auxiliary function.
enum class Mode { Hermitian, PTSymmetric };

std::string_view to_string(Mode mode);
/// Accepts "hermitian" / "pt" (case-insensitive); throws DomainError otherwise.
Mode parse_mode(std::string_view text);

/// Throws DomainError unless mu0 is finite, >= 0 and (Hermitian) < 1.
void validate_mu0(double mu0, Mode mode);

/// One constant piece of the deformation factor alpha = 1 + mu(x) on [left, right].
struct Segment {
    double left;
    double right;
    cplx alpha;
};

/// Piecewise auxiliary function mu(x) on [-l, l], stored as its segment list.
///
/// The two-step profiles carry their mode and mu0; general profiles built from
/// an explicit segment list have no mode.
class StepProfile {
public:
    static StepProfile two_step(Mode mode, double mu0, double half_width = 1.0);
    static StepProfile from_segments(std::vector<Segment> segments);

    const std::vector<Segment>& segments() const { return segments_; }
    std::optional<Mode> mode() const { return mode_; }
    double mu0() const { return mu0_; }
    double left_end() const { return segments_.front().left; }
    double right_end() const { return segments_.back().right; }

private:
    StepProfile() = default;

    std::vector<Segment> segments_;
    std::optional<Mode> mode_;
    double mu0_ = 0.0;
};

/// Infinite well of half-width l. Defaults to hbar = 2m = 1, l = 1.
struct WellConfig {
    double half_width = 1.0;
    double hbar = 1.0;
    double mass = 0.5;

    /// Ground-state energy of the undeformed well, pi^2 hbar^2 / (8 m l^2).
    double ground_energy() const;
    void validate() const;
};

/// Dimensionless wave numbers kappa*l and kappa_bar*l (kappa_tilde*l in PT mode).
struct WaveNumbers {
    cplx kappa_l;
    cplx kappa_bar_l;
};

struct EigenState {
    int n = 0;
    double eta = 0.0;
    double energy_ratio = 0.0;
    cplx kappa_l;
    cplx kappa_bar_l;
    double norm = 0.0;
};

struct RootConfig {
    double eta_min = 1e-6;
    double eta_max = 8.0 * kPi;
    double grid_step = 1e-3;
    double refine_tol = 1e-12;
    int max_refine_iters = 100;

    void validate() const;
};

struct SampleMeta {
    Mode mode = Mode::Hermitian;
    double mu0 = 0.0;
    std::optional<int> state;
    std::optional<double> momentum;
    std::string label;
};

/// Complex samples on a strictly increasing grid.
struct SampledFunction {
    std::vector<double> grid;
    std::vector<cplx> values;
    SampleMeta meta;

    void validate() const;
};

/// E_n / E_0 for a root eta: (2 eta / pi)^2, times (1 + mu0^2)^2 in PT mode.
double energy_ratio(double eta, double mu0, Mode mode);

WaveNumbers wave_numbers(double eta, double mu0, Mode mode);

/// Ratio lambda*l / eta, where lambda = sqrt(2mE)/hbar. 1 for Hermitian, 1 + mu0^2 for PT.
double momentum_scale(double mu0, Mode mode);

/// Uniform grid of `points` samples on [a, b], both ends included.
std::vector<double> uniform_grid(double a, double b, std::size_t points);

}  // namespace stepmom

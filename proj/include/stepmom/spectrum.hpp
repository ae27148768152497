#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stepmom/core.hpp"

namespace stepmom {

struct Spectrum {
    Mode mode = Mode::Hermitian;
    double mu0 = 0.0;
    int requested = 0;
    std::vector<EigenState> states;
    RootConfig cfg;

    /// Requested states that do not exist with real energy (PT mode only).
    int shortfall() const { return requested - static_cast<int>(states.size()); }
};

/// First `n_states` bound states ordered by eta.
///
/// Hermitian mode (and PT at mu0 = 0) doubles the scan window from cfg.eta_max
/// until enough roots are found. PT mode with mu0 > 0 stops at the cap beyond
/// which mu0 sinh(2 eta mu0) > 1 rules out further real roots, so it may
/// return fewer states than requested.
Spectrum solve_spectrum(Mode mode, double mu0, int n_states, const RootConfig& cfg = {},
                        const WellConfig& well = {});

/// eta above which the PT characteristic function is strictly positive.
double pt_eta_cap(double mu0);

/// Number of real-energy PT bound states (finite for mu0 > 0).
int pt_root_count(double mu0, const RootConfig& cfg = {});

/// Largest mu0 (within search_tol) with at least one real-energy PT state.
double critical_mu0(const RootConfig& cfg = {}, double search_tol = 1e-4);

/// Energy ratios E_n/E_0: rows are n = 1..n_states, columns follow mu0_list.
/// Missing PT states are std::nullopt.
struct EnergyTable {
    Mode mode = Mode::Hermitian;
    std::vector<double> mu0s;
    std::vector<std::vector<std::optional<double>>> rows;
};

EnergyTable table_rows(Mode mode, std::span<const double> mu0_list, int n_states, const RootConfig& cfg = {});

/// Closed-form characteristic function sampled on an eta grid.
SampledFunction characteristic_curve(Mode mode, double mu0, std::span<const double> eta_grid);

}  // namespace stepmom

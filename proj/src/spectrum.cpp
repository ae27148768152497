#include "stepmom/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "stepmom/characteristic.hpp"
#include "stepmom/rootfind.hpp"
#include "stepmom/wavefunction.hpp"

namespace stepmom {

namespace {

constexpr double kNullSupNorm = 1e-12;
constexpr double kMaxHermitianWindow = 1e7;

std::vector<double> real_roots(Mode mode, double mu0, RootConfig cfg) {
    const RealFunction f = [mode, mu0](double eta) { return closed_form_char(eta, mu0, mode); };
    std::vector<double> etas;
    for (const RootRecord& r : find_roots(f, cfg))
        if (raw_sup_norm(r.eta, mu0, mode) >= kNullSupNorm) etas.push_back(r.eta);
    return etas;
}

}  // namespace

double pt_eta_cap(double mu0) {
    validate_mu0(mu0, Mode::PTSymmetric);
    if (mu0 == 0.0) return INFINITY;
    // mu0 sinh(2 eta mu0) = 1 at the cap; nudge past it so the bound is strict.
    return std::asinh(1.0 / mu0) / (2.0 * mu0) * (1.0 + 1e-9) + 1e-9;
}

Spectrum solve_spectrum(Mode mode, double mu0, int n_states, const RootConfig& cfg, const WellConfig& well) {
    validate_mu0(mu0, mode);
    cfg.validate();
    well.validate();
    if (n_states < 1) throw DomainError("at least one state must be requested");

    const double cap = mode == Mode::PTSymmetric ? pt_eta_cap(mu0) : INFINITY;
    RootConfig window = cfg;
    std::vector<double> etas;
    for (;;) {
        window.eta_max = std::min(window.eta_max, std::max(cap, window.eta_min * 2.0));
        etas = real_roots(mode, mu0, window);
        if (static_cast<int>(etas.size()) >= n_states || window.eta_max >= cap) break;
        if (window.eta_max > kMaxHermitianWindow)
            throw DomainError("requested state count needs an unreasonably large eta window");
        window.eta_max *= 2.0;
    }
    if (static_cast<int>(etas.size()) > n_states) etas.resize(static_cast<std::size_t>(n_states));

    Spectrum out;
    out.mode = mode;
    out.mu0 = mu0;
    out.requested = n_states;
    out.cfg = window;
    for (std::size_t i = 0; i < etas.size(); ++i) {
        const WaveNumbers k = wave_numbers(etas[i], mu0, mode);
        out.states.push_back({static_cast<int>(i) + 1, etas[i], energy_ratio(etas[i], mu0, mode), k.kappa_l,
                              k.kappa_bar_l, normalization_constant(etas[i], mu0, mode, well)});
    }
    return out;
}

int pt_root_count(double mu0, const RootConfig& cfg) {
    validate_mu0(mu0, Mode::PTSymmetric);
    if (mu0 == 0.0) throw DomainError("the undeformed well has infinitely many states");
    RootConfig window = cfg;
    window.eta_max = std::max(pt_eta_cap(mu0), window.eta_min * 2.0);
    return static_cast<int>(real_roots(Mode::PTSymmetric, mu0, window).size());
}

double critical_mu0(const RootConfig& cfg, double search_tol) {
    if (!(search_tol > 0.0)) throw DomainError("search tolerance must be positive");
    // sin(2 eta) >= -1 everywhere, and for mu0 >= 1 the sinh term beats it
    // wherever sin(2 eta) < 0, so the threshold lies in (0, 1).
    double lo = 1e-3;
    double hi = 1.0;
    while (pt_root_count(lo, cfg) == 0) lo *= 0.5;
    while (hi - lo > search_tol) {
        const double mid = 0.5 * (lo + hi);
        (pt_root_count(mid, cfg) > 0 ? lo : hi) = mid;
    }
    return lo;
}

EnergyTable table_rows(Mode mode, std::span<const double> mu0_list, int n_states, const RootConfig& cfg) {
    if (n_states < 1) throw DomainError("at least one state must be requested");
    for (double mu0 : mu0_list) validate_mu0(mu0, mode);

    std::vector<std::future<Spectrum>> jobs;
    for (double mu0 : mu0_list)
        jobs.push_back(std::async(std::launch::async, [=] { return solve_spectrum(mode, mu0, n_states, cfg); }));

    EnergyTable table;
    table.mode = mode;
    table.mu0s.assign(mu0_list.begin(), mu0_list.end());
    table.rows.assign(static_cast<std::size_t>(n_states), std::vector<std::optional<double>>(mu0_list.size()));
    for (std::size_t col = 0; col < jobs.size(); ++col) {
        const Spectrum s = jobs[col].get();
        for (const EigenState& st : s.states) table.rows[static_cast<std::size_t>(st.n - 1)][col] = st.energy_ratio;
    }
    return table;
}

SampledFunction characteristic_curve(Mode mode, double mu0, std::span<const double> eta_grid) {
    validate_mu0(mu0, mode);
    SampledFunction out;
    out.grid.assign(eta_grid.begin(), eta_grid.end());
    out.values.reserve(eta_grid.size());
    for (double eta : eta_grid) out.values.emplace_back(closed_form_char(eta, mu0, mode), 0.0);
    out.meta = {mode, mu0, std::nullopt, std::nullopt, "characteristic function"};
    out.validate();
    return out;
}

}  // namespace stepmom

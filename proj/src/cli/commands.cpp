#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stepmom/cli.hpp"
#include "stepmom/spectrum.hpp"
#include "stepmom/wavefunction.hpp"
#include "stepmom/zmap.hpp"

namespace stepmom::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr double kTableTolerance = 2e-3;
constexpr const char* kConfigEnv = "STEPMOM_CONFIG";

struct SolverFlags {
    std::string config;
    std::optional<double> eta_min;
    std::optional<double> scan_max;
    std::optional<double> grid_step;
    std::optional<double> refine_tol;
    std::optional<int> max_iters;
};

struct OutputFlags {
    std::string out;
    std::string format = "csv";
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
    cmd->add_option("--config", f.config, "Solver config file (key = value); falls back to $STEPMOM_CONFIG");
    cmd->add_option("--eta-min", f.eta_min, "Lower end of the root scan");
    cmd->add_option("--scan-max", f.scan_max, "Initial upper end of the root scan");
    cmd->add_option("--grid-step", f.grid_step, "Bracketing grid step in eta");
    cmd->add_option("--refine-tol", f.refine_tol, "Root refinement tolerance in eta");
    cmd->add_option("--max-iters", f.max_iters, "Refinement iteration budget");
}

void add_output_flags(CLI::App* cmd, OutputFlags& f) {
    cmd->add_option("--out", f.out, "Output file (stdout when omitted)");
    cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

RootConfig resolve_root_config(const SolverFlags& f) {
    RootConfig cfg;
    std::string path = f.config;
    if (path.empty())
        if (const char* env = std::getenv(kConfigEnv); env != nullptr) path = env;
    if (!path.empty()) apply_config_file(path, cfg);
    if (f.eta_min) cfg.eta_min = *f.eta_min;
    if (f.scan_max) cfg.eta_max = *f.scan_max;
    if (f.grid_step) cfg.grid_step = *f.grid_step;
    if (f.refine_tol) cfg.refine_tol = *f.refine_tol;
    if (f.max_iters) cfg.max_refine_iters = *f.max_iters;
    try {
        cfg.validate();
    } catch (const DomainError& e) {
        throw UsageError(std::string("solver config: ") + e.what());
    }
    return cfg;
}

Mode mode_arg(const std::string& text) {
    try {
        return parse_mode(text);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

void check_mu0(double mu0, Mode mode) {
    try {
        validate_mu0(mu0, mode);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

json root_config_json(const RootConfig& cfg) {
    return {{"eta_min", cfg.eta_min},
            {"eta_max", cfg.eta_max},
            {"grid_step", cfg.grid_step},
            {"refine_tol", cfg.refine_tol},
            {"max_refine_iters", cfg.max_refine_iters}};
}

json base_manifest(const std::string& command, const RootConfig& cfg) {
    return {{"tool", "stepmom"}, {"version", version()}, {"command", command}, {"root_config", root_config_json(cfg)}};
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
    f << content;
}

// Sidecar manifest carries the only non-deterministic field (timestamp).
void write_sidecar(const fs::path& target, json manifest, const std::vector<std::string>& outputs) {
    manifest["outputs"] = outputs;
    manifest["timestamp"] = utc_timestamp();
    write_file(target.string() + ".manifest.json", manifest.dump(2) + "\n");
}

void emit(const OutputFlags& o, const std::string& csv, const json& data, json manifest, std::ostream& out) {
    std::string content;
    if (o.format == "json") {
        json doc = {{"manifest", manifest}, {"data", data}};
        content = doc.dump(2) + "\n";
    } else {
        content = csv;
    }
    if (o.out.empty()) {
        out << content;
        return;
    }
    write_file(o.out, content);
    write_sidecar(o.out, std::move(manifest), {o.out});
}

std::vector<Spectrum> solve_all(Mode mode, const std::vector<double>& mu0s, int n_states, const RootConfig& cfg) {
    std::vector<std::future<Spectrum>> jobs;
    for (double mu0 : mu0s)
        jobs.push_back(std::async(std::launch::async, [=] { return solve_spectrum(mode, mu0, n_states, cfg); }));
    std::vector<Spectrum> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

std::string density_csv_header() { return "x,re_psi,im_psi,density\n"; }

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
    std::string mode;
    std::vector<double> mu0s;
    int states = 3;
    SolverFlags solver;
    OutputFlags output;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
    const Mode mode = mode_arg(a.mode);
    for (double mu0 : a.mu0s) check_mu0(mu0, mode);
    if (a.states < 1) throw UsageError("--states must be at least 1");
    const RootConfig cfg = resolve_root_config(a.solver);

    const std::vector<Spectrum> spectra = solve_all(mode, a.mu0s, a.states, cfg);

    std::string csv = "mode,mu0,n,eta,energy_ratio\n";
    json table = json::array();
    json etas = json::array();
    for (int n = 1; n <= a.states; ++n) {
        json row = json::array();
        json eta_row = json::array();
        for (const Spectrum& s : spectra) {
            const auto i = static_cast<std::size_t>(n - 1);
            csv += std::string(to_string(mode)) + "," + csv_number(s.mu0) + "," + std::to_string(n) + ",";
            if (i < s.states.size()) {
                csv += csv_number(s.states[i].eta) + "," + csv_number(s.states[i].energy_ratio) + "\n";
                row.push_back(s.states[i].energy_ratio);
                eta_row.push_back(s.states[i].eta);
            } else {
                csv += "-,-\n";
                row.push_back(nullptr);
                eta_row.push_back(nullptr);
            }
        }
        table.push_back(row);
        etas.push_back(eta_row);
    }
    json data = {{"mode", to_string(mode)},
                 {"mu0", a.mu0s},
                 {"states", a.states},
                 {"energy_ratio", table},
                 {"eta", etas}};
    json manifest = base_manifest("spectrum", cfg);
    manifest["mode"] = to_string(mode);
    manifest["mu0"] = a.mu0s;
    manifest["states"] = a.states;
    emit(a.output, csv, data, manifest, out);
    return kSuccess;
}

// ----------------------------------------------------------------- density

struct DensityArgs {
    std::string mode;
    double mu0 = 0.0;
    int state = 1;
    int grid = 2001;
    SolverFlags solver;
    OutputFlags output;
};

int cmd_density(const DensityArgs& a, std::ostream& out, std::ostream& err) {
    const Mode mode = mode_arg(a.mode);
    check_mu0(a.mu0, mode);
    if (a.state < 1) throw UsageError("--state must be at least 1");
    if (a.grid < 3) throw UsageError("--grid needs at least 3 points");
    const RootConfig cfg = resolve_root_config(a.solver);

    const Spectrum s = solve_spectrum(mode, a.mu0, a.state, cfg);
    if (static_cast<int>(s.states.size()) < a.state) {
        err << "error: state " << a.state << " has no real energy at mu0=" << csv_number(a.mu0) << "; only "
            << s.states.size() << " real-energy state(s) exist\n";
        return kFailure;
    }
    const EigenState& st = s.states.back();
    const std::vector<double> grid = uniform_grid(-1.0, 1.0, static_cast<std::size_t>(a.grid));
    const SampledFunction psi = eigenfunction(st, mode, a.mu0, grid);

    std::string csv = density_csv_header();
    json xs = json::array(), re = json::array(), im = json::array(), dens = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const cplx v = psi.values[i];
        const double d = std::norm(v);
        csv += csv_number(grid[i]) + "," + csv_number(v.real()) + "," + csv_number(v.imag()) + "," + csv_number(d) +
               "\n";
        xs.push_back(grid[i]);
        re.push_back(v.real());
        im.push_back(v.imag());
        dens.push_back(d);
    }
    const std::string label = mode == Mode::Hermitian ? "probability density" : "pseudo-probability density";
    json data = {{"mode", to_string(mode)}, {"mu0", a.mu0},     {"state", a.state},  {"eta", st.eta},
                 {"energy_ratio", st.energy_ratio}, {"label", label}, {"x", xs}, {"re_psi", re},
                 {"im_psi", im},    {"density", dens}};
    json manifest = base_manifest("density", cfg);
    manifest["mode"] = to_string(mode);
    manifest["mu0"] = {a.mu0};
    manifest["state"] = a.state;
    manifest["grid"] = {{"points", a.grid}, {"x_min", -1.0}, {"x_max", 1.0}};
    emit(a.output, csv, data, manifest, out);
    return kSuccess;
}

// ------------------------------------------------------------------- curve

struct CurveArgs {
    std::string mode;
    std::vector<double> mu0s;
    double eta_max = 3.0 * kPi;
    int points = 2001;
    OutputFlags output;
};

std::string curve_csv(Mode mode, const std::vector<double>& mu0s, double eta_max, int points, json* data) {
    const std::vector<double> grid = uniform_grid(0.0, eta_max, static_cast<std::size_t>(points));
    std::string csv = "mu0,eta,value\n";
    json curves = json::array();
    for (double mu0 : mu0s) {
        const SampledFunction c = characteristic_curve(mode, mu0, grid);
        json values = json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            csv += csv_number(mu0) + "," + csv_number(grid[i]) + "," + csv_number(c.values[i].real()) + "\n";
            values.push_back(c.values[i].real());
        }
        if (data != nullptr) curves.push_back({{"mu0", mu0}, {"value", values}});
    }
    if (data != nullptr) *data = {{"mode", to_string(mode)}, {"eta", grid}, {"curves", curves}};
    return csv;
}

int cmd_curve(const CurveArgs& a, std::ostream& out) {
    const Mode mode = mode_arg(a.mode);
    for (double mu0 : a.mu0s) check_mu0(mu0, mode);
    if (!(a.eta_max > 0.0) || !std::isfinite(a.eta_max)) throw UsageError("--eta-max must be positive");
    if (a.points < 2) throw UsageError("--points must be at least 2");

    json data;
    const std::string csv = curve_csv(mode, a.mu0s, a.eta_max, a.points, &data);
    json manifest = base_manifest("curve", RootConfig{});
    manifest.erase("root_config");
    manifest["mode"] = to_string(mode);
    manifest["mu0"] = a.mu0s;
    manifest["grid"] = {{"points", a.points}, {"eta_min", 0.0}, {"eta_max", a.eta_max}};
    emit(a.output, csv, data, manifest, out);
    return kSuccess;
}

// ---------------------------------------------------------------- critical

struct CriticalArgs {
    double tol = 1e-4;
    SolverFlags solver;
};

int cmd_critical(const CriticalArgs& a, std::ostream& out) {
    if (!(a.tol > 0.0) || !(a.tol < 0.1)) throw UsageError("--tol must lie in (0, 0.1)");
    const RootConfig cfg = resolve_root_config(a.solver);
    out << csv_number(critical_mu0(cfg, a.tol)) << "\n";
    return kSuccess;
}

// --------------------------------------------------------------- reproduce

struct ReproduceArgs {
    std::string target = "all";
    std::string out_dir = "stepmom-reproduction";
    SolverFlags solver;
};

const std::vector<double> kTableMu0s = {0.0, 0.1, 0.2, 0.3};
const std::vector<double> kFigureCurveMu0s = {0.0, 0.1, 0.2, 0.3, 0.4};

// Returns true when every entry is within tolerance (or absent on both sides).
bool table_report(Mode mode, const std::string& name, const RootConfig& cfg, const fs::path& dir,
                  std::vector<std::string>& files, std::ostream& out) {
    const std::vector<Spectrum> spectra = solve_all(mode, kTableMu0s, 3, cfg);
    auto computed = [&](int n, double mu0) -> std::optional<double> {
        for (const Spectrum& s : spectra)
            if (s.mu0 == mu0 && static_cast<int>(s.states.size()) >= n)
                return s.states[static_cast<std::size_t>(n - 1)].energy_ratio;
        return std::nullopt;
    };

    std::string csv = "mode,n,mu0,published,computed,abs_dev,status,computed_pi314,abs_dev_pi314\n";
    int entries = 0, passed = 0;
    double worst = 0.0, worst_truncated = 0.0;
    for (const ReferenceEntry& e : reference_entries()) {
        if (e.mode != mode) continue;
        ++entries;
        const std::optional<double> c = computed(e.n, e.mu0);
        std::string published = e.value ? csv_number(*e.value) : "-";
        std::string line = name + " n=" + std::to_string(e.n) + " mu0=" + csv_number(e.mu0) + " published=" + published;
        bool ok;
        std::string row = std::string(to_string(mode)) + "," + std::to_string(e.n) + "," + csv_number(e.mu0) + "," +
                          published + ",";
        if (e.value && c) {
            const double dev = std::abs(*c - *e.value);
            const double truncated = *c * truncated_pi_factor();
            const double dev_truncated = std::abs(truncated - *e.value);
            ok = dev <= kTableTolerance;
            worst = std::max(worst, dev);
            if (e.mu0 > 0.0) worst_truncated = std::max(worst_truncated, dev_truncated);
            row += csv_number(*c) + "," + csv_number(dev) + "," + (ok ? "pass" : "fail") + "," + csv_number(truncated) +
                   "," + csv_number(dev_truncated) + "\n";
            char buf[64];
            std::snprintf(buf, sizeof buf, " dev=%.3e", dev);
            line += " computed=" + csv_number(*c) + buf;
        } else {
            ok = !e.value && !c;
            row += (c ? csv_number(*c) : std::string("-")) + ",-," + (ok ? "pass" : "fail") + ",-,-\n";
            line += " computed=" + (c ? csv_number(*c) : std::string("-")) + (ok ? " (absent as published)" : "");
        }
        passed += ok ? 1 : 0;
        csv += row;
        out << line << (ok ? " PASS" : " FAIL") << "\n";
    }
    const std::string file = name + "_report.csv";
    write_file(dir / file, csv);
    files.push_back(file);
    char summary[200];
    std::snprintf(summary, sizeof summary,
                  "%s: %d/%d entries within %.0e (max deviation %.3e; mu0 > 0 with E0 at pi=3.14: %.3e)\n", name.c_str(),
                  passed, entries, kTableTolerance, worst, worst_truncated);
    out << summary;
    return passed == entries;
}

void density_dataset(Mode mode, const std::string& file, const RootConfig& cfg, const fs::path& dir,
                     std::vector<std::string>& files) {
    const std::vector<double> grid = uniform_grid(-1.0, 1.0, 2001);
    std::string csv = "mu0,n,x,density\n";
    for (const Spectrum& s : solve_all(mode, kTableMu0s, 3, cfg)) {
        for (const EigenState& st : s.states) {
            const SampledFunction d = probability_density(st, mode, s.mu0, grid);
            for (std::size_t i = 0; i < grid.size(); ++i)
                csv += csv_number(s.mu0) + "," + std::to_string(st.n) + "," + csv_number(grid[i]) + "," +
                       csv_number(d.values[i].real()) + "\n";
        }
    }
    write_file(dir / file, csv);
    files.push_back(file);
}

int cmd_reproduce(const ReproduceArgs& a, std::ostream& out) {
    const RootConfig cfg = resolve_root_config(a.solver);
    auto wanted = [&](const std::string& t) { return a.target == "all" || a.target == t; };

    const fs::path dir = a.out_dir;
    fs::create_directories(dir);
    std::vector<std::string> files;
    bool ok = true;
    if (wanted("tab1")) ok = table_report(Mode::Hermitian, "tab1", cfg, dir, files, out) && ok;
    if (wanted("tab2")) ok = table_report(Mode::PTSymmetric, "tab2", cfg, dir, files, out) && ok;
    if (wanted("fig1")) {
        write_file(dir / "fig1_curves.csv", curve_csv(Mode::Hermitian, kFigureCurveMu0s, 3.0 * kPi, 2001, nullptr));
        files.push_back("fig1_curves.csv");
    }
    if (wanted("fig2")) density_dataset(Mode::Hermitian, "fig2_density.csv", cfg, dir, files);
    if (wanted("fig3")) {
        write_file(dir / "fig3_curves.csv", curve_csv(Mode::PTSymmetric, kFigureCurveMu0s, 4.0 * kPi, 4001, nullptr));
        files.push_back("fig3_curves.csv");
    }
    if (wanted("fig4")) density_dataset(Mode::PTSymmetric, "fig4_density.csv", cfg, dir, files);

    json manifest = base_manifest("reproduce", cfg);
    manifest["target"] = a.target;
    manifest["table_tolerance"] = kTableTolerance;
    write_sidecar(dir / "reproduce", std::move(manifest), files);
    for (const std::string& f : files) out << "wrote " << (dir / f).string() << "\n";
    return ok ? kSuccess : kFailure;
}

// ------------------------------------------------------------------ znojil

struct ZnojilArgs {
    std::optional<double> ez, z, mu0, emu;
};

void print_params(const ZnojilParams& p, std::ostream& out) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "E_z=%.17g\nZ=%.17g\nmu0=%.17g\nE_mu=%.17g\n", p.E_z, p.Z, p.mu0, p.E_mu);
    out << buf;
}

int cmd_znojil(const ZnojilArgs& a, std::ostream& out) {
    const bool from_z = a.ez || a.z;
    const bool from_mu = a.mu0 || a.emu;
    if (from_z == from_mu) throw UsageError("give either --ez and --z, or --mu0 and --emu");
    try {
        if (from_z) {
            if (!a.ez || !a.z) throw UsageError("--ez and --z must be given together");
            print_params(step_from_znojil(*a.ez, *a.z), out);
        } else {
            if (!a.mu0 || !a.emu) throw UsageError("--mu0 and --emu must be given together");
            print_params(znojil_from_mu0(*a.mu0, *a.emu), out);
        }
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bound states of a particle with a step momentum operator in an infinite well", "stepmom"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);

    SpectrumArgs spectrum;
    auto* c_spectrum = app.add_subcommand("spectrum", "Tabulate E_n/E_0 for one or more mu0 values");
    c_spectrum->add_option("--mode", spectrum.mode, "hermitian or pt")->required();
    c_spectrum->add_option("--mu0", spectrum.mu0s, "Comma-separated step heights")->required()->delimiter(',');
    c_spectrum->add_option("--states", spectrum.states, "Number of states per mu0");
    add_solver_flags(c_spectrum, spectrum.solver);
    add_output_flags(c_spectrum, spectrum.output);

    DensityArgs density;
    auto* c_density = app.add_subcommand("density", "Sample psi and |psi|^2 of one bound state");
    c_density->add_option("--mode", density.mode, "hermitian or pt")->required();
    c_density->add_option("--mu0", density.mu0, "Step height")->required();
    c_density->add_option("--state", density.state, "State index n (1-based)");
    c_density->add_option("--grid", density.grid, "Number of grid points on [-l, l]");
    add_solver_flags(c_density, density.solver);
    add_output_flags(c_density, density.output);

    CurveArgs curve;
    auto* c_curve = app.add_subcommand("curve", "Sample the characteristic function over eta");
    c_curve->add_option("--mode", curve.mode, "hermitian or pt")->required();
    c_curve->add_option("--mu0", curve.mu0s, "Comma-separated step heights")->required()->delimiter(',');
    c_curve->add_option("--eta-max", curve.eta_max, "Upper end of the eta grid");
    c_curve->add_option("--points", curve.points, "Number of eta samples");
    add_output_flags(c_curve, curve.output);

    CriticalArgs critical;
    auto* c_critical = app.add_subcommand("critical", "Largest mu0 with a real-energy PT bound state");
    c_critical->add_option("--tol", critical.tol, "Bisection tolerance in mu0");
    add_solver_flags(c_critical, critical.solver);

    ReproduceArgs reproduce;
    auto* c_reproduce = app.add_subcommand("reproduce", "Regenerate the published tables and figure data");
    c_reproduce->add_option("--target", reproduce.target, "tab1|tab2|fig1|fig2|fig3|fig4|all")
        ->check(CLI::IsMember({"tab1", "tab2", "fig1", "fig2", "fig3", "fig4", "all"}));
    c_reproduce->add_option("--out-dir", reproduce.out_dir, "Directory for datasets and reports");
    add_solver_flags(c_reproduce, reproduce.solver);

    ZnojilArgs znojil;
    auto* c_znojil = app.add_subcommand("znojil", "Map between (E_z, Z) and (mu0, E_mu)");
    c_znojil->add_option("--ez", znojil.ez, "Energy of the non-Hermitian square well");
    c_znojil->add_option("--z", znojil.z, "Non-Hermiticity Z");
    c_znojil->add_option("--mu0", znojil.mu0, "Step height");
    c_znojil->add_option("--emu", znojil.emu, "Energy of the step-momentum well");

    std::vector<std::string> argv_store = args.empty() ? std::vector<std::string>{"stepmom"} : args;
    std::vector<char*> argv;
    for (std::string& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (c_spectrum->parsed()) return cmd_spectrum(spectrum, out);
        if (c_density->parsed()) return cmd_density(density, out, err);
        if (c_curve->parsed()) return cmd_curve(curve, out);
        if (c_critical->parsed()) return cmd_critical(critical, out);
        if (c_reproduce->parsed()) return cmd_reproduce(reproduce, out);
        if (c_znojil->parsed()) return cmd_znojil(znojil, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

}  // namespace stepmom::cli

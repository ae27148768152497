#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "reference_tables.hpp"
#include "stepmom/cli.hpp"

namespace stepmom::cli {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& text, const std::string& where) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError(where + ": '" + text + "' is not a number");
    }
    if (used != text.size() || !std::isfinite(v)) throw UsageError(where + ": '" + text + "' is not a finite number");
    return v;
}

}  // namespace

void apply_config_file(const std::string& path, RootConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = path + ":" + std::to_string(lineno);
        if (eq == std::string::npos) throw UsageError(where + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const double value = parse_number(trim(line.substr(eq + 1)), where);
        if (key == "eta_min") cfg.eta_min = value;
        else if (key == "eta_max") cfg.eta_max = value;
        else if (key == "grid_step") cfg.grid_step = value;
        else if (key == "refine_tol") cfg.refine_tol = value;
        else if (key == "max_refine_iters") {
            if (value != std::floor(value) || value < 1 || value > 1e6)
                throw UsageError(where + ": max_refine_iters must be a positive integer");
            cfg.max_refine_iters = static_cast<int>(value);
        } else {
            throw UsageError(where + ": unknown key '" + key + "'");
        }
    }
}

std::string csv_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

const std::vector<ReferenceEntry>& reference_entries() {
    static const std::vector<ReferenceEntry> entries = [] {
        std::vector<ReferenceEntry> out;
        std::istringstream in(generated::kReferenceTablesCsv);
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (line.empty() || line.front() == '#') continue;
            std::istringstream row(line);
            std::string mode, n, mu0, value;
            std::getline(row, mode, ',');
            std::getline(row, n, ',');
            std::getline(row, mu0, ',');
            std::getline(row, value, ',');
            ReferenceEntry e{parse_mode(mode), std::stoi(n), std::stod(mu0), std::nullopt};
            if (value != "-") e.value = std::stod(value);
            out.push_back(e);
        }
        return out;
    }();
    return entries;
}

double truncated_pi_factor() {
    const double r = kPi / 3.14;
    return r * r;
}

std::string version() { return STEPMOM_VERSION; }

}  // namespace stepmom::cli

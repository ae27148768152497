#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stepmom/core.hpp"

namespace stepmom::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Bad flags, bad config files and out-of-domain inputs; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs one invocation; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Applies "key = value" lines from a config file onto cfg.
/// Keys: eta_min, eta_max, grid_step, refine_tol, max_refine_iters.
void apply_config_file(const std::string& path, RootConfig& cfg);

/// Number with 12 significant digits, as written to CSV files.
std::string csv_number(double value);

/// One published table entry; value is empty where no real state exists.
struct ReferenceEntry {
    Mode mode;
    int n;
    double mu0;
    std::optional<double> value;
};

/// Published values of both energy tables, embedded at build time.
const std::vector<ReferenceEntry>& reference_entries();

/// Reference scale factor (pi / 3.14)^2 that reproduces the published rounding.
double truncated_pi_factor();

std::string version();

}  // namespace stepmom::cli

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "stepmom/core.hpp"

namespace stepmom {

using RealFunction = std::function<double(double)>;

struct Bracket {
    double lo;
    double hi;
};

struct RootRecord {
    double eta;
    Bracket bracket;
    double residual;
    int iterations;
};

/// Thrown when refinement exhausts its iteration budget.
class RefineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sign-change brackets of f on [eta_min, eta_max], in increasing order.
///
/// Grid points where f is exactly zero come back as degenerate brackets [a, a],
/// as does an upper window end with |f| <= 1e-12 * max|f|.
/// A grid-local minimum of |f| below 1e-8 * max|f| without a sign change is
/// rescanned at grid_step / 100, which catches nearly tangent root pairs.
std::vector<Bracket> scan_brackets(const RealFunction& f, const RootConfig& cfg);

/// Brent refinement (inverse quadratic / secant steps with bisection fallback).
RootRecord refine(const RealFunction& f, Bracket bracket, const RootConfig& cfg);

/// scan_brackets + refine; roots strictly increasing, duplicates within 10*refine_tol merged.
std::vector<RootRecord> find_roots(const RealFunction& f, const RootConfig& cfg);

}  // namespace stepmom

#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "stepmom/core.hpp"

namespace stepmom {

/// Composite Simpson rule on [a, b]; `intervals` is rounded up to an even count.
double simpson(const std::function<double(double)>& f, double a, double b, std::size_t intervals);

/// Composite Simpson rule over uniformly spaced samples (odd count, spacing h).
cplx simpson(std::span<const cplx> samples, double h);

/// Trapezoid rule over an arbitrary increasing grid.
double trapezoid(std::span<const double> grid, std::span<const double> values);

/// Plain overlap integral of conj(a) * b by composite Simpson; both must share a uniform grid.
cplx overlap(const SampledFunction& a, const SampledFunction& b);

}  // namespace stepmom

#include "stepmom/quadrature.hpp"

#include <cmath>
#include <vector>

namespace stepmom {

double simpson(const std::function<double(double)>& f, double a, double b, std::size_t intervals) {
    if (intervals < 2) intervals = 2;
    if (intervals % 2 != 0) ++intervals;
    const double h = (b - a) / static_cast<double>(intervals);
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t i = 1; i < intervals; ++i) {
        const double x = a + h * static_cast<double>(i);
        (i % 2 ? odd : even) += f(x);
    }
    return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

cplx simpson(std::span<const cplx> samples, double h) {
    if (samples.size() < 3 || samples.size() % 2 == 0)
        throw DomainError("Simpson rule needs an odd number (>= 3) of samples");
    cplx sum = samples.front() + samples.back();
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) sum += (i % 2 ? 4.0 : 2.0) * samples[i];
    return sum * (h / 3.0);
}

double trapezoid(std::span<const double> grid, std::span<const double> values) {
    if (grid.size() != values.size()) throw DomainError("trapezoid: grid and values differ in length");
    double sum = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) sum += 0.5 * (grid[i] - grid[i - 1]) * (values[i] + values[i - 1]);
    return sum;
}

cplx overlap(const SampledFunction& a, const SampledFunction& b) {
    a.validate();
    b.validate();
    if (a.grid != b.grid) throw DomainError("overlap: functions are sampled on different grids");
    const std::size_t n = a.grid.size();
    const double h = (a.grid.back() - a.grid.front()) / static_cast<double>(n - 1);
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(a.grid[i] - a.grid[i - 1] - h) > 1e-9 * std::abs(h))
            throw DomainError("overlap: grid is not uniform");
    std::vector<cplx> product(n);
    for (std::size_t i = 0; i < n; ++i) product[i] = std::conj(a.values[i]) * b.values[i];
    return simpson(product, h);
}

}  // namespace stepmom

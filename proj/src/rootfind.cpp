#include "stepmom/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace stepmom {

namespace {

constexpr double kTangencyThreshold = 1e-8;
constexpr int kLocalRefineFactor = 100;
constexpr double kEndpointZero = 1e-12;

std::vector<double> scan_grid(double a, double b, double step) {
    const auto intervals = static_cast<std::size_t>(std::ceil((b - a) / step - 1e-9));
    std::vector<double> xs(std::max<std::size_t>(intervals, 1) + 1);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) xs[i] = a + step * static_cast<double>(i);
    xs.back() = b;
    return xs;
}

bool opposite(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

// Sign changes and exact zeros of sampled values, appended to `out`.
void collect(const std::vector<double>& xs, const std::vector<double>& ys, std::vector<Bracket>& out) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (ys[i] == 0.0) {
            out.push_back({xs[i], xs[i]});
            continue;
        }
        if (i + 1 < xs.size() && opposite(ys[i], ys[i + 1])) out.push_back({xs[i], xs[i + 1]});
    }
}

}  // namespace

std::vector<Bracket> scan_brackets(const RealFunction& f, const RootConfig& cfg) {
    cfg.validate();
    const std::vector<double> xs = scan_grid(cfg.eta_min, cfg.eta_max, cfg.grid_step);
    std::vector<double> ys(xs.size());
    double scale = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        ys[i] = f(xs[i]);
        if (std::isfinite(ys[i])) scale = std::max(scale, std::abs(ys[i]));
    }
    if (scale == 0.0) scale = 1.0;

    std::vector<Bracket> out;
    collect(xs, ys, out);

    // A root exactly on the upper end shows no sign change from inside. The lower
    // end is left alone: it sits next to the trivial eta = 0 zero.
    const std::size_t last = xs.size() - 1;
    if (ys[last] != 0.0 && std::abs(ys[last]) <= kEndpointZero * scale && !opposite(ys[last], ys[last - 1]))
        out.push_back({xs[last], xs[last]});

    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        const double y = ys[i];
        if (y == 0.0 || opposite(ys[i - 1], y) || opposite(y, ys[i + 1])) continue;
        if (std::abs(y) > std::abs(ys[i - 1]) || std::abs(y) > std::abs(ys[i + 1])) continue;
        if (std::abs(y) >= kTangencyThreshold * scale) continue;
        const std::vector<double> fine = scan_grid(xs[i - 1], xs[i + 1], cfg.grid_step / kLocalRefineFactor);
        std::vector<double> fy(fine.size());
        for (std::size_t j = 0; j < fine.size(); ++j) fy[j] = f(fine[j]);
        std::vector<Bracket> local;
        collect(fine, fy, local);
        for (const Bracket& b : local)
            if (b.lo != xs[i - 1] && b.hi != xs[i + 1]) out.push_back(b);
    }

    std::sort(out.begin(), out.end(), [](const Bracket& a, const Bracket& b) { return a.lo < b.lo; });
    return out;
}

RootRecord refine(const RealFunction& f, Bracket bracket, const RootConfig& cfg) {
    cfg.validate();
    if (bracket.lo == bracket.hi) return {bracket.lo, bracket, std::abs(f(bracket.lo)), 0};

    double a = bracket.lo;
    double b = bracket.hi;
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return {a, bracket, 0.0, 0};
    if (fb == 0.0) return {b, bracket, 0.0, 0};
    if (!opposite(fa, fb))
        throw DomainError("bracket [" + std::to_string(a) + ", " + std::to_string(b) + "] has no sign change");

    constexpr double eps = std::numeric_limits<double>::epsilon();
    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;
    for (int iter = 1; iter <= cfg.max_refine_iters; ++iter) {
        if (opposite(fb, fc) == false) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol = 2.0 * eps * std::abs(b) + 0.5 * cfg.refine_tol;
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0) return {b, bracket, std::abs(fb), iter};

        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double p;
            double q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            else p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
    }
    throw RefineError("root refinement did not converge within " + std::to_string(cfg.max_refine_iters) +
                      " iterations on [" + std::to_string(bracket.lo) + ", " + std::to_string(bracket.hi) + "]");
}

std::vector<RootRecord> find_roots(const RealFunction& f, const RootConfig& cfg) {
    std::vector<RootRecord> roots;
    for (const Bracket& b : scan_brackets(f, cfg)) {
        RootRecord r = refine(f, b, cfg);
        if (!roots.empty() && r.eta - roots.back().eta <= 10.0 * cfg.refine_tol) {
            if (r.residual < roots.back().residual) roots.back() = r;
            continue;
        }
        roots.push_back(r);
    }
    return roots;
}

}  // namespace stepmom

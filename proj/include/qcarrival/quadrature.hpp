#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "qcarrival/errors.hpp"

namespace qcarrival {

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n < 2)
        throw domain_error("linspace needs at least 2 points");
    std::vector<double> x(n);
    const double dx = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = lo + dx * static_cast<double>(i);
    x.back() = hi;
    return x;
}

// n points distributed uniformly in log scale on [lo, hi]; lo, hi > 0.
inline std::vector<double> logspace(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > 0.0))
        throw domain_error("logspace endpoints must be positive");
    if (n < 2)
        throw domain_error("logspace needs at least 2 points");
    std::vector<double> x(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    const double dl = (lhi - llo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = std::exp(llo + dl * static_cast<double>(i));
    x.front() = lo;
    x.back() = hi;
    return x;
}

struct GaussLegendreRule {
    std::vector<double> x; // nodes on (-1, 1)
    std::vector<double> w;
};

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
// found by Newton iteration on the Legendre recurrence.
inline GaussLegendreRule gauss_legendre(std::size_t n) {
    if (n == 0)
        throw domain_error("gauss_legendre needs at least 1 node");
    GaussLegendreRule rule;
    rule.x.assign(n, 0.0);
    rule.w.assign(n, 0.0);
    const std::size_t m = (n + 1) / 2;
    const double nd = static_cast<double>(n);
    for (std::size_t i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (static_cast<double>(i) + 0.75) / (nd + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double jd = static_cast<double>(j);
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * jd + 1.0) * z * p1 - jd * p2) / (jd + 1.0);
            }
            pp = nd * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15)
                break;
        }
        rule.x[i] = -z;
        rule.x[n - 1 - i] = z;
        rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.w[n - 1 - i] = rule.w[i];
    }
    return rule;
}

// Composite Gauss-Legendre rule: `panels` equal subdivisions of [a, b],
// each carrying `nodes_per_panel` nodes. Nodes are strictly inside [a, b].
struct PanelRule {
    std::vector<double> x;
    std::vector<double> w;
};

inline PanelRule panel_rule(double a, double b, std::size_t panels, std::size_t nodes_per_panel) {
    if (!(b > a))
        throw domain_error("panel_rule needs b > a");
    if (panels == 0)
        throw domain_error("panel_rule needs at least 1 panel");
    const GaussLegendreRule base = gauss_legendre(nodes_per_panel);
    PanelRule rule;
    rule.x.reserve(panels * nodes_per_panel);
    rule.w.reserve(panels * nodes_per_panel);
    const double width = (b - a) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = a + width * static_cast<double>(p);
        const double mid = lo + 0.5 * width;
        const double half = 0.5 * width;
        for (std::size_t i = 0; i < nodes_per_panel; ++i) {
            rule.x.push_back(mid + half * base.x[i]);
            rule.w.push_back(half * base.w[i]);
        }
    }
    return rule;
}

// Integral of uniformly sampled values with spacing dx. Composite Simpson;
// when the interval count is odd, the first three intervals are handled by
// the Simpson 3/8 rule. A single interval falls back to the trapezoid.
inline double simpson_uniform(const std::vector<double>& f, double dx) {
    const std::size_t n = f.size();
    if (n < 2)
        throw domain_error("simpson_uniform needs at least 2 samples");
    if (!(dx > 0.0))
        throw domain_error("simpson_uniform needs positive spacing");
    const std::size_t intervals = n - 1;
    if (intervals == 1)
        return 0.5 * dx * (f[0] + f[1]);

    double total = 0.0;
    std::size_t start = 0;
    if (intervals % 2 == 1) {
        if (intervals == 3)
            return 3.0 * dx / 8.0 * (f[0] + 3.0 * f[1] + 3.0 * f[2] + f[3]);
        total += 3.0 * dx / 8.0 * (f[0] + 3.0 * f[1] + 3.0 * f[2] + f[3]);
        start = 3;
    }
    double odd = 0.0, even = 0.0;
    for (std::size_t i = start + 1; i < n - 1; i += 2)
        odd += f[i];
    for (std::size_t i = start + 2; i < n - 1; i += 2)
        even += f[i];
    total += dx / 3.0 * (f[start] + 4.0 * odd + 2.0 * even + f[n - 1]);
    return total;
}

} // namespace qcarrival

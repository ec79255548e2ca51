#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qcarrival/errors.hpp"
#include "qcarrival/units.hpp"

// Rectangular barrier V(x) = V0 on [0, a]: monochromatic transmission
// amplitude and a tabulated, branch-tracked transmission phase.

namespace qcarrival {

struct Barrier {
    double V0 = 0.0; // eV
    double a = 0.0;  // angstrom
};

namespace detail {

inline void check_barrier(const Barrier& b) {
    if (!(b.V0 >= 0.0))
        throw domain_error("barrier height must be non-negative, got " + std::to_string(b.V0));
    if (!(b.a >= 0.0))
        throw domain_error("barrier width must be non-negative, got " + std::to_string(b.a));
}

// sin(z)/z, with the series for small |z| where the quotient loses digits.
inline std::complex<double> sinc(std::complex<double> z) {
    if (std::abs(z) < 1e-4) {
        const std::complex<double> z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

} // namespace detail

// Transmission amplitude T(k) for a plane wave of wavenumber k > 0, written
// as e^{-ika} / [cos(qa) - i (k^2+q^2) a sinc(qa) / (2k)] with
// q^2 = k^2 - 2 m V0 / hbar^2. The form is even in q, so it covers both
// propagating and evanescent barrier interiors without a branch switch, and
// it stays finite through q -> 0.
inline std::complex<double> transmission_amplitude(const Barrier& barrier, double mass_mev_c2,
                                                   double k) {
    detail::check_barrier(barrier);
    if (!(mass_mev_c2 > 0.0))
        throw domain_error("mass must be positive, got " + std::to_string(mass_mev_c2));
    if (!(k > 0.0))
        throw domain_error("transmission amplitude needs k > 0, got " + std::to_string(k));
    if (barrier.V0 == 0.0 || barrier.a == 0.0)
        return {1.0, 0.0};

    const double kv2 = 2.0 * mass_mev_c2 * mev * barrier.V0 / (hbar_c * hbar_c);
    const std::complex<double> q2(k * k - kv2, 0.0);
    const std::complex<double> q = std::sqrt(q2);
    const std::complex<double> z = q * barrier.a;

    const std::complex<double> denom =
        std::cos(z) - std::complex<double>(0.0, 1.0) * (k * k + q2)
                          * (barrier.a * detail::sinc(z) / (2.0 * k));
    // An opaque barrier overflows cosh; transmission is then below double
    // precision anyway.
    if (!std::isfinite(std::abs(denom)))
        return {0.0, 0.0};
    return std::exp(std::complex<double>(0.0, -k * barrier.a)) / denom;
}

// Transmission phase eta(k) = arg T(k) sampled on a uniform k grid, with 2*pi
// jumps unwrapped so eta is continuous in k. eta[0] lies in (-pi, pi].
struct PhaseTable {
    Barrier barrier;
    double mass = 0.0; // MeV/c^2
    std::vector<double> k_grid;
    std::vector<double> eta;
    double h = 0.0; // stencil half-step used by phase_derivatives, 1/angstrom
};

namespace detail {

inline double wrap_angle(double d) {
    // into (-pi, pi]
    d = std::fmod(d, 2.0 * M_PI);
    if (d <= -M_PI)
        d += 2.0 * M_PI;
    else if (d > M_PI)
        d -= 2.0 * M_PI;
    return d;
}

} // namespace detail

inline PhaseTable build_phase_table(const Barrier& barrier, double mass_mev_c2,
                                    double k_min, double k_max, std::size_t n_points) {
    detail::check_barrier(barrier);
    if (!(k_min > 0.0) || !(k_max > k_min))
        throw domain_error("phase table needs 0 < k_min < k_max");
    if (n_points < 2)
        throw domain_error("phase table needs at least 2 points");

    PhaseTable table;
    table.barrier = barrier;
    table.mass = mass_mev_c2;
    table.h = (k_max - k_min) * 2e-4;
    table.k_grid.resize(n_points);
    table.eta.resize(n_points);

    const double dk = (k_max - k_min) / static_cast<double>(n_points - 1);
    double prev_raw = 0.0;
    for (std::size_t i = 0; i < n_points; ++i) {
        const double k = (i + 1 == n_points) ? k_max : k_min + dk * static_cast<double>(i);
        table.k_grid[i] = k;
        const double raw = std::arg(transmission_amplitude(barrier, mass_mev_c2, k));
        if (i == 0) {
            table.eta[0] = raw;
        } else {
            const double step = detail::wrap_angle(raw - prev_raw);
            if (std::abs(step) >= 0.95 * M_PI)
                throw resolution_error(
                    "transmission phase jumps by ~pi between k = " + std::to_string(table.k_grid[i - 1])
                    + " and " + std::to_string(k) + " 1/angstrom; increase n_points");
            if (std::abs(step) > 0.5 * M_PI) {
                // Validate a suspiciously large step against the midpoint; a
                // mismatch means the grid aliased a full winding.
                const double km = 0.5 * (table.k_grid[i - 1] + k);
                const double raw_m = std::arg(transmission_amplitude(barrier, mass_mev_c2, km));
                const double d1 = detail::wrap_angle(raw_m - prev_raw);
                const double d2 = detail::wrap_angle(raw - raw_m);
                if (std::abs(d1) >= 0.95 * M_PI || std::abs(d2) >= 0.95 * M_PI
                    || std::abs(d1 + d2 - step) > 1e-3)
                    throw resolution_error(
                        "transmission phase winds too fast near k = " + std::to_string(km)
                        + " 1/angstrom for the requested grid; increase n_points");
            }
            table.eta[i] = table.eta[i - 1] + step;
        }
        prev_raw = raw;
    }
    return table;
}

// Unwrapped phase at any k inside the table range: the exact arg T(k), lifted
// onto the table's branch. The grid only decides the 2*pi offset, so values
// do not change when the table is refined.
inline double eta_at(const PhaseTable& table, double k) {
    if (table.k_grid.size() < 2)
        throw domain_error("phase table is empty");
    const double k_min = table.k_grid.front();
    const double k_max = table.k_grid.back();
    if (!(k >= k_min && k <= k_max))
        throw domain_error("k = " + std::to_string(k) + " 1/angstrom outside phase table range ["
                           + std::to_string(k_min) + ", " + std::to_string(k_max) + "]");

    const double dk = (k_max - k_min) / static_cast<double>(table.k_grid.size() - 1);
    std::size_t i = static_cast<std::size_t>((k - k_min) / dk);
    if (i + 1 >= table.k_grid.size())
        i = table.k_grid.size() - 2;
    const double frac = (k - table.k_grid[i]) / (table.k_grid[i + 1] - table.k_grid[i]);
    const double eta_lin = table.eta[i] + frac * (table.eta[i + 1] - table.eta[i]);

    const double raw = std::arg(transmission_amplitude(table.barrier, table.mass, k));
    return raw + 2.0 * M_PI * std::round((eta_lin - raw) / (2.0 * M_PI));
}

struct PhaseDerivatives {
    double eta1 = 0.0; // d eta / dk, angstrom
    double eta2 = 0.0; // d^2 eta / dk^2, angstrom^2
};

// Central differences of the unwrapped phase with one Richardson step.
inline PhaseDerivatives phase_derivatives(const PhaseTable& table, double k) {
    if (table.k_grid.size() < 2)
        throw domain_error("phase table is empty");
    const double h = table.h;
    if (!(k - h >= table.k_grid.front() && k + h <= table.k_grid.back()))
        throw domain_error("phase derivatives at k = " + std::to_string(k)
                           + " 1/angstrom need the stencil k +- " + std::to_string(h)
                           + " inside the table range");

    const double e0 = eta_at(table, k);
    const double ep = eta_at(table, k + h);
    const double em = eta_at(table, k - h);
    const double ep2 = eta_at(table, k + 0.5 * h);
    const double em2 = eta_at(table, k - 0.5 * h);

    const double d1_h = (ep - em) / (2.0 * h);
    const double d1_h2 = (ep2 - em2) / h;
    const double d2_h = (ep - 2.0 * e0 + em) / (h * h);
    const double d2_h2 = (ep2 - 2.0 * e0 + em2) / (0.25 * h * h);

    PhaseDerivatives d;
    d.eta1 = (4.0 * d1_h2 - d1_h) / 3.0;
    d.eta2 = (4.0 * d2_h2 - d2_h) / 3.0;
    return d;
}

} // namespace qcarrival

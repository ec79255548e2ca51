#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "qcarrival/errors.hpp"
#include "qcarrival/units.hpp"

// Initial wave packet: a Gaussian envelope of width sigma0 centered at x_c,
// distorted by a sine of wavelength 8*sigma0 with strength alpha, and kicked
// to central wavenumber k0. alpha = 0 recovers the plain Gaussian.

namespace qcarrival {

struct PacketSpec {
    double sigma0 = 1.0; // angstrom
    double k0 = 1.0;     // 1/angstrom
    double x_c = 0.0;    // angstrom
    double alpha = 0.0;  // envelope distortion, dimensionless
};

namespace detail {

inline void check_packet(const PacketSpec& spec) {
    if (!(spec.sigma0 > 0.0))
        throw domain_error("packet width must be positive, got " + std::to_string(spec.sigma0));
    if (!(spec.k0 > 0.0))
        throw domain_error("packet wavenumber must be positive, got " + std::to_string(spec.k0));
}

// Normalization denominator D = 1 + (alpha^2/2)(1 - e^{-pi^2/8}).
inline double envelope_norm(double alpha) {
    return 1.0 + 0.5 * alpha * alpha * (1.0 - std::exp(-M_PI * M_PI / 8.0));
}

} // namespace detail

// Real envelope R0(x) of the initial wave psi0(x) = R0(x) e^{i k0 x}.
inline double initial_amplitude(const PacketSpec& spec, double x) {
    detail::check_packet(spec);
    const double y = x - spec.x_c;
    const double norm = std::pow(2.0 * M_PI * spec.sigma0 * spec.sigma0, -0.25)
                      / std::sqrt(detail::envelope_norm(spec.alpha));
    const double distortion = 1.0 + spec.alpha * std::sin(M_PI * y / (4.0 * spec.sigma0));
    return norm * distortion * std::exp(-y * y / (4.0 * spec.sigma0 * spec.sigma0));
}

// Fourier transform phi(k) of the initial wave, a superposition of three
// Gaussians in k centered at k0 and k0 +- pi/(4 sigma0).
inline std::complex<double> momentum_amplitude(const PacketSpec& spec, double k) {
    detail::check_packet(spec);
    const double s = spec.sigma0;
    const double d = k - spec.k0;
    const double w = M_PI / (4.0 * s);
    const double g0 = std::exp(-s * s * d * d);
    const double gp = std::exp(-s * s * (d - w) * (d - w));
    const double gm = std::exp(-s * s * (d + w) * (d + w));
    const std::complex<double> bracket =
        g0 - std::complex<double>(0.0, 0.5 * spec.alpha) * (gp - gm);
    const double pref = std::pow(2.0 * s * s / M_PI, 0.25)
                      / std::sqrt(detail::envelope_norm(spec.alpha));
    return pref * std::exp(std::complex<double>(0.0, -d * spec.x_c)) * bracket;
}

// <x> over the initial density R0^2.
inline double position_mean(const PacketSpec& spec) {
    detail::check_packet(spec);
    const double a = spec.alpha;
    const double g = std::exp(M_PI * M_PI / 8.0);
    const double denom = a * a * (g - 1.0) + 2.0 * g;
    return spec.x_c + spec.sigma0 * M_PI * std::exp(3.0 * M_PI * M_PI / 32.0) * a / denom;
}

// rms spread of x over the initial density.
inline double position_spread(const PacketSpec& spec) {
    detail::check_packet(spec);
    const double a = spec.alpha;
    const double g = std::exp(M_PI * M_PI / 8.0);
    const double p = a * a * (g - 1.0) + 2.0 * g;
    const double inner = 1.0 + M_PI * M_PI * a * a
                       * (p - 4.0 * std::exp(3.0 * M_PI * M_PI / 16.0)) / (4.0 * p * p);
    return spec.sigma0 * std::sqrt(inner);
}

// rms spread of k over |phi(k)|^2; <k> itself is k0 for every alpha.
inline double momentum_spread(const PacketSpec& spec) {
    detail::check_packet(spec);
    const double a = spec.alpha;
    const double em = std::exp(-M_PI * M_PI / 8.0);
    const double inner = 1.0 + a * a * M_PI * M_PI / (8.0 + 4.0 * a * a * (1.0 - em));
    return std::sqrt(inner) / (2.0 * spec.sigma0);
}

// Distortion strength at which |phi(k)|^2 turns from a maximum into a local
// minimum at k0 (the momentum density becomes double-humped beyond it).
inline double critical_alpha() {
    return 2.0 * std::sqrt(2.0) * std::exp(M_PI * M_PI / 16.0) / M_PI;
}

// Free propagation of the full (possibly distorted) packet, in closed form.
inline std::complex<double> free_propagate(const PacketSpec& spec, double mass_mev_c2,
                                           double x, double t) {
    detail::check_packet(spec);
    const double m = mass_internal(mass_mev_c2);
    const double s = spec.sigma0;
    const double u = hbar * spec.k0 / m;
    const double zeta = x - spec.x_c - u * t;
    const std::complex<double> lam(1.0, hbar * t / (2.0 * m * s * s));
    const std::complex<double> inv_lam = 1.0 / lam;

    const std::complex<double> pref =
        std::pow(2.0 * M_PI * s * s, -0.25) / std::sqrt(lam)
        / std::sqrt(detail::envelope_norm(spec.alpha));
    const std::complex<double> carrier =
        std::exp(std::complex<double>(0.0, spec.k0 * (x - 0.5 * u * t)));
    const std::complex<double> envelope =
        std::exp(-zeta * zeta / (4.0 * s * s) * inv_lam);
    std::complex<double> distortion(1.0, 0.0);
    if (spec.alpha != 0.0) {
        const std::complex<double> damp =
            std::exp(M_PI * M_PI / 16.0 * (inv_lam - 1.0));
        distortion += spec.alpha * damp * std::sin(M_PI * zeta / (4.0 * s) * inv_lam);
    }
    return pref * carrier * envelope * distortion;
}

// Density, action, and current of a freely moving packet at one point.
struct FlowPoint {
    double rho; // 1/angstrom
    double S;   // eV fs
    double j;   // 1/fs
};

// Rigid classical motion of a Gaussian packet (Hamilton-Jacobi solution).
inline FlowPoint gaussian_free_classical(const PacketSpec& spec, double mass_mev_c2,
                                         double x, double t) {
    detail::check_packet(spec);
    if (spec.alpha != 0.0)
        throw domain_error("closed-form free flow applies to the Gaussian packet only (alpha = 0)");
    const double m = mass_internal(mass_mev_c2);
    const double s = spec.sigma0;
    const double u = hbar * spec.k0 / m;
    const double p0 = m * u;
    const double E0 = 0.5 * m * u * u;
    const double zeta = x - spec.x_c - u * t;

    FlowPoint f;
    f.rho = std::exp(-zeta * zeta / (2.0 * s * s)) / std::sqrt(2.0 * M_PI * s * s);
    f.S = p0 * x - E0 * t;
    f.j = u * f.rho;
    return f;
}

// Spreading quantum motion of the same Gaussian packet.
inline FlowPoint gaussian_free_quantum(const PacketSpec& spec, double mass_mev_c2,
                                       double x, double t) {
    detail::check_packet(spec);
    if (spec.alpha != 0.0)
        throw domain_error("closed-form free flow applies to the Gaussian packet only (alpha = 0)");
    const double m = mass_internal(mass_mev_c2);
    const double s0 = spec.sigma0;
    const double u = hbar * spec.k0 / m;
    const double p0 = m * u;
    const double E0 = 0.5 * m * u * u;
    const double zeta = x - spec.x_c - u * t;
    const double b = hbar * t / (2.0 * m * s0 * s0);
    const double st2 = s0 * s0 * (1.0 + b * b);

    FlowPoint f;
    f.rho = std::exp(-zeta * zeta / (2.0 * st2)) / std::sqrt(2.0 * M_PI * st2);
    f.S = p0 * x - E0 * t - 0.5 * hbar * std::atan(b)
        + zeta * zeta * hbar * hbar * t / (8.0 * m * s0 * s0 * st2);
    f.j = u * f.rho + zeta * hbar * hbar * t / (4.0 * m * m * s0 * s0 * st2) * f.rho;
    return f;
}

} // namespace qcarrival

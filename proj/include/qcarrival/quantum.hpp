#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qcarrival/barrier.hpp"
#include "qcarrival/errors.hpp"
#include "qcarrival/packet.hpp"
#include "qcarrival/quadrature.hpp"
#include "qcarrival/units.hpp"

// Transmitted wave behind the barrier, by two routes: direct quadrature of
// the momentum integral, and the three-point stationary-phase closed form
// built on the transmission phase and its first two derivatives.

namespace qcarrival {

enum class Method { exact, stationary_phase };

inline const char* method_name(Method m) {
    return m == Method::exact ? "exact" : "stationary-phase";
}

struct SampledWave {
    std::vector<double> x_grid; // angstrom
    double t = 0.0;             // fs
    std::vector<std::complex<double>> values;
    std::string provenance;
};

namespace detail {

struct PsiPair {
    std::complex<double> psi;
    std::complex<double> dpsi;
};

// Momentum-integral representation with precomputed node coefficients
// w_i T(k_i) phi(k_i), kept at two nesting levels so every evaluation
// carries its own convergence check.
struct ExactKernel {
    std::vector<double> k_base;
    std::vector<std::complex<double>> c_base;
    std::vector<double> k_fine;
    std::vector<std::complex<double>> c_fine;
    double inv_2m = 0.0;  // hbar/(2m), angstrom^2/fs
    double scale = 0.0;   // initial peak height, used as the error yardstick
};

inline ExactKernel make_exact_kernel(const PacketSpec& spec, const Barrier& barrier,
                                     double mass_mev_c2) {
    check_packet(spec);
    check_barrier(barrier);
    const double m = mass_internal(mass_mev_c2);
    const double sk = momentum_spread(spec);
    const double k_hi = spec.k0 + 10.0 * sk;
    const double k_lo = std::max(spec.k0 - 10.0 * sk, 1e-9 * spec.k0);

    ExactKernel kern;
    kern.inv_2m = hbar / (2.0 * m);
    kern.scale = std::pow(2.0 * M_PI * spec.sigma0 * spec.sigma0, -0.25);

    const auto fill = [&](std::size_t panels, std::vector<double>& ks,
                          std::vector<std::complex<double>>& cs) {
        const PanelRule rule = panel_rule(k_lo, k_hi, panels, 16);
        ks = rule.x;
        cs.resize(ks.size());
        for (std::size_t i = 0; i < ks.size(); ++i)
            cs[i] = rule.w[i] * transmission_amplitude(barrier, mass_mev_c2, ks[i])
                  * momentum_amplitude(spec, ks[i]);
    };
    fill(128, kern.k_base, kern.c_base);
    fill(256, kern.k_fine, kern.c_fine);
    return kern;
}

inline PsiPair sum_nodes(const std::vector<double>& ks,
                         const std::vector<std::complex<double>>& cs,
                         double inv_2m, double x, double t) {
    std::complex<double> psi(0.0, 0.0), dpsi(0.0, 0.0);
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const double k = ks[i];
        const double phase = k * x - inv_2m * k * k * t;
        const std::complex<double> term =
            cs[i] * std::complex<double>(std::cos(phase), std::sin(phase));
        psi += term;
        dpsi += std::complex<double>(0.0, k) * term;
    }
    const double norm = 1.0 / std::sqrt(2.0 * M_PI);
    return {norm * psi, norm * dpsi};
}

inline PsiPair eval_exact(const ExactKernel& kern, double x, double t) {
    const PsiPair coarse = sum_nodes(kern.k_base, kern.c_base, kern.inv_2m, x, t);
    const PsiPair fine = sum_nodes(kern.k_fine, kern.c_fine, kern.inv_2m, x, t);
    if (std::abs(fine.psi - coarse.psi) > 1e-8 * kern.scale)
        throw accuracy_error("transmitted-wave quadrature did not converge at x = "
                             + std::to_string(x) + " angstrom, t = " + std::to_string(t) + " fs");
    return fine;
}

// Stationary-phase closed form: one term per momentum component of the
// packet, each carrying the transmission phase Taylor data at its center.
struct StationaryKernel {
    struct Node {
        double k = 0.0;
        double absT = 0.0;
        double eta = 0.0;
        double eta1 = 0.0;
        double eta2 = 0.0;
        std::complex<double> weight;
    };
    Node nodes[3];
    double sigma0 = 0.0;
    double x_c = 0.0;
    double m = 0.0; // internal units
    std::complex<double> pref;
};

inline StationaryKernel make_stationary_kernel(const PacketSpec& spec, const Barrier& barrier,
                                               double mass_mev_c2) {
    check_packet(spec);
    check_barrier(barrier);
    const double w = M_PI / (4.0 * spec.sigma0);
    const double k_minus = spec.k0 - w;
    if (!(k_minus > 0.0))
        throw domain_error("stationary-phase form needs k0 - pi/(4 sigma0) > 0; got "
                           + std::to_string(k_minus) + " 1/angstrom");

    const double sk = momentum_spread(spec);
    const double k_hi = spec.k0 + 8.0 * sk;
    const double k_lo = std::max(spec.k0 - 8.0 * sk,
                                 0.5 * std::min(k_minus, spec.k0));
    const PhaseTable table = build_phase_table(barrier, mass_mev_c2, k_lo, k_hi, 4096);

    StationaryKernel kern;
    kern.sigma0 = spec.sigma0;
    kern.x_c = spec.x_c;
    kern.m = mass_internal(mass_mev_c2);
    kern.pref = std::pow(2.0 * spec.sigma0 * spec.sigma0 / M_PI, 0.25)
              / (std::sqrt(2.0 * M_PI) * std::sqrt(envelope_norm(spec.alpha)));

    const double ks[3] = {spec.k0, spec.k0 + w, k_minus};
    const std::complex<double> half_ia(0.0, 0.5 * spec.alpha);
    const std::complex<double> weights[3] = {
        {1.0, 0.0},
        -half_ia * std::exp(std::complex<double>(0.0, -w * spec.x_c)),
        half_ia * std::exp(std::complex<double>(0.0, w * spec.x_c)),
    };
    for (int j = 0; j < 3; ++j) {
        StationaryKernel::Node& node = kern.nodes[j];
        node.k = ks[j];
        node.weight = weights[j];
        node.absT = std::abs(transmission_amplitude(barrier, mass_mev_c2, ks[j]));
        node.eta = eta_at(table, ks[j]);
        const PhaseDerivatives der = phase_derivatives(table, ks[j]);
        node.eta1 = der.eta1;
        node.eta2 = der.eta2;
    }
    return kern;
}

inline PsiPair eval_stationary(const StationaryKernel& kern, double x, double t) {
    const double s2 = kern.sigma0 * kern.sigma0;
    std::complex<double> psi(0.0, 0.0), dpsi(0.0, 0.0);
    for (const StationaryKernel::Node& node : kern.nodes) {
        const double kj = node.k;
        const std::complex<double> lam(1.0, hbar * t / (2.0 * kern.m * s2)
                                                - node.eta2 / (2.0 * s2));
        const double cj = (x - kern.x_c) - hbar * kj / kern.m * t + node.eta1;
        const double phase = kj * x - hbar * kj * kj / (2.0 * kern.m) * t + node.eta;
        const std::complex<double> f =
            node.absT * std::sqrt(M_PI / (s2 * lam))
            * std::exp(std::complex<double>(0.0, phase) - cj * cj / (4.0 * s2 * lam));
        psi += node.weight * f;
        dpsi += node.weight * f
              * (std::complex<double>(0.0, kj) - cj / (2.0 * s2 * lam));
    }
    return {kern.pref * psi, kern.pref * dpsi};
}

} // namespace detail

inline SampledWave transmitted_wave_exact(const PacketSpec& spec, const Barrier& barrier,
                                          double mass_mev_c2, const std::vector<double>& x_grid,
                                          double t) {
    if (x_grid.empty())
        throw domain_error("transmitted wave needs a non-empty x grid");
    const detail::ExactKernel kern = detail::make_exact_kernel(spec, barrier, mass_mev_c2);
    SampledWave wave;
    wave.x_grid = x_grid;
    wave.t = t;
    wave.provenance = method_name(Method::exact);
    wave.values.reserve(x_grid.size());
    for (double x : x_grid)
        wave.values.push_back(detail::eval_exact(kern, x, t).psi);
    return wave;
}

inline SampledWave transmitted_wave_stationary_phase(const PacketSpec& spec,
                                                     const Barrier& barrier, double mass_mev_c2,
                                                     const std::vector<double>& x_grid, double t) {
    if (x_grid.empty())
        throw domain_error("transmitted wave needs a non-empty x grid");
    const detail::StationaryKernel kern =
        detail::make_stationary_kernel(spec, barrier, mass_mev_c2);
    SampledWave wave;
    wave.x_grid = x_grid;
    wave.t = t;
    wave.provenance = method_name(Method::stationary_phase);
    wave.values.reserve(x_grid.size());
    for (double x : x_grid)
        wave.values.push_back(detail::eval_stationary(kern, x, t).psi);
    return wave;
}

inline std::vector<double> density(const SampledWave& wave) {
    std::vector<double> rho;
    rho.reserve(wave.values.size());
    for (const std::complex<double>& v : wave.values)
        rho.push_back(std::norm(v));
    return rho;
}

// Probability current j = (hbar/m) Im(psi* dpsi/dx) at one point.
inline double current_at_point(const PacketSpec& spec, const Barrier& barrier,
                               double mass_mev_c2, double X, double t, Method method) {
    const double m = mass_internal(mass_mev_c2);
    detail::PsiPair p;
    if (method == Method::exact) {
        const detail::ExactKernel kern = detail::make_exact_kernel(spec, barrier, mass_mev_c2);
        p = detail::eval_exact(kern, X, t);
    } else {
        const detail::StationaryKernel kern =
            detail::make_stationary_kernel(spec, barrier, mass_mev_c2);
        p = detail::eval_stationary(kern, X, t);
    }
    return hbar / m * std::imag(std::conj(p.psi) * p.dpsi);
}

// Current at a fixed point sampled over a time grid, reusing one kernel.
inline std::vector<double> current_series(const PacketSpec& spec, const Barrier& barrier,
                                          double mass_mev_c2, double X,
                                          const std::vector<double>& t_grid, Method method) {
    const double m = mass_internal(mass_mev_c2);
    std::vector<double> j;
    j.reserve(t_grid.size());
    if (method == Method::exact) {
        const detail::ExactKernel kern = detail::make_exact_kernel(spec, barrier, mass_mev_c2);
        for (double t : t_grid) {
            const detail::PsiPair p = detail::eval_exact(kern, X, t);
            j.push_back(hbar / m * std::imag(std::conj(p.psi) * p.dpsi));
        }
    } else {
        const detail::StationaryKernel kern =
            detail::make_stationary_kernel(spec, barrier, mass_mev_c2);
        for (double t : t_grid) {
            const detail::PsiPair p = detail::eval_stationary(kern, X, t);
            j.push_back(hbar / m * std::imag(std::conj(p.psi) * p.dpsi));
        }
    }
    return j;
}

} // namespace qcarrival

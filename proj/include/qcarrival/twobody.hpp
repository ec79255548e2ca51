#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcarrival/errors.hpp"

// Two free identical particles in 1D, in reduced units chosen by the caller
// (hbar and the mass are passed in). Symmetrized states for Bose-Einstein /
// Fermi-Dirac statistics, product states for Maxwell-Boltzmann, and a finite
// difference residual probe for which evolution law a sampled two-body wave
// obeys.

namespace qcarrival {

enum class Statistics { boson, fermion, maxwell_boltzmann };

inline const char* statistics_name(Statistics s) {
    switch (s) {
    case Statistics::boson: return "BE";
    case Statistics::fermion: return "FD";
    default: return "MB";
    }
}

// One Gaussian single-particle state: width sigma0, kick k, initial center x_c.
struct GaussianLine {
    double sigma0 = 1.0;
    double k = 0.0;
    double x_c = 0.0;
};

struct TwoBodySpec {
    GaussianLine a;
    GaussianLine b;
    Statistics statistics = Statistics::boson;
};

namespace detail {

inline void check_line(const GaussianLine& line) {
    if (!(line.sigma0 > 0.0))
        throw domain_error("packet width must be positive, got " + std::to_string(line.sigma0));
}

inline void check_scales(double hbar_u, double mass_u) {
    if (!(hbar_u > 0.0))
        throw domain_error("hbar must be positive, got " + std::to_string(hbar_u));
    if (!(mass_u > 0.0))
        throw domain_error("mass must be positive, got " + std::to_string(mass_u));
}

} // namespace detail

// Freely spreading Gaussian packet (Schroedinger evolution).
inline std::complex<double> single_packet(const GaussianLine& line, double hbar_u, double mass_u,
                                          double x, double t) {
    detail::check_line(line);
    detail::check_scales(hbar_u, mass_u);
    const double s0 = line.sigma0;
    const double u = hbar_u * line.k / mass_u;
    const std::complex<double> lam(1.0, hbar_u * t / (2.0 * mass_u * s0 * s0));
    const std::complex<double> pref = std::pow(2.0 * M_PI * s0 * s0, -0.25) / std::sqrt(lam);
    const double zeta = x - line.x_c - u * t;
    return pref * std::exp(std::complex<double>(0.0, line.k * (x - 0.5 * u * t))
                           - zeta * zeta / (4.0 * s0 * s0 * lam));
}

inline std::complex<double> single_packet_dx(const GaussianLine& line, double hbar_u,
                                             double mass_u, double x, double t) {
    const double s0 = line.sigma0;
    const double u = hbar_u * line.k / mass_u;
    const std::complex<double> lam(1.0, hbar_u * t / (2.0 * mass_u * s0 * s0));
    const double zeta = x - line.x_c - u * t;
    return single_packet(line, hbar_u, mass_u, x, t)
         * (std::complex<double>(0.0, line.k) - zeta / (2.0 * s0 * s0 * lam));
}

// Rigidly translating Gaussian (classical wave equation solution).
inline std::complex<double> classical_single_packet(const GaussianLine& line, double hbar_u,
                                                    double mass_u, double x, double t) {
    detail::check_line(line);
    detail::check_scales(hbar_u, mass_u);
    const double s0 = line.sigma0;
    const double u = hbar_u * line.k / mass_u;
    const double pref = std::pow(2.0 * M_PI * s0 * s0, -0.25);
    const double zeta = x - line.x_c - u * t;
    return pref * std::exp(std::complex<double>(0.0, line.k * (x - 0.5 * u * t)))
         * std::exp(-zeta * zeta / (4.0 * s0 * s0));
}

// <psi_a | psi_b>; constant in time for free evolution with a common mass.
inline std::complex<double> overlap(const TwoBodySpec& spec) {
    detail::check_line(spec.a);
    detail::check_line(spec.b);
    const double sa = spec.a.sigma0, sb = spec.b.sigma0;
    const double dk = spec.a.k - spec.b.k;
    const double dx = spec.a.x_c - spec.b.x_c;
    const double sum2 = sa * sa + sb * sb;
    const double pref = std::sqrt(2.0 * sa * sb / sum2);
    const std::complex<double> expo(
        -(4.0 * dk * dk * sa * sa * sb * sb + dx * dx) / (4.0 * sum2),
        -dk * (sb * sb * spec.a.x_c + sa * sa * spec.b.x_c) / sum2);
    return pref * std::exp(expo);
}

// N_+- for the symmetrized two-body state.
inline double normalization(const TwoBodySpec& spec) {
    if (spec.statistics == Statistics::maxwell_boltzmann)
        throw domain_error("product (MB) states carry no symmetrization constant");
    const double ov2 = std::norm(overlap(spec));
    if (spec.statistics == Statistics::fermion && 1.0 - ov2 < 1e-12)
        throw degenerate_state_error(
            "antisymmetrized state of two identical single-particle packets vanishes");
    const double sign = spec.statistics == Statistics::boson ? 1.0 : -1.0;
    return 1.0 / std::sqrt(2.0 * (1.0 + sign * ov2));
}

namespace detail {

struct OneBodyTerms {
    std::complex<double> pa, pb, da, db;
    std::complex<double> ov;
    double n2 = 0.0;
    double sign = 0.0;
};

inline OneBodyTerms one_body_terms(const TwoBodySpec& spec, double hbar_u, double mass_u,
                                   double x, double t) {
    if (spec.statistics == Statistics::maxwell_boltzmann)
        throw domain_error("one-body observables of a symmetrized state need BE or FD "
                           "statistics; MB states have per-particle pairs");
    OneBodyTerms terms;
    const double n = normalization(spec);
    terms.n2 = n * n;
    terms.sign = spec.statistics == Statistics::boson ? 1.0 : -1.0;
    terms.ov = overlap(spec);
    terms.pa = single_packet(spec.a, hbar_u, mass_u, x, t);
    terms.pb = single_packet(spec.b, hbar_u, mass_u, x, t);
    terms.da = single_packet_dx(spec.a, hbar_u, mass_u, x, t);
    terms.db = single_packet_dx(spec.b, hbar_u, mass_u, x, t);
    return terms;
}

} // namespace detail

// Probability density of finding either particle at x.
inline double one_body_density(const TwoBodySpec& spec, double hbar_u, double mass_u, double x,
                               double t) {
    const detail::OneBodyTerms w = detail::one_body_terms(spec, hbar_u, mass_u, x, t);
    const double cross = 2.0 * std::real(w.ov * w.pa * std::conj(w.pb));
    return w.n2 * (std::norm(w.pa) + std::norm(w.pb) + w.sign * cross);
}

// Matching one-body probability current.
inline double one_body_current(const TwoBodySpec& spec, double hbar_u, double mass_u, double x,
                               double t) {
    const detail::OneBodyTerms w = detail::one_body_terms(spec, hbar_u, mass_u, x, t);
    const std::complex<double> direct = std::conj(w.pa) * w.da + std::conj(w.pb) * w.db;
    const std::complex<double> exch =
        w.ov * std::conj(w.pb) * w.da + std::conj(w.ov) * std::conj(w.pa) * w.db;
    return hbar_u / mass_u * w.n2 * std::imag(direct + w.sign * exch);
}

// Distinguishable particles: separate densities and currents per particle.
inline std::pair<double, double> mb_density_pair(const TwoBodySpec& spec, double hbar_u,
                                                 double mass_u, double x, double t) {
    return {std::norm(single_packet(spec.a, hbar_u, mass_u, x, t)),
            std::norm(single_packet(spec.b, hbar_u, mass_u, x, t))};
}

inline std::pair<double, double> mb_current_pair(const TwoBodySpec& spec, double hbar_u,
                                                 double mass_u, double x, double t) {
    const std::complex<double> pa = single_packet(spec.a, hbar_u, mass_u, x, t);
    const std::complex<double> pb = single_packet(spec.b, hbar_u, mass_u, x, t);
    const std::complex<double> da = single_packet_dx(spec.a, hbar_u, mass_u, x, t);
    const std::complex<double> db = single_packet_dx(spec.b, hbar_u, mass_u, x, t);
    return {hbar_u / mass_u * std::imag(std::conj(pa) * da),
            hbar_u / mass_u * std::imag(std::conj(pb) * db)};
}

// A two-body wave sampled on a regular (t, x1, x2) stencil.
struct WaveStencil {
    std::vector<double> x1;
    std::vector<double> x2;
    std::vector<double> t;
    // values[it][i1][i2]
    std::vector<std::vector<std::vector<std::complex<double>>>> values;
};

template <typename F>
inline WaveStencil make_stencil(const std::vector<double>& x1, const std::vector<double>& x2,
                                const std::vector<double>& t, F&& wave) {
    WaveStencil st;
    st.x1 = x1;
    st.x2 = x2;
    st.t = t;
    st.values.resize(t.size());
    for (std::size_t it = 0; it < t.size(); ++it) {
        st.values[it].resize(x1.size());
        for (std::size_t i1 = 0; i1 < x1.size(); ++i1) {
            st.values[it][i1].resize(x2.size());
            for (std::size_t i2 = 0; i2 < x2.size(); ++i2)
                st.values[it][i1][i2] = wave(x1[i1], x2[i2], t[it]);
        }
    }
    return st;
}

enum class EvolutionLaw { classical, schroedinger };

namespace detail {

inline double stencil_spacing(const std::vector<double>& g, const char* label) {
    if (g.size() < 3)
        throw domain_error(std::string("wave stencil needs at least 3 ") + label + " samples");
    const double d = g[1] - g[0];
    if (!(d > 0.0))
        throw domain_error(std::string("wave stencil needs an increasing ") + label + " grid");
    for (std::size_t i = 1; i < g.size(); ++i)
        if (std::abs(g[i] - g[i - 1] - d) > 1e-9 * std::max(1.0, std::abs(d)))
            throw domain_error(std::string("wave stencil needs a uniform ") + label + " grid");
    return d;
}

} // namespace detail

// Largest pointwise violation of the chosen free evolution law over the
// stencil interior, |i hbar dPsi/dt - RHS|, by second-order differences.
// Points where |Psi| falls below threshold_frac * max|Psi| are skipped for
// the nonlinear law, whose |Psi|-quotient is undefined on nodes.
inline double classical_wave_residual(const WaveStencil& stencil, double hbar_u, double mass_u,
                                      EvolutionLaw law, double threshold_frac = 1e-6) {
    detail::check_scales(hbar_u, mass_u);
    const double dt = detail::stencil_spacing(stencil.t, "time");
    const double d1 = detail::stencil_spacing(stencil.x1, "x1");
    const double d2 = detail::stencil_spacing(stencil.x2, "x2");
    const std::size_t nt = stencil.t.size(), n1 = stencil.x1.size(), n2 = stencil.x2.size();
    if (stencil.values.size() != nt)
        throw domain_error("wave stencil values do not match the time grid");
    for (const auto& slab : stencil.values) {
        if (slab.size() != n1)
            throw domain_error("wave stencil values do not match the x1 grid");
        for (const auto& row : slab)
            if (row.size() != n2)
                throw domain_error("wave stencil values do not match the x2 grid");
    }

    double peak = 0.0;
    for (const auto& slab : stencil.values)
        for (const auto& row : slab)
            for (const std::complex<double>& v : row)
                peak = std::max(peak, std::abs(v));
    if (!(peak > 0.0))
        throw domain_error("wave stencil is identically zero");
    const double floor = threshold_frac * peak;

    const std::complex<double> ih(0.0, hbar_u);
    const double half_h2m = hbar_u * hbar_u / (2.0 * mass_u);
    double worst = -1.0;
    for (std::size_t it = 1; it + 1 < nt; ++it) {
        const auto& prev = stencil.values[it - 1];
        const auto& cur = stencil.values[it];
        const auto& next = stencil.values[it + 1];
        for (std::size_t i1 = 1; i1 + 1 < n1; ++i1) {
            for (std::size_t i2 = 1; i2 + 1 < n2; ++i2) {
                const std::complex<double> c = cur[i1][i2];
                if (law == EvolutionLaw::classical && std::abs(c) < floor)
                    continue;
                const std::complex<double> dpsi_dt =
                    (next[i1][i2] - prev[i1][i2]) / (2.0 * dt);
                const std::complex<double> lap =
                    (cur[i1 + 1][i2] - 2.0 * c + cur[i1 - 1][i2]) / (d1 * d1)
                    + (cur[i1][i2 + 1] - 2.0 * c + cur[i1][i2 - 1]) / (d2 * d2);
                std::complex<double> rhs = -half_h2m * lap;
                if (law == EvolutionLaw::classical) {
                    const double lap_mod =
                        (std::abs(cur[i1 + 1][i2]) - 2.0 * std::abs(c) + std::abs(cur[i1 - 1][i2]))
                            / (d1 * d1)
                        + (std::abs(cur[i1][i2 + 1]) - 2.0 * std::abs(c)
                           + std::abs(cur[i1][i2 - 1])) / (d2 * d2);
                    rhs += half_h2m * lap_mod / std::abs(c) * c;
                }
                worst = std::max(worst, std::abs(ih * dpsi_dt - rhs));
            }
        }
    }
    if (worst < 0.0)
        throw nodal_region_error("every stencil interior point sits below the modulus floor");
    return worst;
}

} // namespace qcarrival

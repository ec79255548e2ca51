#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "qcarrival/barrier.hpp"
#include "qcarrival/errors.hpp"
#include "qcarrival/packet.hpp"
#include "qcarrival/units.hpp"

// Classical (nonlinear wave equation) treatment of the same scattering
// problem: a rigid envelope crossing the barrier region at reduced speed,
// plus the trajectory/arrival-time bookkeeping of the underlying ensemble.

namespace qcarrival {

struct ClassicalScatteringState {
    PacketSpec packet;
    Barrier barrier;
    double mass = 0.0;     // MeV/c^2
    double u = 0.0;        // speed outside the barrier, angstrom/fs
    double u_prime = 0.0;  // speed on top of the barrier, angstrom/fs
    double p0 = 0.0;       // momentum outside, eV/c
    double p0_prime = 0.0; // momentum inside, eV/c
    double E0 = 0.0;       // kinetic energy, eV
};

inline ClassicalScatteringState classical_state(const PacketSpec& packet, const Barrier& barrier,
                                                double mass_mev_c2) {
    detail::check_packet(packet);
    detail::check_barrier(barrier);
    const double m = mass_internal(mass_mev_c2);

    ClassicalScatteringState st;
    st.packet = packet;
    st.barrier = barrier;
    st.mass = mass_mev_c2;
    st.u = hbar * packet.k0 / m;
    st.E0 = 0.5 * m * st.u * st.u;
    if (!(st.E0 > barrier.V0))
        throw domain_error("classical crossing needs E0 > V0; got E0 = " + std::to_string(st.E0)
                           + " eV against V0 = " + std::to_string(barrier.V0) + " eV");
    st.u_prime = std::sqrt(st.u * st.u - 2.0 * barrier.V0 / m);
    st.p0 = m * st.u * c_light;
    st.p0_prime = m * st.u_prime * c_light;
    return st;
}

// Solution of the classical wave equation with the packet as initial state:
// the envelope translates rigidly, compressed by u/u' while over the barrier,
// with action and current continuous at both edges.
inline std::complex<double> rosen_wave(const ClassicalScatteringState& st, double x, double t) {
    const double k0 = st.packet.k0;
    const double kp = k0 * st.u_prime / st.u; // p0'/hbar
    const double ratio = st.u / st.u_prime;   // p0/p0'
    const double Et_over_hbar = st.E0 * t / hbar;

    if (x < 0.0) {
        const double env = initial_amplitude(st.packet, x - st.u * t);
        return env * std::exp(std::complex<double>(0.0, k0 * x - Et_over_hbar));
    }
    if (x < st.barrier.a) {
        const double env =
            std::sqrt(ratio) * initial_amplitude(st.packet, ratio * (x - st.u_prime * t));
        return env * std::exp(std::complex<double>(0.0, kp * x - Et_over_hbar));
    }
    const double shift = st.barrier.a * (ratio - 1.0);
    const double env = initial_amplitude(st.packet, x - st.u * t + shift);
    return env * std::exp(std::complex<double>(
        0.0, k0 * x - Et_over_hbar + (kp - k0) * st.barrier.a));
}

// Trajectory of one ensemble member released at x0 < 0: free flight, slower
// transit across [0, a], free flight again.
inline double classical_trajectory(double x0, const ClassicalScatteringState& st, double t) {
    if (!(x0 < 0.0))
        throw domain_error("trajectory start must lie left of the barrier, got x0 = "
                           + std::to_string(x0) + " angstrom");
    if (t < 0.0)
        throw domain_error("trajectory time must be non-negative");
    const double t1 = -x0 / st.u;
    const double t2 = t1 + st.barrier.a / st.u_prime;
    if (t < t1)
        return x0 + st.u * t;
    if (t < t2)
        return st.u_prime * (t - t1);
    return st.barrier.a + st.u * (t - t2);
}

// Time at which that member reaches a detector at X > a.
inline double arrival_time_single(double x0, double X, const ClassicalScatteringState& st) {
    if (!(x0 < 0.0))
        throw domain_error("trajectory start must lie left of the barrier, got x0 = "
                           + std::to_string(x0) + " angstrom");
    if (!(X > st.barrier.a))
        throw domain_error("detector must lie beyond the barrier, got X = " + std::to_string(X)
                           + " angstrom against a = " + std::to_string(st.barrier.a));
    return (X - x0) / st.u + st.barrier.a * (1.0 / st.u_prime - 1.0 / st.u);
}

// Ensemble mean arrival time: the single-trajectory time evaluated at the
// mean release point.
inline double mean_arrival_time_analytic(const ClassicalScatteringState& st, double X) {
    if (!(X > st.barrier.a))
        throw domain_error("detector must lie beyond the barrier, got X = " + std::to_string(X)
                           + " angstrom against a = " + std::to_string(st.barrier.a));
    return (X - position_mean(st.packet)) / st.u
         + st.barrier.a * (1.0 / st.u_prime - 1.0 / st.u);
}

// rms width of the classical arrival-time distribution; independent of the
// detector location and of the barrier.
inline double arrival_fluctuation(const PacketSpec& spec, double u) {
    if (!(u > 0.0))
        throw domain_error("packet speed must be positive, got " + std::to_string(u));
    return position_spread(spec) / u;
}

// Classical current at the detector: j = rho * local speed.
inline double classical_current_at_point(const ClassicalScatteringState& st, double X, double t) {
    const double speed = (X >= 0.0 && X < st.barrier.a) ? st.u_prime : st.u;
    return speed * std::norm(rosen_wave(st, X, t));
}

} // namespace qcarrival

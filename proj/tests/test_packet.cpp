#include <catch2/catch_amalgamated.hpp>
#include <qcarrival/packet.hpp>
#include <qcarrival/quadrature.hpp>

#include <cmath>
#include <complex>

#include "support/oracles.hpp"

using namespace qcarrival;
using std::complex;

namespace {

// quadrature window comfortably covering the envelope tails
double lo_x(const PacketSpec& s) { return s.x_c - 16.0 * s.sigma0; }
double hi_x(const PacketSpec& s) { return s.x_c + 16.0 * s.sigma0; }

complex<double> psi0(const PacketSpec& s, double x) {
    return initial_amplitude(s, x) * std::exp(complex<double>(0.0, s.k0 * x));
}

// direct Fourier transform of the initial wave, (1/sqrt(2 pi)) int psi0 e^{-ikx}
complex<double> phi_numeric(const PacketSpec& s, double k) {
    const auto f = [&](double x) {
        return psi0(s, x) * std::exp(complex<double>(0.0, -k * x));
    };
    return oracles::adaptive_simpson_complex(f, lo_x(s), hi_x(s), 1e-13)
         / std::sqrt(2.0 * M_PI);
}

} // namespace

TEST_CASE("initial density is normalized for a range of distortions") {
    for (const double alpha : {0.0, 0.5, 2.0, 5.0, -5.0}) {
        const PacketSpec s{2.0, 11.45, -50.0, alpha};
        const double norm = oracles::adaptive_simpson(
            [&](double x) { const double r = initial_amplitude(s, x); return r * r; },
            lo_x(s), hi_x(s), 1e-13);
        INFO("alpha = " << alpha);
        CHECK(norm == Catch::Approx(1.0).epsilon(1e-11));
    }
}

TEST_CASE("plain Gaussian momentum amplitude has the closed elementary form") {
    const PacketSpec s{1.7, 4.0, 0.0, 0.0};
    for (const double k : {2.0, 3.5, 4.0, 4.9}) {
        const double d = k - s.k0;
        const complex<double> expected =
            std::pow(2.0 * s.sigma0 * s.sigma0 / M_PI, 0.25)
            * std::exp(-s.sigma0 * s.sigma0 * d * d);
        const complex<double> got = momentum_amplitude(s, k);
        CHECK(std::abs(got - expected) < 1e-14);
    }
}

TEST_CASE("momentum amplitude matches the direct Fourier transform") {
    for (const double alpha : {0.0, 2.0, -5.0}) {
        for (const double x_c : {0.0, -50.0}) {
            const PacketSpec s{2.0, 11.453069, x_c, alpha};
            const double w = M_PI / (4.0 * s.sigma0);
            for (const double k : {s.k0, s.k0 - w, s.k0 + w, s.k0 - 1.3, s.k0 + 0.7}) {
                const complex<double> got = momentum_amplitude(s, k);
                const complex<double> ref = phi_numeric(s, k);
                INFO("alpha = " << alpha << ", x_c = " << x_c << ", k = " << k);
                CHECK(std::abs(got - ref) < 1e-10);
            }
        }
    }
}

TEST_CASE("momentum density is normalized and centered at k0") {
    for (const double alpha : {0.0, 1.66836, 5.0}) {
        const PacketSpec s{2.0, 11.453069, -50.0, alpha};
        const double k_lo = s.k0 - 6.0, k_hi = s.k0 + 6.0;
        const auto rho_k = [&](double k) { return std::norm(momentum_amplitude(s, k)); };
        const double norm = oracles::adaptive_simpson(rho_k, k_lo, k_hi, 1e-13);
        const double mean = oracles::adaptive_simpson(
            [&](double k) { return k * rho_k(k); }, k_lo, k_hi, 1e-13);
        INFO("alpha = " << alpha);
        CHECK(norm == Catch::Approx(1.0).epsilon(1e-11));
        CHECK(mean == Catch::Approx(s.k0).epsilon(1e-11));
    }
}

TEST_CASE("closed-form moments match quadrature over the densities") {
    for (const double alpha : {0.0, 0.8, 2.0, -5.0}) {
        const PacketSpec s{2.0, 11.453069, -50.0, alpha};

        const auto rho_x = [&](double x) {
            const double r = initial_amplitude(s, x);
            return r * r;
        };
        const double m1 = oracles::adaptive_simpson(
            [&](double x) { return x * rho_x(x); }, lo_x(s), hi_x(s), 1e-13);
        const double m2 = oracles::adaptive_simpson(
            [&](double x) { return x * x * rho_x(x); }, lo_x(s), hi_x(s), 1e-13);
        INFO("alpha = " << alpha);
        CHECK(position_mean(s) == Catch::Approx(m1).margin(1e-9));
        CHECK(position_spread(s) == Catch::Approx(std::sqrt(m2 - m1 * m1)).epsilon(1e-9));

        const auto rho_k = [&](double k) { return std::norm(momentum_amplitude(s, k)); };
        const double k_lo = s.k0 - 6.0, k_hi = s.k0 + 6.0;
        const double km2 = oracles::adaptive_simpson(
            [&](double k) { return (k - s.k0) * (k - s.k0) * rho_k(k); }, k_lo, k_hi, 1e-13);
        CHECK(momentum_spread(s) == Catch::Approx(std::sqrt(km2)).epsilon(1e-9));
    }
}

TEST_CASE("moments reduce to the Gaussian values at alpha = 0") {
    const PacketSpec s{3.1, 2.0, 7.0, 0.0};
    CHECK(position_mean(s) == Catch::Approx(s.x_c).margin(1e-14));
    CHECK(position_spread(s) == Catch::Approx(s.sigma0).epsilon(1e-14));
    CHECK(momentum_spread(s) == Catch::Approx(0.5 / s.sigma0).epsilon(1e-14));
}

TEST_CASE("mirror distortions mirror the position mean") {
    const PacketSpec sp{2.0, 5.0, -10.0, 1.5};
    const PacketSpec sm{2.0, 5.0, -10.0, -1.5};
    CHECK(position_mean(sp) - sp.x_c == Catch::Approx(-(position_mean(sm) - sm.x_c)).epsilon(1e-14));
    CHECK(position_spread(sp) == Catch::Approx(position_spread(sm)).epsilon(1e-14));
}

TEST_CASE("critical distortion flips the momentum-density curvature at k0") {
    const double ac = critical_alpha();
    CHECK(ac == Catch::Approx(2.0 * std::sqrt(2.0) * std::exp(M_PI * M_PI / 16.0) / M_PI)
                    .epsilon(1e-15));
    CHECK(ac == Catch::Approx(1.66836).epsilon(1e-5));

    const auto curvature = [&](double alpha) {
        const PacketSpec s{2.0, 11.453069, 0.0, alpha};
        return oracles::d2([&](double k) { return std::norm(momentum_amplitude(s, k)); },
                           s.k0, 1e-3);
    };
    CHECK(curvature(0.8 * ac) < 0.0);
    CHECK(curvature(1.2 * ac) > 0.0);
    // near the threshold the curvature is tiny compared to its alpha = 0 value
    CHECK(std::abs(curvature(ac)) < 1e-6 * std::abs(curvature(0.0)));
}

TEST_CASE("free propagation starts from the initial wave") {
    for (const double alpha : {0.0, 2.0, -5.0}) {
        const PacketSpec s{2.0, 11.453069, -50.0, alpha};
        for (const double x : {-55.0, -50.0, -48.3, -41.0}) {
            const complex<double> got = free_propagate(s, 5.0, x, 0.0);
            CHECK(std::abs(got - psi0(s, x)) < 1e-13);
        }
    }
}

TEST_CASE("free propagation matches the momentum-integral evolution") {
    const double mass = 5.0;
    const double m_int = mass_internal(mass);
    for (const double alpha : {0.0, 5.0}) {
        const PacketSpec s{2.0, 11.453069, -50.0, alpha};
        const double u = hbar * s.k0 / m_int;
        const double t = 7.3;
        const double center = s.x_c + u * t;
        const auto psi_ref = [&](double x) {
            const auto f = [&](double k) {
                const double phase = k * x - hbar * k * k * t / (2.0 * m_int);
                return momentum_amplitude(s, k) * std::exp(complex<double>(0.0, phase));
            };
            return oracles::adaptive_simpson_complex(f, s.k0 - 6.0, s.k0 + 6.0, 1e-13)
                 / std::sqrt(2.0 * M_PI);
        };
        for (const double x : {center - 4.0, center, center + 3.1, center + 9.0}) {
            const complex<double> got = free_propagate(s, mass, x, t);
            INFO("alpha = " << alpha << ", x = " << x);
            CHECK(std::abs(got - psi_ref(x)) < 1e-10);
        }
    }
}

TEST_CASE("free propagation conserves the norm") {
    const PacketSpec s{2.0, 11.453069, -50.0, 5.0};
    const double mass = 5.0;
    const double t = 9.26;
    const double u = hbar * s.k0 / mass_internal(mass);
    const double center = s.x_c + u * t;
    const double norm = oracles::adaptive_simpson(
        [&](double x) { return std::norm(free_propagate(s, mass, x, t)); },
        center - 60.0, center + 60.0, 1e-12);
    CHECK(norm == Catch::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Gaussian flow descriptions agree with the propagated wave") {
    const PacketSpec s{2.0, 11.453069, -50.0, 0.0};
    const double mass = 5.0;
    const double m_int = mass_internal(mass);
    const double t = 6.2;
    const double u = hbar * s.k0 / m_int;
    const double center = s.x_c + u * t;

    for (const double x : {center - 3.0, center + 0.7, center + 5.5}) {
        const FlowPoint q = gaussian_free_quantum(s, mass, x, t);
        const complex<double> psi = free_propagate(s, mass, x, t);

        CHECK(q.rho == Catch::Approx(std::norm(psi)).epsilon(1e-12));

        // density and action reconstruct the wave up to the 2 pi hbar branch
        const complex<double> rebuilt =
            std::sqrt(q.rho) * std::exp(complex<double>(0.0, q.S / hbar));
        CHECK(std::abs(rebuilt - psi) < 1e-12);

        // current agrees with (hbar/m) Im(psi* dpsi/dx) from finite differences
        const double h = 1e-4;
        const auto re = [&](double xx) { return std::real(free_propagate(s, mass, xx, t)); };
        const auto im = [&](double xx) { return std::imag(free_propagate(s, mass, xx, t)); };
        const complex<double> dpsi(oracles::d1(re, x, h), oracles::d1(im, x, h));
        const double j_ref = hbar / m_int * std::imag(std::conj(psi) * dpsi);
        CHECK(q.j == Catch::Approx(j_ref).margin(1e-8));
    }
}

TEST_CASE("classical Gaussian flow is rigid and solves the transport equations") {
    const PacketSpec s{2.0, 11.453069, -50.0, 0.0};
    const double mass = 5.0;
    const double m_int = mass_internal(mass);
    const double u = hbar * s.k0 / m_int;
    const double t = 6.2;
    const double x = s.x_c + u * t + 1.3;

    const FlowPoint c = gaussian_free_classical(s, mass, x, t);
    const double r0 = initial_amplitude(s, x - u * t);
    CHECK(c.rho == Catch::Approx(r0 * r0).epsilon(1e-12));
    CHECK(c.j == Catch::Approx(u * c.rho).epsilon(1e-14));

    const double h = 1e-4;
    // Hamilton-Jacobi: dS/dt + (dS/dx)^2 / 2m = 0
    const double st = oracles::d1(
        [&](double tt) { return gaussian_free_classical(s, mass, x, tt).S; }, t, h);
    const double sx = oracles::d1(
        [&](double xx) { return gaussian_free_classical(s, mass, xx, t).S; }, x, h);
    CHECK(st + sx * sx / (2.0 * m_int) == Catch::Approx(0.0).margin(1e-6));
    // continuity: drho/dt + dj/dx = 0
    const double rt = oracles::d1(
        [&](double tt) { return gaussian_free_classical(s, mass, x, tt).rho; }, t, h);
    const double jx = oracles::d1(
        [&](double xx) { return gaussian_free_classical(s, mass, xx, t).j; }, x, h);
    CHECK(rt + jx == Catch::Approx(0.0).margin(1e-8));
}

TEST_CASE("quantum Gaussian flow solves the continuity equation") {
    const PacketSpec s{2.0, 11.453069, -50.0, 0.0};
    const double mass = 5.0;
    const double u = hbar * s.k0 / mass_internal(mass);
    const double t = 6.2;
    const double x = s.x_c + u * t + 2.9;
    const double h = 1e-4;
    const double rt = oracles::d1(
        [&](double tt) { return gaussian_free_quantum(s, mass, x, tt).rho; }, t, h);
    const double jx = oracles::d1(
        [&](double xx) { return gaussian_free_quantum(s, mass, xx, t).j; }, x, h);
    CHECK(rt + jx == Catch::Approx(0.0).margin(1e-8));
}

TEST_CASE("flow descriptions reject distorted packets") {
    const PacketSpec s{2.0, 11.453069, -50.0, 1.0};
    CHECK_THROWS_AS(gaussian_free_classical(s, 5.0, 0.0, 0.0), domain_error);
    CHECK_THROWS_AS(gaussian_free_quantum(s, 5.0, 0.0, 0.0), domain_error);
}

TEST_CASE("packet validation rejects non-positive width and wavenumber") {
    CHECK_THROWS_AS(initial_amplitude({0.0, 1.0, 0.0, 0.0}, 0.0), domain_error);
    CHECK_THROWS_AS(initial_amplitude({-1.0, 1.0, 0.0, 0.0}, 0.0), domain_error);
    CHECK_THROWS_AS(momentum_amplitude({1.0, 0.0, 0.0, 0.0}, 1.0), domain_error);
    CHECK_THROWS_AS(free_propagate({1.0, -2.0, 0.0, 0.0}, 5.0, 0.0, 0.0), domain_error);
    CHECK_THROWS_AS(free_propagate({1.0, 1.0, 0.0, 0.0}, 0.0, 0.0, 0.0), domain_error);
}

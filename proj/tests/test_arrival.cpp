#include <catch2/catch_amalgamated.hpp>
#include <qcarrival/arrival.hpp>
#include <qcarrival/classical.hpp>
#include <qcarrival/quantum.hpp>

#include <cmath>
#include <vector>

#include "support/oracles.hpp"

using namespace qcarrival;

namespace {

ArrivalSeries gaussian_series(double center, double sigma, double t_lo, double t_hi,
                              std::size_t n, double amp = 1.0) {
    ArrivalSeries s;
    s.X = 75.0;
    s.source = "synthetic";
    s.t_grid = linspace(t_lo, t_hi, n);
    s.j.reserve(n);
    for (double t : s.t_grid) {
        const double d = (t - center) / sigma;
        s.j.push_back(amp * std::exp(-0.5 * d * d));
    }
    return s;
}

} // namespace

TEST_CASE("uniform Simpson integrates cubics exactly for any grid parity") {
    for (const std::size_t n : {4u, 5u, 6u, 9u}) {
        const std::vector<double> xs = linspace(0.0, 1.0, n);
        std::vector<double> f(n);
        for (std::size_t i = 0; i < n; ++i)
            f[i] = xs[i] * xs[i] * xs[i];
        CHECK(simpson_uniform(f, xs[1] - xs[0]) == Catch::Approx(0.25).epsilon(1e-14));
    }
    // two samples fall back to the trapezoid, exact for a line
    CHECK(simpson_uniform({1.0, 3.0}, 0.5) == Catch::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("uniform Simpson converges on a smooth integrand") {
    const std::size_t n = 2001;
    const std::vector<double> xs = linspace(0.0, 2.0, n);
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i)
        f[i] = std::sin(3.0 * xs[i]) * std::exp(-xs[i]);
    const double ref = oracles::adaptive_simpson(
        [](double x) { return std::sin(3.0 * x) * std::exp(-x); }, 0.0, 2.0, 1e-14);
    CHECK(simpson_uniform(f, xs[1] - xs[0]) == Catch::Approx(ref).epsilon(1e-10));
    CHECK_THROWS_AS(simpson_uniform({1.0}, 0.1), domain_error);
    CHECK_THROWS_AS(simpson_uniform({1.0, 2.0}, 0.0), domain_error);
}

TEST_CASE("Gaussian pulse yields its textbook mean, spread, and norm") {
    const ArrivalSeries s = gaussian_series(10.0, 1.0, 0.0, 20.0, 2001);
    const ArrivalDistribution d = arrival_distribution(s);
    CHECK(d.norm == Catch::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-10));
    CHECK(simpson_uniform(d.pdf, d.t_grid[1] - d.t_grid[0]) == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(mean_arrival_time(d) == Catch::Approx(10.0).margin(1e-9));
    CHECK(arrival_rms(d) == Catch::Approx(1.0).epsilon(1e-8));
    CHECK(d.X == s.X);
    CHECK(d.source == "synthetic");
}

TEST_CASE("sign of the current does not matter for the statistics") {
    const ArrivalSeries s = gaussian_series(10.0, 1.0, 0.0, 20.0, 2001, -1.0);
    const ArrivalDistribution d = arrival_distribution(s);
    CHECK(mean_arrival_time(d) == Catch::Approx(10.0).margin(1e-9));
    CHECK(arrival_rms(d) == Catch::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("truncated windows are rejected") {
    // trailing endpoint still carries e^{-2} of the peak
    CHECK_THROWS_AS(arrival_distribution(gaussian_series(10.0, 1.0, 0.0, 12.0, 1201)),
                    truncation_error);
    // leading endpoint
    CHECK_THROWS_AS(arrival_distribution(gaussian_series(2.0, 1.0, 0.0, 20.0, 2001)),
                    truncation_error);
    // endpoints fine, but a pedestal hides mass in the leading tenth
    ArrivalSeries s = gaussian_series(10.0, 1.0, 0.0, 20.0, 2001);
    for (std::size_t i = 0; i < s.t_grid.size(); ++i)
        if (s.t_grid[i] > 0.5 && s.t_grid[i] < 2.0)
            s.j[i] += 2e-8;
    CHECK_THROWS_AS(arrival_distribution(s), truncation_error);
}

TEST_CASE("tail criteria are adjustable") {
    const ArrivalSeries s = gaussian_series(10.0, 1.0, 0.0, 18.0, 1801);
    CHECK_NOTHROW(arrival_distribution(s));
    CHECK_THROWS_AS(arrival_distribution(s, {1e-12, 1e-10}), truncation_error);
}

TEST_CASE("degenerate series are rejected") {
    ArrivalSeries s = gaussian_series(10.0, 1.0, 0.0, 20.0, 101);
    s.j.assign(s.j.size(), 0.0);
    CHECK_THROWS_AS(arrival_distribution(s), domain_error);

    s = gaussian_series(10.0, 1.0, 0.0, 20.0, 101);
    s.j.pop_back();
    CHECK_THROWS_AS(arrival_distribution(s), domain_error);

    s = gaussian_series(10.0, 1.0, 0.0, 20.0, 101);
    s.t_grid[50] += 1e-3;
    CHECK_THROWS_AS(arrival_distribution(s), domain_error);

    s = gaussian_series(10.0, 1.0, 0.0, 20.0, 2);
    CHECK_THROWS_AS(arrival_distribution(s), domain_error);
}

TEST_CASE("sampling grows the window until the pulse fits") {
    const auto pulse = [](double t) {
        const double d = (t - 30.0) / 2.0;
        return std::exp(-0.5 * d * d);
    };
    const ArrivalSeries s = sample_arrival_series(75.0, pulse, 10.0, 4097, "synthetic");
    CHECK(s.t_grid.front() == 0.0);
    CHECK(s.t_grid.back() > 40.0);
    CHECK(s.source == "synthetic");
    const ArrivalDistribution d = arrival_distribution(s);
    CHECK(mean_arrival_time(d) == Catch::Approx(30.0).margin(1e-6));
    CHECK(arrival_rms(d) == Catch::Approx(2.0).epsilon(1e-6));

    CHECK_THROWS_AS(sample_arrival_series(75.0, pulse, 0.0, 4097, "synthetic"), domain_error);
    CHECK_THROWS_AS(sample_arrival_series(75.0, pulse, 10.0, 4, "synthetic"), domain_error);
}

TEST_CASE("a current that never decays is reported") {
    const auto flat = [](double) { return 1.0; };
    CHECK_THROWS_AS(sample_arrival_series(75.0, flat, 1.0, 64, "synthetic"), truncation_error);
}

TEST_CASE("classical detector statistics flow through the arrival pipeline") {
    const double mass = 5.0;
    const PacketSpec packet{2.0, wavenumber_from_velocity(mass, 4.52e-3), -50.0, 0.0};
    const ClassicalScatteringState st = classical_state(packet, {5.0, 8.0}, mass);
    const double X = 75.0;
    const ArrivalSeries s = sample_arrival_series(
        X, [&](double t) { return classical_current_at_point(st, X, t); }, 24.0, 16385,
        "classical");
    const ArrivalDistribution d = arrival_distribution(s);
    CHECK(mean_arrival_time(d) == Catch::Approx(mean_arrival_time_analytic(st, X)).epsilon(2e-8));
    CHECK(arrival_rms(d) == Catch::Approx(arrival_fluctuation(packet, st.u)).epsilon(1e-6));
}

TEST_CASE("quantum detector statistics land near the classical ones") {
    const double mass = 5.0;
    const PacketSpec packet{2.0, wavenumber_from_velocity(mass, 4.52e-3), -50.0, 0.0};
    const Barrier b{5.0, 8.0};
    const ClassicalScatteringState st = classical_state(packet, b, mass);
    const double X = 75.0;
    const ArrivalSeries s = sample_arrival_series(
        X,
        [&](double t) {
            return current_at_point(packet, b, mass, X, t, Method::stationary_phase);
        },
        24.0, 1025, "stationary-phase");
    const ArrivalDistribution d = arrival_distribution(s);
    const double tau_q = mean_arrival_time(d);
    const double tau_c = mean_arrival_time_analytic(st, X);
    CHECK(std::abs(tau_q - tau_c) < 0.5);
    CHECK(tau_q > 8.5);
    CHECK(tau_q < 11.0);
}

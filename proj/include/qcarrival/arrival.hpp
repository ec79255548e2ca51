#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qcarrival/errors.hpp"
#include "qcarrival/quadrature.hpp"

// Arrival-time statistics at a detector: the distribution is |j| normalized
// over the sampled window, so the window must actually contain the signal.

namespace qcarrival {

struct ArrivalSeries {
    double X = 0.0;             // angstrom
    std::vector<double> t_grid; // fs, uniform
    std::vector<double> j;      // 1/fs
    std::string source;
};

struct ArrivalDistribution {
    double X = 0.0;
    std::vector<double> t_grid;
    std::vector<double> pdf;  // 1/fs
    double norm = 0.0;        // integral of |j| over the window
    std::string source;
};

struct TailCriteria {
    double endpoint_eps = 1e-9; // endpoint |j| relative to the peak
    double mass_eps = 1e-8;     // |j| mass in the trailing/leading tenth
};

namespace detail {

inline double grid_spacing(const std::vector<double>& t_grid) {
    if (t_grid.size() < 3)
        throw domain_error("arrival series needs at least 3 samples");
    const double dt = (t_grid.back() - t_grid.front()) / static_cast<double>(t_grid.size() - 1);
    if (!(dt > 0.0))
        throw domain_error("arrival series needs an increasing time grid");
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const double step = t_grid[i] - t_grid[i - 1];
        if (std::abs(step - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
            throw domain_error("arrival series needs a uniform time grid");
    }
    return dt;
}

} // namespace detail

inline ArrivalDistribution arrival_distribution(const ArrivalSeries& series,
                                                const TailCriteria& criteria = {}) {
    if (series.j.size() != series.t_grid.size())
        throw domain_error("arrival series has mismatched grid and sample sizes");
    const double dt = detail::grid_spacing(series.t_grid);
    const std::size_t n = series.j.size();

    std::vector<double> mag(n);
    for (std::size_t i = 0; i < n; ++i)
        mag[i] = std::abs(series.j[i]);
    const double peak = *std::max_element(mag.begin(), mag.end());
    if (!(peak > 0.0))
        throw domain_error("arrival series is identically zero at X = "
                           + std::to_string(series.X) + " angstrom");

    if (mag.front() > criteria.endpoint_eps * peak || mag.back() > criteria.endpoint_eps * peak)
        throw truncation_error("arrival window [" + std::to_string(series.t_grid.front()) + ", "
                               + std::to_string(series.t_grid.back())
                               + "] fs truncates the current at X = " + std::to_string(series.X)
                               + " angstrom");

    const double total = simpson_uniform(mag, dt);
    const std::size_t tenth = std::max<std::size_t>(n / 10, 2);
    const std::vector<double> head(mag.begin(), mag.begin() + static_cast<std::ptrdiff_t>(tenth));
    const std::vector<double> tail(mag.end() - static_cast<std::ptrdiff_t>(tenth), mag.end());
    if (simpson_uniform(head, dt) > criteria.mass_eps * total
        || simpson_uniform(tail, dt) > criteria.mass_eps * total)
        throw truncation_error("arrival window edges at X = " + std::to_string(series.X)
                               + " angstrom still hold significant current; widen the window");

    ArrivalDistribution dist;
    dist.X = series.X;
    dist.t_grid = series.t_grid;
    dist.norm = total;
    dist.source = series.source;
    dist.pdf.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        dist.pdf[i] = mag[i] / total;
    return dist;
}

inline double mean_arrival_time(const ArrivalDistribution& dist) {
    const double dt = detail::grid_spacing(dist.t_grid);
    std::vector<double> f(dist.pdf.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = dist.t_grid[i] * dist.pdf[i];
    return simpson_uniform(f, dt);
}

inline double arrival_rms(const ArrivalDistribution& dist) {
    const double dt = detail::grid_spacing(dist.t_grid);
    const double mean = mean_arrival_time(dist);
    std::vector<double> f(dist.pdf.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double d = dist.t_grid[i] - mean;
        f[i] = d * d * dist.pdf[i];
    }
    return std::sqrt(std::max(0.0, simpson_uniform(f, dt)));
}

// Samples j(t) on [0, T], growing T geometrically until the window passes the
// tail criteria. The sampler is any callable j(t).
inline ArrivalSeries sample_arrival_series(double X, const std::function<double(double)>& j_of_t,
                                           double t_max_hint, std::size_t n_samples,
                                           const std::string& source,
                                           const TailCriteria& criteria = {}) {
    if (!(t_max_hint > 0.0))
        throw domain_error("arrival window hint must be positive");
    if (n_samples < 8)
        throw domain_error("arrival sampling needs at least 8 samples");

    double t_max = t_max_hint;
    for (int attempt = 0; attempt < 12; ++attempt) {
        ArrivalSeries series;
        series.X = X;
        series.source = source;
        series.t_grid = linspace(0.0, t_max, n_samples);
        series.j.reserve(n_samples);
        for (double t : series.t_grid)
            series.j.push_back(j_of_t(t));
        try {
            arrival_distribution(series, criteria);
            return series;
        } catch (const truncation_error&) {
            t_max *= 1.4;
        }
    }
    throw truncation_error("arrival current at X = " + std::to_string(X)
                           + " angstrom does not decay within any tried window");
}

} // namespace qcarrival

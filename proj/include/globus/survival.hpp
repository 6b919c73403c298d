#pragma once

// Normal-distribution lifetime mathematics: CDF, conditional demolition
// hazard, precomputed hazard tables and a Monte-Carlo sampler used as a
// test oracle.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "globus/core.hpp"

namespace globus {

namespace detail {
inline double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

// Largest double strictly below 1; the CDF is kept in [0, 1).
inline constexpr double kBelowOne = 1.0 - 0x1p-53;
} // namespace detail

/// P(lifetime <= T) for a normal lifetime.
///
/// With `truncate_at_zero` the distribution is renormalised to [0, inf), so
/// that P(0) == 0. The default is the plain normal CDF, whose mass below zero
/// is Phi(-3) ~ 1.35e-3 when std_dev = mean / 3.
inline double lifetime_cdf(double age, const LifetimeDistribution& dist,
                           bool truncate_at_zero = false) {
    if (!(age >= 0.0)) throw InvalidParameter("lifetime_cdf: age must be >= 0");
    const double p = detail::std_normal_cdf((age - dist.mean) / dist.std_dev);
    if (!truncate_at_zero) return std::min(p, detail::kBelowOne);
    const double p0 = detail::std_normal_cdf(-dist.mean / dist.std_dev);
    return std::clamp((p - p0) / (1.0 - p0), 0.0, detail::kBelowOne);
}

/// Conditional probability that floorspace surviving to age T-1 is
/// demolished at age T: (P_T - P_{T-1}) / (1 - P_{T-1}).
///
/// Saturates at 1 when nothing is left to survive.
inline double demolition_hazard(int age, const LifetimeDistribution& dist,
                                bool truncate_at_zero = false) {
    if (age < 1) throw InvalidParameter("demolition_hazard: age must be >= 1");
    const double prev = lifetime_cdf(age - 1, dist, truncate_at_zero);
    const double cur = lifetime_cdf(age, dist, truncate_at_zero);
    const double remaining = 1.0 - prev;
    if (remaining <= 1e-15) return 1.0;
    return std::clamp((cur - prev) / remaining, 0.0, 1.0);
}

/// Hazards indexed by integer age. Age 0 never demolishes; ages at or past
/// `max_age()` always do.
class HazardTable {
public:
    HazardTable() = default;

    HazardTable(LifetimeDistribution dist, std::vector<double> cumulative, std::vector<double> hazards)
        : dist_(dist), cumulative_(std::move(cumulative)), hazards_(std::move(hazards)) {
        if (hazards_.size() < 2) throw InvalidParameter("hazard table needs at least one age");
        for (double h : hazards_)
            if (!(h >= 0.0 && h <= 1.0)) throw InvalidParameter("hazard outside [0, 1]");
        hazards_.front() = 0.0;
        hazards_.back() = 1.0;
    }

    /// Table from explicit hazards for ages 1..n; the last entry is forced to 1.
    static HazardTable from_hazards(const std::vector<double>& by_age,
                                    LifetimeDistribution dist = {1.0, 1.0}) {
        std::vector<double> h(by_age.size() + 1, 0.0);
        std::copy(by_age.begin(), by_age.end(), h.begin() + 1);
        std::vector<double> cdf(h.size(), 0.0);
        double survive = 1.0;
        for (std::size_t t = 1; t < h.size(); ++t) {
            survive *= 1.0 - std::clamp(h[t], 0.0, 1.0);
            cdf[t] = std::min(1.0 - survive, detail::kBelowOne);
        }
        return HazardTable(dist, std::move(cdf), std::move(h));
    }

    const LifetimeDistribution& distribution() const noexcept { return dist_; }
    int max_age() const noexcept { return static_cast<int>(hazards_.size()) - 1; }
    const std::vector<double>& cumulative() const noexcept { return cumulative_; }
    const std::vector<double>& hazards() const noexcept { return hazards_; }

    double hazard(int age) const noexcept {
        if (age <= 0) return 0.0;
        if (age >= max_age()) return 1.0;
        return hazards_[static_cast<std::size_t>(age)];
    }

private:
    LifetimeDistribution dist_{};
    std::vector<double> cumulative_;
    std::vector<double> hazards_;
};

/// Hazards for ages 0..ceil(mean + 5 sd), terminal hazard forced to 1.
inline HazardTable build_hazard_table(const LifetimeDistribution& dist, bool truncate_at_zero = false) {
    make_lifetime(dist.mean, dist.std_dev);
    const int max_age = static_cast<int>(std::ceil(dist.mean + 5.0 * dist.std_dev));
    std::vector<double> cdf(static_cast<std::size_t>(max_age) + 1);
    std::vector<double> hazards(cdf.size(), 0.0);
    for (int t = 0; t <= max_age; ++t) cdf[t] = lifetime_cdf(t, dist, truncate_at_zero);
    for (int t = 1; t <= max_age; ++t) hazards[t] = demolition_hazard(t, dist, truncate_at_zero);
    return HazardTable(dist, std::move(cdf), std::move(hazards));
}

/// Empirical lifetime CDF from sorted samples.
class EmpiricalCdf {
public:
    explicit EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
        std::sort(sorted_.begin(), sorted_.end());
    }

    double operator()(double age) const {
        const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), age);
        return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
    }

    double quantile(double p) const {
        const auto n = sorted_.size();
        auto idx = static_cast<std::size_t>(std::clamp(p, 0.0, 1.0) * static_cast<double>(n - 1));
        return sorted_[idx];
    }

    double median() const { return quantile(0.5); }
    std::size_t size() const noexcept { return sorted_.size(); }
    const std::vector<double>& samples() const noexcept { return sorted_; }

private:
    std::vector<double> sorted_;
};

inline constexpr std::size_t kMinMonteCarloSamples = 10'000;

/// Draws normal lifetimes (negative draws are redrawn), so the result
/// estimates the zero-truncated CDF. Deterministic for a given seed.
inline EmpiricalCdf monte_carlo_survival(const LifetimeDistribution& dist, std::size_t n_samples,
                                         std::uint64_t seed) {
    if (n_samples < kMinMonteCarloSamples)
        throw InvalidParameter("monte_carlo_survival: need at least 10000 samples, got " +
                               std::to_string(n_samples));
    make_lifetime(dist.mean, dist.std_dev);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(dist.mean, dist.std_dev);
    std::vector<double> samples;
    samples.reserve(n_samples);
    while (samples.size() < n_samples) {
        const double x = normal(rng);
        if (x >= 0.0) samples.push_back(x);
    }
    return EmpiricalCdf(std::move(samples));
}

} // namespace globus

#ifndef EDGEMON_MATHUTIL_HPP
#define EDGEMON_MATHUTIL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "edgemon/errors.hpp"

namespace edgemon {

inline constexpr double kPi = 3.14159265358979323846;

inline double norm_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi);
}

inline double norm_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

// E[clip(X, a, b)] for X ~ N(mu, sigma), clipping (not resampling) at the
// bounds, so mass piles up at a and b.
inline double clipped_normal_mean(double mu, double sigma, double a, double b) {
    if (sigma <= 0.0) return std::clamp(mu, a, b);
    const double alpha = (a - mu) / sigma;
    const double beta = (b - mu) / sigma;
    const double mid = norm_cdf(beta) - norm_cdf(alpha);
    return a * norm_cdf(alpha) + b * (1.0 - norm_cdf(beta)) + mu * mid -
           sigma * (norm_pdf(beta) - norm_pdf(alpha));
}

// Location mu such that E[clip(N(mu, sigma), a, b)] = target. The clipped
// mean is strictly increasing in mu, so bisection converges; target must lie
// inside (a, b).
inline double solve_clipped_normal_location(double target, double sigma, double a, double b) {
    if (!(target > a && target < b))
        throw DomainError("solve_clipped_normal_location: target outside open bounds");
    if (sigma <= 0.0) return target;
    double lo = a - 10.0 * sigma;
    double hi = b + 10.0 * sigma;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (clipped_normal_mean(mid, sigma, a, b) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// E[min(|Z|, t)] for standard normal Z and t >= 0.
inline double expected_min_absnormal(double t) {
    if (t <= 0.0) return 0.0;
    return std::sqrt(2.0 / kPi) * (1.0 - std::exp(-0.5 * t * t)) + 2.0 * t * (1.0 - norm_cdf(t));
}

// Quantile of a sorted sample by linear interpolation between order
// statistics (index h = (n-1)p).
inline double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw DomainError("quantile_sorted: empty sample");
    if (sorted.size() == 1) return sorted.front();
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

inline double sample_mean(const std::vector<double>& v) {
    if (v.empty()) throw DomainError("sample_mean: empty sample");
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

// Sample standard deviation (n-1 denominator); 0 for a single observation.
inline double sample_std(const std::vector<double>& v) {
    if (v.empty()) throw DomainError("sample_std: empty sample");
    if (v.size() == 1) return 0.0;
    const double m = sample_mean(v);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

} // namespace edgemon

#endif // EDGEMON_MATHUTIL_HPP

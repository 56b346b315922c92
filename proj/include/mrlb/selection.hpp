#ifndef MRLB_SELECTION_HPP
#define MRLB_SELECTION_HPP

// Exponential weighting and roulette-wheel selection shared by the agent
// strategies: signed scores are mapped through s^x, normalised to
// percentages and drawn proportionally.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "mrlb/model.hpp"
#include "mrlb/random.hpp"

namespace mrlb {

inline constexpr double kDefaultResultSignificance = 1.02;

inline void check_significance(double s) {
    if (!(s > 1.0) || !std::isfinite(s))
        throw ConfigError("result significance must be a finite value > 1, got " + std::to_string(s));
}

/// s^x. Strictly positive and strictly increasing in x for s > 1.
inline double exp_transform(double x, double s) {
    check_significance(s);
    return std::pow(s, x);
}

/// Scales positive weights so that they sum to 100.
inline std::vector<double> normalize_to_100(std::span<const double> values) {
    if (values.empty()) throw InputError("cannot normalise an empty weight list");
    for (double v : values) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw InputError("weights must be finite and strictly positive");
    }
    const double total = std::accumulate(values.begin(), values.end(), 0.0);
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values) out.push_back(100.0 * v / total);
    return out;
}

/// normalize_to_100(exp_transform(scores)) evaluated as s^(x - max x), which
/// is the same distribution but cannot overflow for large point values.
inline std::vector<double> selection_percentages(std::span<const double> scores, double s) {
    check_significance(s);
    if (scores.empty()) throw InputError("cannot normalise an empty weight list");
    const double top = *std::ranges::max_element(scores);
    std::vector<double> weights;
    weights.reserve(scores.size());
    for (double x : scores) weights.push_back(std::pow(s, x - top));
    // the maximum maps to exactly 1, so every entry is finite; tiny entries
    // may underflow to 0, which only happens when their odds are below 1e-300
    for (auto& w : weights) w = std::max(w, std::numeric_limits<double>::min());
    return normalize_to_100(weights);
}

/// Draws index k with probability percentages[k] / sum(percentages).
inline std::size_t roulette_select(std::span<const double> percentages, RandomStream& rng) {
    if (percentages.empty()) throw InputError("roulette over an empty list");
    const double total = std::accumulate(percentages.begin(), percentages.end(), 0.0);
    const double ball = rng.uniform01() * total;
    double acc = 0.0;
    for (std::size_t k = 0; k < percentages.size(); ++k) {
        acc += percentages[k];
        if (ball < acc) return k;
    }
    // rounding left the ball past the last edge: land on the last positive slot
    for (std::size_t k = percentages.size(); k-- > 0;) {
        if (percentages[k] > 0.0) return k;
    }
    return percentages.size() - 1;
}

}  // namespace mrlb

#endif  // MRLB_SELECTION_HPP

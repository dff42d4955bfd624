#include "hyperlag/weighting.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hyperlag {

namespace {

void check_entries(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("Weighting: empty");
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument("Weighting: entries must be finite and nonnegative");
        }
    }
}

}  // namespace

Weighting::Weighting(std::vector<double> values) : values_(std::move(values)) {
    check_entries(values_);
    const double total = std::accumulate(values_.begin(), values_.end(), 0.0);
    if (std::abs(total - 1.0) > sum_tolerance) {
        throw std::invalid_argument("Weighting: entries must sum to 1");
    }
}

Weighting Weighting::normalized(std::vector<double> values) {
    check_entries(values);
    const double total = std::accumulate(values.begin(), values.end(), 0.0);
    if (!(total > 0.0)) throw std::invalid_argument("Weighting: cannot normalize a zero vector");
    for (double& v : values) v /= total;
    return Weighting(std::move(values));
}

Weighting Weighting::uniform(std::size_t n) {
    return Weighting::normalized(std::vector<double>(n, 1.0));
}

}  // namespace hyperlag

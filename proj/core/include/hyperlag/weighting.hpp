#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hyperlag {

/// A point of the standard simplex: nonnegative entries summing to 1.
class Weighting {
public:
    static constexpr double sum_tolerance = 1e-12;

    /// Takes the values as given. Throws std::invalid_argument on an empty
    /// vector, a negative or non-finite entry, or a sum off 1 by more than
    /// sum_tolerance.
    explicit Weighting(std::vector<double> values);

    /// Rescales a nonnegative vector with positive sum onto the simplex.
    static Weighting normalized(std::vector<double> values);
    static Weighting uniform(std::size_t n);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }
    operator std::span<const double>() const noexcept { return values_; }

private:
    std::vector<double> values_;
};

}  // namespace hyperlag

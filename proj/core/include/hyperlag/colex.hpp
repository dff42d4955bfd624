#pragma once

#include <cstdint>

#include "hyperlag/rset.hpp"

namespace hyperlag {

/// A is colex-less than B when max(A △ B) lies in B.
///
/// Throws std::invalid_argument when |A| != |B|.
std::strong_ordering colex_compare(const RSet& a, const RSet& b);

/// Functor form of colex_compare for sorted containers.
struct ColexLess {
    bool operator()(const RSet& a, const RSet& b) const { return colex_compare(a, b) < 0; }
};

/// Binomial coefficient in 64-bit arithmetic; throws std::overflow_error
/// when the value does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// 0-based position of A among all |A|-sets of positive integers in colex
/// order: sum over k of C(a_k - 1, k). Throws std::overflow_error past 2^64.
std::uint64_t colex_rank(const RSet& a);

/// Inverse of colex_rank for r-sets.
RSet colex_unrank(int r, std::uint64_t rank);

}  // namespace hyperlag

#include "hyperlag/colex.hpp"

#include <limits>
#include <stdexcept>

namespace hyperlag {

namespace {

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();
__extension__ using u128 = unsigned __int128;

// C(n, k), clamped to `saturated` on overflow.
std::uint64_t binomial_clamped(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > saturated) return saturated;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::strong_ordering colex_compare(const RSet& a, const RSet& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("colex_compare: sets of different cardinality");
    }
    // Walking down from the largest element, the first mismatch is
    // max(A △ B), and it belongs to whichever set holds the larger value.
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) return a[k] <=> b[k];
    }
    return std::strong_ordering::equal;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    const std::uint64_t c = binomial_clamped(n, k);
    if (c == saturated) throw std::overflow_error("binomial coefficient exceeds 64 bits");
    return c;
}

std::uint64_t colex_rank(const RSet& a) {
    std::uint64_t rank = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const std::uint64_t term = binomial(static_cast<std::uint64_t>(a[k] - 1), k + 1);
        if (rank > saturated - term) throw std::overflow_error("colex rank exceeds 64 bits");
        rank += term;
    }
    return rank;
}

RSet colex_unrank(int r, std::uint64_t rank) {
    if (r < 0) throw std::invalid_argument("colex_unrank: negative set size");
    std::vector<Vertex> elems(static_cast<std::size_t>(r));
    for (int k = r; k >= 1; --k) {
        // Largest c with C(c, k) <= rank; c >= k - 1 since C(k - 1, k) = 0.
        std::uint64_t lo = static_cast<std::uint64_t>(k - 1);
        std::uint64_t hi = lo + 1;
        while (binomial_clamped(hi, static_cast<std::uint64_t>(k)) <= rank) {
            lo = hi;
            hi = hi * 2;
        }
        while (hi - lo > 1) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            if (binomial_clamped(mid, static_cast<std::uint64_t>(k)) <= rank) lo = mid;
            else hi = mid;
        }
        rank -= binomial_clamped(lo, static_cast<std::uint64_t>(k));
        if (lo + 1 > static_cast<std::uint64_t>(std::numeric_limits<Vertex>::max())) {
            throw std::overflow_error("colex_unrank: label exceeds vertex range");
        }
        elems[static_cast<std::size_t>(k - 1)] = static_cast<Vertex>(lo + 1);
    }
    return RSet(std::move(elems));
}

}  // namespace hyperlag

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperlag/hypergraph.hpp"

namespace hyperlag::lab {

/// Isomorphism rejection is only attempted up to this many vertices.
inline constexpr int max_iso_vertices = 7;

/// Streams every m-edge subset of [n]^{(r)}, in lexicographic order of the
/// colex indices of the chosen edges.
///
/// With up_to_iso (and n <= max_iso_vertices) only graphs equal to their own
/// canonical form are produced, one per isomorphism class. Above that size
/// the stream falls back to raw enumeration and iso_rejection() is false.
class GraphEnumerator {
public:
    /// Throws std::invalid_argument when m > C(n, r).
    GraphEnumerator(int r, int n, std::uint64_t m, bool up_to_iso);

    std::optional<Hypergraph> next();

    bool iso_rejection() const noexcept { return iso_; }
    /// C(C(n, r), m), the number of edge sets before isomorphism rejection.
    std::uint64_t raw_count() const noexcept { return raw_count_; }

private:
    bool advance();
    bool is_canonical() const;

    int r_;
    int n_;
    std::uint64_t m_;
    bool iso_;
    std::uint64_t raw_count_;
    std::vector<RSet> universe_;
    std::vector<std::size_t> combo_;
    bool started_ = false;
    bool done_ = false;
    // perm_image_[p * |universe| + e] = index of the image of edge e under
    // vertex permutation p.
    std::vector<std::uint8_t> perm_image_;
    std::size_t perm_count_ = 0;
};

std::vector<Hypergraph> enumerate_graphs(int r, int n, std::uint64_t m, bool up_to_iso);

/// Bitmask of colex indices of the minimum image of g over all vertex
/// permutations. Requires n <= max_iso_vertices.
std::uint64_t canonical_mask(const Hypergraph& g);

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b);

}  // namespace hyperlag::lab

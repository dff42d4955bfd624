#include "hyperlag/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hyperlag/colex.hpp"

namespace hyperlag::lab {

namespace {

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
    try {
        return binomial(n, k);
    } catch (const std::overflow_error&) {
        return std::numeric_limits<std::uint64_t>::max();
    }
}

// perm-major table of edge images under every permutation of [n].
std::vector<std::uint8_t> permutation_images(int n, const std::vector<RSet>& universe, std::size_t& perm_count) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::uint8_t> table;
    perm_count = 0;
    do {
        for (const RSet& e : universe) {
            std::vector<Vertex> image;
            image.reserve(e.size());
            for (Vertex v : e) image.push_back(perm[static_cast<std::size_t>(v - 1)]);
            table.push_back(static_cast<std::uint8_t>(colex_rank(RSet(std::move(image)))));
        }
        ++perm_count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return table;
}

std::uint64_t min_image(const std::vector<std::uint8_t>& table, std::size_t perm_count, std::size_t universe,
                        const std::vector<std::size_t>& edges) {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t p = 0; p < perm_count; ++p) {
        const std::uint8_t* row = table.data() + p * universe;
        std::uint64_t m = 0;
        for (std::size_t e : edges) m |= std::uint64_t{1} << row[e];
        best = std::min(best, m);
    }
    return best;
}

}  // namespace

GraphEnumerator::GraphEnumerator(int r, int n, std::uint64_t m, bool up_to_iso)
    : r_(r), n_(n), m_(m), universe_(all_subsets(n, r)) {
    if (r < 2) throw std::invalid_argument("enumerate_graphs: uniformity must be at least 2");
    if (m > universe_.size()) throw std::invalid_argument("enumerate_graphs: m exceeds C(n, r)");
    raw_count_ = saturating_binomial(universe_.size(), m);
    iso_ = up_to_iso && n <= max_iso_vertices && universe_.size() <= 64;
    if (iso_) perm_image_ = permutation_images(n, universe_, perm_count_);
    combo_.resize(static_cast<std::size_t>(m));
    std::iota(combo_.begin(), combo_.end(), std::size_t{0});
}

bool GraphEnumerator::advance() {
    const std::size_t k = combo_.size();
    const std::size_t u = universe_.size();
    std::size_t q = k;
    while (q > 0 && combo_[q - 1] == u - k + q - 1) --q;
    if (q == 0) return false;
    ++combo_[q - 1];
    for (std::size_t p = q; p < k; ++p) combo_[p] = combo_[p - 1] + 1;
    return true;
}

bool GraphEnumerator::is_canonical() const {
    std::uint64_t mask = 0;
    for (std::size_t e : combo_) mask |= std::uint64_t{1} << e;
    for (std::size_t p = 0; p < perm_count_; ++p) {
        const std::uint8_t* row = perm_image_.data() + p * universe_.size();
        std::uint64_t image = 0;
        for (std::size_t e : combo_) image |= std::uint64_t{1} << row[e];
        if (image < mask) return false;
    }
    return true;
}

std::optional<Hypergraph> GraphEnumerator::next() {
    while (!done_) {
        if (!started_) {
            started_ = true;
        } else if (!advance()) {
            done_ = true;
            break;
        }
        if (iso_ && !is_canonical()) continue;
        std::vector<RSet> edges;
        edges.reserve(combo_.size());
        for (std::size_t e : combo_) edges.push_back(universe_[e]);
        return Hypergraph(r_, n_, std::move(edges));
    }
    return std::nullopt;
}

std::vector<Hypergraph> enumerate_graphs(int r, int n, std::uint64_t m, bool up_to_iso) {
    GraphEnumerator gen(r, n, m, up_to_iso);
    std::vector<Hypergraph> out;
    while (auto g = gen.next()) out.push_back(std::move(*g));
    return out;
}

std::uint64_t canonical_mask(const Hypergraph& g) {
    if (g.vertex_count() > max_iso_vertices) {
        throw std::invalid_argument("canonical_mask: too many vertices for permutation canonicalization");
    }
    const auto universe = all_subsets(g.vertex_count(), g.uniformity());
    if (universe.size() > 64) throw std::invalid_argument("canonical_mask: more than 64 possible edges");
    std::size_t perm_count = 0;
    const auto table = permutation_images(g.vertex_count(), universe, perm_count);
    std::vector<std::size_t> edges;
    for (const RSet& e : g.edges()) edges.push_back(static_cast<std::size_t>(colex_rank(e)));
    return min_image(table, perm_count, universe.size(), edges);
}

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.uniformity() != b.uniformity() || a.vertex_count() != b.vertex_count() ||
        a.edge_count() != b.edge_count()) {
        return false;
    }
    return canonical_mask(a) == canonical_mask(b);
}

}  // namespace hyperlag::lab

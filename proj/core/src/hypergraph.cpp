#include "hyperlag/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hyperlag/colex.hpp"

namespace hyperlag {

namespace {

void sort_unique_colex(std::vector<RSet>& sets, const char* what) {
    std::sort(sets.begin(), sets.end(), ColexLess{});
    auto dup = std::adjacent_find(sets.begin(), sets.end());
    if (dup != sets.end()) {
        throw std::invalid_argument(std::string(what) + ": repeated set");
    }
}

void check_vertex(const Hypergraph& g, Vertex v) {
    if (v < 1 || v > g.vertex_count()) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside [1, " +
                                    std::to_string(g.vertex_count()) + "]");
    }
}

void check_pair(const Hypergraph& g, Vertex i, Vertex j) {
    check_vertex(g, i);
    check_vertex(g, j);
    if (i == j) throw std::invalid_argument("vertex pair must be distinct");
}

// All k-subsets of [n] avoiding the excluded labels, in colex order.
std::vector<RSet> subsets_avoiding(int n, int k, const std::vector<Vertex>& excluded) {
    std::vector<Vertex> pool;
    for (Vertex v = 1; v <= n; ++v) {
        if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) pool.push_back(v);
    }
    std::vector<RSet> out;
    if (k < 0 || static_cast<std::size_t>(k) > pool.size()) return out;
    for (const RSet& idx : all_subsets(static_cast<int>(pool.size()), k)) {
        std::vector<Vertex> elems;
        elems.reserve(idx.size());
        for (Vertex p : idx) elems.push_back(pool[static_cast<std::size_t>(p - 1)]);
        out.emplace_back(std::move(elems));
    }
    return out;
}

}  // namespace

SetFamily::SetFamily(int uniformity, std::vector<RSet> sets)
    : uniformity_(uniformity), sets_(std::move(sets)) {
    if (uniformity_ < 0) throw std::invalid_argument("SetFamily: negative uniformity");
    for (const RSet& s : sets_) {
        if (s.size() != static_cast<std::size_t>(uniformity_)) {
            throw std::invalid_argument("SetFamily: set of wrong size");
        }
    }
    sort_unique_colex(sets_, "SetFamily");
}

bool SetFamily::contains(const RSet& s) const {
    if (s.size() != static_cast<std::size_t>(uniformity_)) return false;
    return std::binary_search(sets_.begin(), sets_.end(), s, ColexLess{});
}

Hypergraph::Hypergraph(int r, int n, std::vector<RSet> edges)
    : r_(r), n_(n), edges_(std::move(edges)) {
    if (r_ < 2) throw std::invalid_argument("Hypergraph: uniformity must be at least 2");
    if (n_ < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
    for (const RSet& e : edges_) {
        if (e.size() != static_cast<std::size_t>(r_)) {
            throw std::invalid_argument("Hypergraph: edge does not have r elements");
        }
        if (e.back() > n_) throw std::invalid_argument("Hypergraph: edge label exceeds n");
    }
    sort_unique_colex(edges_, "Hypergraph");
}

bool Hypergraph::contains(const RSet& e) const {
    if (e.size() != static_cast<std::size_t>(r_)) return false;
    return std::binary_search(edges_.begin(), edges_.end(), e, ColexLess{});
}

std::size_t Hypergraph::degree(Vertex v) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [v](const RSet& e) { return e.contains(v); }));
}

Hypergraph Hypergraph::with_vertex_count(int n) const {
    return Hypergraph(r_, n, edges_);
}

std::vector<RSet> all_subsets(int n, int r) {
    std::vector<RSet> out;
    if (r < 0 || n < r) return out;
    out.reserve(static_cast<std::size_t>(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r))));
    // Colex successor: bump the lowest element that can move up and reset
    // the ones below it to 1, 2, ...
    std::vector<Vertex> cur(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) cur[static_cast<std::size_t>(k)] = k + 1;
    while (true) {
        out.emplace_back(cur);
        int k = 0;
        while (k < r && cur[static_cast<std::size_t>(k)] + 1 ==
                            (k + 1 < r ? cur[static_cast<std::size_t>(k + 1)] : n + 1)) {
            ++k;
        }
        if (k == r) break;
        ++cur[static_cast<std::size_t>(k)];
        for (int q = 0; q < k; ++q) cur[static_cast<std::size_t>(q)] = q + 1;
    }
    return out;
}

Hypergraph make_colex_graph(int r, std::uint64_t m) {
    if (r < 2) throw std::invalid_argument("make_colex_graph: uniformity must be at least 2");
    std::vector<RSet> edges;
    edges.reserve(static_cast<std::size_t>(m));
    int n = r;
    for (std::uint64_t k = 0; k < m; ++k) {
        edges.push_back(colex_unrank(r, k));
        n = std::max(n, edges.back().back());
    }
    return Hypergraph(r, n, std::move(edges));
}

Hypergraph make_complete(int t, int r) {
    if (t < r) throw std::invalid_argument("make_complete: t must be at least r");
    return Hypergraph(r, t, all_subsets(t, r));
}

SetFamily link(const Hypergraph& g, Vertex i) {
    check_vertex(g, i);
    std::vector<RSet> sets;
    for (const RSet& e : g.edges()) {
        if (e.contains(i)) sets.push_back(e.without(i));
    }
    return SetFamily(g.uniformity() - 1, std::move(sets));
}

SetFamily pair_link(const Hypergraph& g, Vertex i, Vertex j) {
    check_pair(g, i, j);
    std::vector<RSet> sets;
    for (const RSet& e : g.edges()) {
        if (e.contains(i) && e.contains(j)) sets.push_back(e.without(i).without(j));
    }
    return SetFamily(g.uniformity() - 2, std::move(sets));
}

SetFamily link_complement(const Hypergraph& g, Vertex i) {
    check_vertex(g, i);
    std::vector<RSet> sets;
    for (RSet& a : subsets_avoiding(g.vertex_count(), g.uniformity() - 1, {i})) {
        if (!g.contains(a.with(i))) sets.push_back(std::move(a));
    }
    return SetFamily(g.uniformity() - 1, std::move(sets));
}

SetFamily pair_link_complement(const Hypergraph& g, Vertex i, Vertex j) {
    check_pair(g, i, j);
    std::vector<RSet> sets;
    for (RSet& b : subsets_avoiding(g.vertex_count(), g.uniformity() - 2, {i, j})) {
        if (!g.contains(b.with(i).with(j))) sets.push_back(std::move(b));
    }
    return SetFamily(g.uniformity() - 2, std::move(sets));
}

SetFamily link_difference(const Hypergraph& g, Vertex i, Vertex j) {
    check_pair(g, i, j);
    // A ∈ E_i with j ∉ A and A ∪ {j} ∉ E.
    std::vector<RSet> sets;
    for (const RSet& e : g.edges()) {
        if (!e.contains(i) || e.contains(j)) continue;
        RSet a = e.without(i);
        if (!g.contains(a.with(j))) sets.push_back(std::move(a));
    }
    return SetFamily(g.uniformity() - 1, std::move(sets));
}

}  // namespace hyperlag

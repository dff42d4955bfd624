#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperlag/rset.hpp"

namespace hyperlag {

/// A family of equal-size sets over [n], kept in colex order without
/// duplicates. Used for the lower-uniformity neighbourhoods of a hypergraph.
class SetFamily {
public:
    SetFamily(int uniformity, std::vector<RSet> sets);

    int uniformity() const noexcept { return uniformity_; }
    std::span<const RSet> sets() const noexcept { return sets_; }
    std::size_t size() const noexcept { return sets_.size(); }
    bool empty() const noexcept { return sets_.empty(); }
    bool contains(const RSet& s) const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    int uniformity_;
    std::vector<RSet> sets_;
};

/// An r-uniform hypergraph on the vertex set [n].
///
/// Immutable after construction. Edges are stored in increasing colex order,
/// which fixes both iteration and serialization order.
class Hypergraph {
public:
    /// Throws std::invalid_argument when r < 2, an edge has the wrong size, a
    /// label exceeds n, or an edge is repeated.
    Hypergraph(int r, int n, std::vector<RSet> edges);

    int uniformity() const noexcept { return r_; }
    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const RSet> edges() const noexcept { return edges_; }
    bool empty() const noexcept { return edges_.empty(); }

    bool contains(const RSet& e) const;
    /// Number of edges containing v.
    std::size_t degree(Vertex v) const;

    /// Same edges on a larger vertex set.
    Hypergraph with_vertex_count(int n) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int r_;
    int n_;
    std::vector<RSet> edges_;
};

/// C_{r,m}: the first m r-sets in colex order. For m = 0 the vertex count is r.
Hypergraph make_colex_graph(int r, std::uint64_t m);

/// [t]^{(r)}. Throws std::invalid_argument when t < r.
Hypergraph make_complete(int t, int r);

/// All r-subsets of [n] in colex order.
std::vector<RSet> all_subsets(int n, int r);

// Neighbourhoods. Vertices must lie in [n] and pairs must be distinct;
// otherwise std::invalid_argument.

/// E_i = {A : A ∪ {i} ∈ E}, an (r-1)-uniform family.
SetFamily link(const Hypergraph& g, Vertex i);
/// E_ij = {B : B ∪ {i, j} ∈ E}, an (r-2)-uniform family.
SetFamily pair_link(const Hypergraph& g, Vertex i, Vertex j);
/// E_i^c = {A ∈ V^{(r-1)} : A ∪ {i} ∈ V^{(r)} \ E}.
SetFamily link_complement(const Hypergraph& g, Vertex i);
/// E_ij^c = {B ∈ V^{(r-2)} : B ∪ {i, j} ∈ V^{(r)} \ E}.
SetFamily pair_link_complement(const Hypergraph& g, Vertex i, Vertex j);
/// E_{i\j} = E_i ∩ E_j^c.
SetFamily link_difference(const Hypergraph& g, Vertex i, Vertex j);

}  // namespace hyperlag

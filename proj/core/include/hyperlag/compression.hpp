#pragma once

#include "hyperlag/hypergraph.hpp"

namespace hyperlag {

/// How two equal-size sets sit in the descendant order.
///
/// e is a descendant of f when e_s <= f_s coordinatewise and sum(e) < sum(f);
/// it is a direct descendant when additionally sum(f) = sum(e) + 1.
enum class DescendantRelation {
    none,
    descendant,
    direct_descendant,
    ancestor,
    direct_ancestor,
    equal,
};

/// Relation of e to f. Throws std::invalid_argument when |e| != |f|.
DescendantRelation descendant_relation(const RSet& e, const RSet& f);

const char* to_string(DescendantRelation rel) noexcept;

/// True when e is a (possibly indirect) descendant of f.
bool is_descendant(const RSet& e, const RSet& f);

/// All valid descendants of e (positive, strictly increasing, coordinatewise
/// below e, different from e), in colex order.
std::vector<RSet> descendants(const RSet& e);

/// Closed under coordinatewise-decreasing replacement of edges.
bool is_left_compressed(const Hypergraph& g);

/// The (i, j)-shift: each edge containing j but not i moves to
/// (e \ {j}) ∪ {i} unless that set is already an edge. Requires
/// 1 <= i < j <= n.
Hypergraph compress(const Hypergraph& g, Vertex i, Vertex j);

/// One pass of compress over all pairs i < j in lexicographic order.
Hypergraph compress_sweep(const Hypergraph& g);

/// Repeats compress_sweep until nothing changes. The result is left-compressed.
Hypergraph compress_to_fixpoint(const Hypergraph& g);

/// Pushes edges down the descendant order on [t] while avoiding the set
/// (t-r)...(t-1).
///
/// First, if (t-r)...(t-1) is an edge it is swapped for the colex-smallest
/// missing r-subset of [t-1]. Then, while some edge has a missing descendant
/// other than (t-r)...(t-1), the colex-first such edge is replaced by its
/// colex-smallest missing descendant (which is minimal in the descendant
/// order). The edge count is preserved.
///
/// Throws precondition_error when g is not on [t] or contains [t-1]^{(r)}.
Hypergraph normalize_left_compressed(const Hypergraph& g, int t);

}  // namespace hyperlag

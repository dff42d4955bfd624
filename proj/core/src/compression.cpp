#include "hyperlag/compression.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hyperlag/colex.hpp"
#include "hyperlag/errors.hpp"

namespace hyperlag {

namespace {

using EdgeSet = std::set<RSet, ColexLess>;

bool dominated(const RSet& e, const RSet& f) {
    for (std::size_t s = 0; s < e.size(); ++s) {
        if (e[s] > f[s]) return false;
    }
    return true;
}

void collect_descendants(const RSet& top, std::size_t pos, std::vector<Vertex>& cur,
                         std::vector<RSet>& out) {
    if (pos == top.size()) {
        out.emplace_back(cur);
        return;
    }
    const Vertex low = pos == 0 ? 1 : cur[pos - 1] + 1;
    for (Vertex v = low; v <= top[pos]; ++v) {
        cur.push_back(v);
        collect_descendants(top, pos + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

DescendantRelation descendant_relation(const RSet& e, const RSet& f) {
    if (e.size() != f.size()) {
        throw std::invalid_argument("descendant_relation: sets of different cardinality");
    }
    if (e == f) return DescendantRelation::equal;
    if (dominated(e, f)) {
        return f.sum() == e.sum() + 1 ? DescendantRelation::direct_descendant
                                      : DescendantRelation::descendant;
    }
    if (dominated(f, e)) {
        return e.sum() == f.sum() + 1 ? DescendantRelation::direct_ancestor
                                      : DescendantRelation::ancestor;
    }
    return DescendantRelation::none;
}

const char* to_string(DescendantRelation rel) noexcept {
    switch (rel) {
        case DescendantRelation::none: return "none";
        case DescendantRelation::descendant: return "descendant";
        case DescendantRelation::direct_descendant: return "direct-descendant";
        case DescendantRelation::ancestor: return "ancestor";
        case DescendantRelation::direct_ancestor: return "direct-ancestor";
        case DescendantRelation::equal: return "equal";
    }
    return "none";
}

bool is_descendant(const RSet& e, const RSet& f) {
    const auto rel = descendant_relation(e, f);
    return rel == DescendantRelation::descendant || rel == DescendantRelation::direct_descendant;
}

std::vector<RSet> descendants(const RSet& e) {
    std::vector<RSet> out;
    std::vector<Vertex> cur;
    cur.reserve(e.size());
    collect_descendants(e, 0, cur, out);
    std::erase(out, e);
    std::sort(out.begin(), out.end(), ColexLess{});
    return out;
}

bool is_left_compressed(const Hypergraph& g) {
    // Closure under single-coordinate decrements is enough: every descendant
    // is reachable through a chain of them.
    for (const RSet& e : g.edges()) {
        std::vector<Vertex> elems(e.begin(), e.end());
        for (std::size_t s = 0; s < elems.size(); ++s) {
            const Vertex floor = s == 0 ? 0 : elems[s - 1];
            if (elems[s] - 1 <= floor) continue;
            --elems[s];
            const bool present = g.contains(RSet(elems));
            ++elems[s];
            if (!present) return false;
        }
    }
    return true;
}

Hypergraph compress(const Hypergraph& g, Vertex i, Vertex j) {
    if (i < 1 || j > g.vertex_count() || i >= j) {
        throw std::invalid_argument("compress: requires 1 <= i < j <= n");
    }
    std::vector<RSet> out;
    out.reserve(g.edge_count());
    for (const RSet& e : g.edges()) {
        if (e.contains(j) && !e.contains(i)) {
            RSet image = e.without(j).with(i);
            if (!g.contains(image)) {
                out.push_back(std::move(image));
                continue;
            }
        }
        out.push_back(e);
    }
    return Hypergraph(g.uniformity(), g.vertex_count(), std::move(out));
}

Hypergraph compress_sweep(const Hypergraph& g) {
    Hypergraph cur = g;
    for (Vertex i = 1; i <= g.vertex_count(); ++i) {
        for (Vertex j = i + 1; j <= g.vertex_count(); ++j) cur = compress(cur, i, j);
    }
    return cur;
}

Hypergraph compress_to_fixpoint(const Hypergraph& g) {
    Hypergraph cur = g;
    while (true) {
        Hypergraph next = compress_sweep(cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

Hypergraph normalize_left_compressed(const Hypergraph& g, int t) {
    const int r = g.uniformity();
    if (g.vertex_count() > t) {
        throw precondition_error("normalize_left_compressed: graph has vertices beyond [t]");
    }
    if (t < r + 1) throw precondition_error("normalize_left_compressed: requires t >= r + 1");

    std::vector<Vertex> forbidden_elems;
    for (Vertex v = t - r; v <= t - 1; ++v) forbidden_elems.push_back(v);
    const RSet forbidden(forbidden_elems);

    EdgeSet edges(g.edges().begin(), g.edges().end());
    const auto lower_clique = all_subsets(t - 1, r);

    if (edges.contains(forbidden)) {
        auto missing = std::find_if(lower_clique.begin(), lower_clique.end(),
                                    [&](const RSet& s) { return !edges.contains(s); });
        if (missing == lower_clique.end()) {
            throw precondition_error("normalize_left_compressed: graph contains [t-1]^(r)");
        }
        edges.erase(forbidden);
        edges.insert(*missing);
    } else if (std::all_of(lower_clique.begin(), lower_clique.end(),
                           [&](const RSet& s) { return edges.contains(s); })) {
        throw precondition_error("normalize_left_compressed: graph contains [t-1]^(r)");
    }

    // Each replacement lowers the total label sum, so this terminates.
    while (true) {
        bool replaced = false;
        for (const RSet& e : edges) {
            for (const RSet& d : descendants(e)) {
                if (d == forbidden || edges.contains(d)) continue;
                const RSet old = e;
                edges.erase(old);
                edges.insert(d);
                replaced = true;
                break;
            }
            if (replaced) break;
        }
        if (!replaced) break;
    }
    return Hypergraph(r, t, std::vector<RSet>(edges.begin(), edges.end()));
}

}  // namespace hyperlag

#include "hyperlag/clique.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "hyperlag/colex.hpp"

namespace hyperlag {

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v - 1); }

// Branch and bound over vertex subsets. `clique` always spans a complete
// r-graph (vacuously so below r vertices) and every candidate extends it.
class CliqueSearch {
public:
    explicit CliqueSearch(const Hypergraph& g) : r_(g.uniformity()), n_(g.vertex_count()) {
        if (n_ > 64) throw std::invalid_argument("clique search supports at most 64 vertices");
        degree_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (const RSet& e : g.edges()) {
            std::uint64_t m = 0;
            for (Vertex v : e) {
                m |= bit(v);
                ++degree_[static_cast<std::size_t>(v)];
            }
            edges_.insert(m);
        }
        for (Vertex v = 1; v <= n_; ++v) order_.push_back(v);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
            return degree_[static_cast<std::size_t>(a)] > degree_[static_cast<std::size_t>(b)];
        });
    }

    /// Largest clique found; when `target` > 0 the search stops at the first
    /// clique of that order.
    std::vector<Vertex> run(std::vector<Vertex> seed, int target) {
        best_ = std::move(seed);
        target_ = target;
        std::vector<Vertex> clique;
        expand(clique, filter_by_degree(order_));
        return best_;
    }

    /// Greedy clique grown from the edge with the largest degree sum.
    std::vector<Vertex> greedy(const Hypergraph& g) const {
        std::vector<Vertex> clique;
        std::size_t best_sum = 0;
        for (const RSet& e : g.edges()) {
            std::size_t s = 0;
            for (Vertex v : e) s += degree_[static_cast<std::size_t>(v)];
            if (clique.empty() || s > best_sum) {
                best_sum = s;
                clique.assign(e.begin(), e.end());
            }
        }
        if (clique.empty()) return clique;
        for (Vertex v : order_) {
            if (std::find(clique.begin(), clique.end(), v) != clique.end()) continue;
            if (extends(clique, v)) clique.push_back(v);
        }
        std::sort(clique.begin(), clique.end());
        return clique;
    }

private:
    bool done() const { return target_ > 0 && static_cast<int>(best_.size()) >= target_; }

    // Smallest order a clique must reach to be worth finding.
    int goal() const { return target_ > 0 ? target_ : static_cast<int>(best_.size()) + 1; }

    std::vector<Vertex> filter_by_degree(const std::vector<Vertex>& cands) const {
        const int q = goal();
        if (q < r_) return cands;
        const std::uint64_t need = binomial(static_cast<std::uint64_t>(q - 1), static_cast<std::uint64_t>(r_ - 1));
        std::vector<Vertex> out;
        for (Vertex v : cands) {
            if (degree_[static_cast<std::size_t>(v)] >= need) out.push_back(v);
        }
        return out;
    }

    // Every r-subset of clique ∪ {v} that contains v is an edge.
    bool extends(const std::vector<Vertex>& clique, Vertex v) const {
        return all_subsets_present(clique, r_ - 1, bit(v));
    }

    // Every r-subset of clique ∪ {u, v} containing both u and v is an edge.
    bool extends_pair(const std::vector<Vertex>& clique, Vertex v, Vertex u) const {
        return all_subsets_present(clique, r_ - 2, bit(v) | bit(u));
    }

    bool all_subsets_present(const std::vector<Vertex>& pool, int k, std::uint64_t fixed) const {
        if (k < 0 || static_cast<std::size_t>(k) > pool.size()) return true;
        std::vector<std::size_t> idx(static_cast<std::size_t>(k));
        for (std::size_t q = 0; q < idx.size(); ++q) idx[q] = q;
        while (true) {
            std::uint64_t m = fixed;
            for (std::size_t q : idx) m |= bit(pool[q]);
            if (!edges_.contains(m)) return false;
            std::size_t q = idx.size();
            while (q > 0 && idx[q - 1] == pool.size() - idx.size() + q - 1) --q;
            if (q == 0) return true;
            ++idx[q - 1];
            for (std::size_t p = q; p < idx.size(); ++p) idx[p] = idx[p - 1] + 1;
        }
    }

    void expand(std::vector<Vertex>& clique, const std::vector<Vertex>& cands) {
        for (std::size_t k = 0; k < cands.size(); ++k) {
            if (done()) return;
            if (static_cast<int>(clique.size() + cands.size() - k) < goal()) return;
            const Vertex v = cands[k];
            std::vector<Vertex> next;
            for (std::size_t q = k + 1; q < cands.size(); ++q) {
                if (extends_pair(clique, v, cands[q])) next.push_back(cands[q]);
            }
            clique.push_back(v);
            if (static_cast<int>(clique.size()) >= r_ && clique.size() > best_.size()) {
                best_ = clique;
                std::sort(best_.begin(), best_.end());
            }
            if (!done()) expand(clique, filter_by_degree(next));
            clique.pop_back();
        }
    }

    int r_;
    int n_;
    int target_ = 0;
    std::unordered_set<std::uint64_t> edges_;
    std::vector<std::size_t> degree_;
    std::vector<Vertex> order_;
    std::vector<Vertex> best_;
};

}  // namespace

bool is_clique(const Hypergraph& g, const std::vector<Vertex>& vertices) {
    const int r = g.uniformity();
    if (static_cast<int>(vertices.size()) < r) return true;
    const RSet pool(vertices);
    for (const RSet& idx : all_subsets(static_cast<int>(pool.size()), r)) {
        std::vector<Vertex> elems;
        for (Vertex p : idx) elems.push_back(pool[static_cast<std::size_t>(p - 1)]);
        if (!g.contains(RSet(std::move(elems)))) return false;
    }
    return true;
}

std::optional<std::vector<Vertex>> has_clique_of_order(const Hypergraph& g, int t) {
    if (t < g.uniformity()) throw std::invalid_argument("has_clique_of_order: t must be at least r");
    if (t > g.vertex_count()) {
        if (g.vertex_count() > 64) throw std::invalid_argument("clique search supports at most 64 vertices");
        return std::nullopt;
    }
    CliqueSearch search(g);
    std::vector<Vertex> found = search.run({}, t);
    if (static_cast<int>(found.size()) < t) return std::nullopt;
    found.resize(static_cast<std::size_t>(t));
    std::sort(found.begin(), found.end());
    if (!is_clique(g, found)) throw std::logic_error("has_clique_of_order: witness failed verification");
    return found;
}

CliqueResult max_clique_order(const Hypergraph& g) {
    CliqueSearch search(g);
    CliqueResult res;
    if (g.empty()) return res;
    res.witness = search.run(search.greedy(g), 0);
    res.order = static_cast<int>(res.witness.size());
    if (!is_clique(g, res.witness)) throw std::logic_error("max_clique_order: witness failed verification");
    return res;
}

}  // namespace hyperlag

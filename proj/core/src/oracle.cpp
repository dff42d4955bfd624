#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "hyperlag/lagrangian.hpp"

namespace hyperlag {

namespace {

constexpr int refine_iterations = 20000;
constexpr double refine_tolerance = 1e-15;

Weighting refine(const Hypergraph& g, Weighting x) {
    for (int it = 0; it < refine_iterations; ++it) {
        Weighting next = growth_step(g, x);
        double delta = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) delta = std::max(delta, std::abs(next[i] - x[i]));
        x = std::move(next);
        if (delta <= refine_tolerance) break;
    }
    return x;
}

// Calls fn on every composition of `total` into `parts` positive integers.
template <typename Fn>
void for_each_positive_composition(int total, int parts, std::vector<int>& cur, Fn&& fn) {
    if (parts == 1) {
        cur.push_back(total);
        fn(cur);
        cur.pop_back();
        return;
    }
    for (int first = 1; first <= total - (parts - 1); ++first) {
        cur.push_back(first);
        for_each_positive_composition(total - first, parts - 1, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

OptResult oracle_maximize(const Hypergraph& g, int depth) {
    const int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("oracle_maximize: too many vertices for exhaustive search");
    if (g.empty() || n == 0) {
        return n == 0 ? OptResult{} : describe_weighting(g, Weighting::uniform(static_cast<std::size_t>(n)));
    }

    std::vector<std::uint32_t> edge_masks;
    for (const RSet& e : g.edges()) {
        std::uint32_t m = 0;
        for (Vertex v : e) m |= 1u << (v - 1);
        edge_masks.push_back(m);
    }

    double best_value = -1.0;
    std::vector<double> best_x;
    const auto consider = [&](const Weighting& start) {
        Weighting x = refine(g, start);
        const double value = evaluate(g, x);
        if (value > best_value) {
            best_value = value;
            best_x.assign(x.values().begin(), x.values().end());
        }
    };

    for (std::uint32_t support = 1; support < (1u << n); ++support) {
        const bool has_edge = std::any_of(edge_masks.begin(), edge_masks.end(),
                                          [&](std::uint32_t m) { return (m & support) == m; });
        if (!has_edge) continue;
        std::vector<std::size_t> members;
        for (int v = 0; v < n; ++v) {
            if (support & (1u << v)) members.push_back(static_cast<std::size_t>(v));
        }
        std::vector<double> x(static_cast<std::size_t>(n), 0.0);
        for (std::size_t v : members) x[v] = 1.0;
        consider(Weighting::normalized(x));

        const int parts = static_cast<int>(members.size());
        if (depth >= parts) {
            std::vector<int> cur;
            for_each_positive_composition(depth, parts, cur, [&](const std::vector<int>& comp) {
                std::vector<double> y(static_cast<std::size_t>(n), 0.0);
                for (std::size_t k = 0; k < members.size(); ++k) y[members[k]] = comp[k];
                consider(Weighting::normalized(std::move(y)));
            });
        }
    }
    OptResult res = describe_weighting(g, Weighting::normalized(best_x));
    res.converged = true;
    return res;
}

}  // namespace hyperlag

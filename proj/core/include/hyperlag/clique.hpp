#pragma once

#include <optional>
#include <vector>

#include "hyperlag/hypergraph.hpp"

namespace hyperlag {

struct CliqueResult {
    /// Largest t such that some t vertices span a complete r-graph; 0 for a
    /// graph without edges.
    int order = 0;
    std::vector<Vertex> witness;
};

/// True when every r-subset of `vertices` is an edge of g.
bool is_clique(const Hypergraph& g, const std::vector<Vertex>& vertices);

/// A t-subset of [n] spanning a complete r-graph, if one exists.
/// Throws std::invalid_argument when t < r or n > 64.
std::optional<std::vector<Vertex>> has_clique_of_order(const Hypergraph& g, int t);

/// Exact maximum clique by branch and bound (intended for n <= 20, supports
/// n <= 64). Throws std::invalid_argument when n > 64.
CliqueResult max_clique_order(const Hypergraph& g);

}  // namespace hyperlag

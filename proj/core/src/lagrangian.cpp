#include "hyperlag/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperlag/compression.hpp"
#include "hyperlag/errors.hpp"

namespace hyperlag {

namespace {

void check_length(const Hypergraph& g, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw std::invalid_argument("weighting has " + std::to_string(x.size()) +
                                    " entries, graph has " + std::to_string(g.vertex_count()) +
                                    " vertices");
    }
}

double product(const RSet& s, std::span<const double> x) {
    double p = 1.0;
    for (Vertex v : s) p *= x[static_cast<std::size_t>(v - 1)];
    return p;
}

}  // namespace

double evaluate(const Hypergraph& g, std::span<const double> x) {
    check_length(g, x);
    double total = 0.0;
    for (const RSet& e : g.edges()) total += product(e, x);
    return total;
}

double family_value(const SetFamily& f, std::span<const double> x) {
    double total = 0.0;
    for (const RSet& s : f.sets()) {
        if (!s.empty() && static_cast<std::size_t>(s.back()) > x.size()) {
            throw std::invalid_argument("family_value: weighting too short");
        }
        total += product(s, x);
    }
    return total;
}

double link_value(const Hypergraph& g, Vertex i, std::span<const double> x) {
    check_length(g, x);
    if (i < 1 || i > g.vertex_count()) throw std::invalid_argument("link_value: vertex out of range");
    double total = 0.0;
    for (const RSet& e : g.edges()) {
        if (!e.contains(i)) continue;
        double p = 1.0;
        for (Vertex v : e) {
            if (v != i) p *= x[static_cast<std::size_t>(v - 1)];
        }
        total += p;
    }
    return total;
}

std::vector<double> link_values(const Hypergraph& g, std::span<const double> x) {
    check_length(g, x);
    std::vector<double> out(x.size(), 0.0);
    const std::size_t r = static_cast<std::size_t>(g.uniformity());
    std::vector<double> prefix(r + 1);
    for (const RSet& e : g.edges()) {
        // Products of the other coordinates via prefix/suffix products, which
        // stay exact when some weights are zero.
        prefix[0] = 1.0;
        for (std::size_t k = 0; k < r; ++k) prefix[k + 1] = prefix[k] * x[static_cast<std::size_t>(e[k] - 1)];
        double suffix = 1.0;
        for (std::size_t k = r; k-- > 0;) {
            out[static_cast<std::size_t>(e[k] - 1)] += prefix[k] * suffix;
            suffix *= x[static_cast<std::size_t>(e[k] - 1)];
        }
    }
    return out;
}

Weighting growth_step(const Hypergraph& g, const Weighting& x) {
    const double value = evaluate(g, x);
    if (!(value > 0.0)) throw degenerate_start_error("growth_step: λ(G, x) = 0");
    const std::vector<double> links = link_values(g, x);
    const double scale = 1.0 / (g.uniformity() * value);
    std::vector<double> next(x.size());
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = x[i] * links[i] * scale;
    return Weighting::normalized(std::move(next));
}

void SolverOptions::validate() const {
    if (max_iterations <= 0) throw std::invalid_argument("SolverOptions: max_iterations must be positive");
    if (!(convergence_tolerance > 0.0)) throw std::invalid_argument("SolverOptions: convergence_tolerance must be positive");
    if (restarts < 0) throw std::invalid_argument("SolverOptions: restarts must be nonnegative");
    if (!(support_threshold > 0.0)) throw std::invalid_argument("SolverOptions: support_threshold must be positive");
}

OptResult describe_weighting(const Hypergraph& g, const Weighting& x, double support_threshold) {
    OptResult res;
    res.weighting = x;
    res.lambda_value = evaluate(g, x);
    const std::vector<double> links = link_values(g, x);
    const double target = g.uniformity() * res.lambda_value;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        if (x[static_cast<std::size_t>(v - 1)] > support_threshold) {
            res.support.push_back(v);
            res.kkt_residual = std::max(res.kkt_residual, std::abs(links[static_cast<std::size_t>(v - 1)] - target));
        }
    }
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    std::vector<char> covered(n * n, 0);
    for (const RSet& e : g.edges()) {
        for (std::size_t a = 0; a < e.size(); ++a) {
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                covered[static_cast<std::size_t>(e[a] - 1) * n + static_cast<std::size_t>(e[b] - 1)] = 1;
            }
        }
    }
    for (std::size_t a = 0; a < res.support.size() && res.pair_cover_ok; ++a) {
        for (std::size_t b = a + 1; b < res.support.size(); ++b) {
            const auto i = static_cast<std::size_t>(res.support[a] - 1);
            const auto j = static_cast<std::size_t>(res.support[b] - 1);
            if (!covered[i * n + j]) {
                res.pair_cover_ok = false;
                break;
            }
        }
    }
    return res;
}

GapCheck remark_gap_check(const Hypergraph& g, const Weighting& x, double tol) {
    if (!is_left_compressed(g)) throw precondition_error("remark_gap_check: graph is not left-compressed");
    if (x.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw std::invalid_argument("remark_gap_check: weighting length mismatch");
    }
    constexpr double support_threshold = 1e-9;
    GapCheck out;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (x[i + 1] > x[i] + tol) out.non_increasing = false;
    }
    for (Vertex i = 1; i <= g.vertex_count(); ++i) {
        if (x[static_cast<std::size_t>(i - 1)] <= support_threshold) continue;
        for (Vertex j = i + 1; j <= g.vertex_count(); ++j) {
            if (x[static_cast<std::size_t>(j - 1)] <= support_threshold) continue;
            const double pair = family_value(pair_link(g, i, j), x);
            if (!(pair > 0.0)) continue;
            const double diff = family_value(link_difference(g, i, j), x);
            const double gap = x[static_cast<std::size_t>(i - 1)] - x[static_cast<std::size_t>(j - 1)];
            out.max_residual = std::max(out.max_residual, std::abs(gap - diff / pair));
        }
    }
    return out;
}

}  // namespace hyperlag

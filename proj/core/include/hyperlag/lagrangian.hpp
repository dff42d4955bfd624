#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/weighting.hpp"

namespace hyperlag {

/// λ(G, x): sum over edges of the product of the edge's vertex weights.
/// Throws std::invalid_argument when x.size() != n.
double evaluate(const Hypergraph& g, std::span<const double> x);

/// Same polynomial for a lower-uniformity family; the empty set contributes 1.
double family_value(const SetFamily& f, std::span<const double> x);

/// λ(E_i, x), the partial derivative of λ(G, x) in coordinate i.
double link_value(const Hypergraph& g, Vertex i, std::span<const double> x);

/// All partial derivatives at once; entry v-1 holds λ(E_v, x).
std::vector<double> link_values(const Hypergraph& g, std::span<const double> x);

/// Multiplicative update x_i <- x_i λ(E_i, x) / (r λ(G, x)). It never
/// decreases λ(G, ·). Throws degenerate_start_error when λ(G, x) = 0.
Weighting growth_step(const Hypergraph& g, const Weighting& x);

struct SolverOptions {
    int max_iterations = 20000;
    /// Stops a growth run once no coordinate moves by more than this, and is
    /// the largest λ loss accepted when pruning the support.
    double convergence_tolerance = 1e-13;
    int restarts = 8;
    double support_threshold = 1e-9;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

struct OptResult {
    double lambda_value = 0.0;
    Weighting weighting = Weighting::uniform(1);
    /// 1-based vertices with weight above the support threshold.
    std::vector<Vertex> support;
    /// max over the support of |λ(E_i, x) - r λ|.
    double kkt_residual = 0.0;
    /// Every pair of support vertices lies in a common edge.
    bool pair_cover_ok = true;
    long long iterations = 0;
    bool converged = true;
    int restarts_used = 0;
};

/// Estimates λ(G) with restarted growth iterations.
///
/// A run starts from the uniform weighting and from `restarts` points drawn
/// uniformly from the simplex, each iterated to convergence with tiny weights
/// dropped. The best run (largest λ, then smaller support, then
/// lexicographically largest sorted weights) is then pruned: its smallest
/// weights are zeroed one at a time and the run re-optimized, keeping each
/// removal that loses at most the convergence tolerance. A graph without
/// edges returns λ = 0 on the uniform weighting.
class LagrangianSolver {
public:
    explicit LagrangianSolver(SolverOptions opts = {});

    OptResult maximize(const Hypergraph& g);

    const SolverOptions& options() const noexcept { return opts_; }

private:
    struct Run {
        std::vector<double> x;
        double value = 0.0;
        long long iterations = 0;
        bool converged = false;
    };

    Run iterate(const Hypergraph& g, std::vector<double> x);
    Run drop_small_and_iterate(const Hypergraph& g, Run run);
    Run prune_support(const Hypergraph& g, Run run);
    std::vector<double> random_start(const Hypergraph& g);
    std::vector<double> edge_start(const Hypergraph& g);

    SolverOptions opts_;
    std::mt19937_64 rng_;
    std::vector<double> links_;
};

OptResult maximize(const Hypergraph& g, const SolverOptions& opts = {});

/// Fills support, residuals and pair cover for a weighting of g.
OptResult describe_weighting(const Hypergraph& g, const Weighting& x, double support_threshold = 1e-9);

/// Exhaustive reference maximiser for small n (n <= 8 recommended).
///
/// For every support S containing an edge, starts from the uniform weighting
/// on S and from every strictly positive grid point of resolution `depth` on
/// S, refines each by growth steps, and keeps the best value. Shares no code
/// with LagrangianSolver beyond growth_step and evaluate.
OptResult oracle_maximize(const Hypergraph& g, int depth);

struct GapCheck {
    /// max over support pairs i < j with λ(E_ij, x) > 0 of
    /// |(x_i - x_j) - λ(E_{i\j}, x) / λ(E_ij, x)|.
    double max_residual = 0.0;
    /// x_1 >= x_2 >= ... >= x_n up to the tolerance.
    bool non_increasing = true;
};

/// Gap identity for left-compressed graphs at an optimal weighting.
/// Throws precondition_error when g is not left-compressed.
GapCheck remark_gap_check(const Hypergraph& g, const Weighting& x, double tol);

}  // namespace hyperlag

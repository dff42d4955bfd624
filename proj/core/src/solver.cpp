#include "hyperlag/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

namespace hyperlag {

namespace {

constexpr double tie_tolerance = 1e-12;

void normalize(std::vector<double>& x) {
    const double total = std::accumulate(x.begin(), x.end(), 0.0);
    for (double& v : x) v /= total;
}

std::size_t support_size(const std::vector<double>& x) {
    return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](double v) { return v > 0.0; }));
}

// Lexicographic comparison that treats entries within tie_weight as equal.
int compare_weights(const std::vector<double>& a, const std::vector<double>& b) {
    constexpr double tie_weight = 1e-9;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] > b[i] + tie_weight) return 1;
        if (b[i] > a[i] + tie_weight) return -1;
    }
    return 0;
}

std::vector<double> sorted_descending(std::vector<double> x) {
    std::sort(x.begin(), x.end(), std::greater<>());
    return x;
}


// Higher value, then smaller support, then the larger sorted weight profile,
// then more weight on smaller labels.
template <typename R>
bool better(const R& a, const R& b) {
    if (a.value > b.value + tie_tolerance) return true;
    if (b.value > a.value + tie_tolerance) return false;
    const auto sa = support_size(a.x), sb = support_size(b.x);
    if (sa != sb) return sa < sb;
    const int by_profile = compare_weights(sorted_descending(a.x), sorted_descending(b.x));
    if (by_profile != 0) return by_profile > 0;
    return compare_weights(a.x, b.x) > 0;
}

}  // namespace

LagrangianSolver::LagrangianSolver(SolverOptions opts) : opts_(opts), rng_(opts.seed) {
    opts_.validate();
}

LagrangianSolver::Run LagrangianSolver::iterate(const Hypergraph& g, std::vector<double> x) {
    Run run;
    const std::size_t r = static_cast<std::size_t>(g.uniformity());
    const std::size_t n = x.size();
    links_.assign(n, 0.0);
    std::vector<double> prefix(r + 1);
    for (int it = 0; it < opts_.max_iterations; ++it) {
        std::fill(links_.begin(), links_.end(), 0.0);
        double value = 0.0;
        for (const RSet& e : g.edges()) {
            prefix[0] = 1.0;
            for (std::size_t k = 0; k < r; ++k) prefix[k + 1] = prefix[k] * x[static_cast<std::size_t>(e[k] - 1)];
            value += prefix[r];
            double suffix = 1.0;
            for (std::size_t k = r; k-- > 0;) {
                const auto v = static_cast<std::size_t>(e[k] - 1);
                links_[v] += prefix[k] * suffix;
                suffix *= x[v];
            }
        }
        if (!(value > 0.0)) break;
        const double scale = 1.0 / (static_cast<double>(r) * value);
        double delta = 0.0;
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double next = x[i] * links_[i] * scale;
            delta = std::max(delta, std::abs(next - x[i]));
            x[i] = next;
            total += next;
        }
        for (double& v : x) v /= total;
        ++run.iterations;
        if (delta <= opts_.convergence_tolerance) {
            run.converged = true;
            break;
        }
    }
    run.value = evaluate(g, x);
    run.x = std::move(x);
    return run;
}

LagrangianSolver::Run LagrangianSolver::drop_small_and_iterate(const Hypergraph& g, Run run) {
    std::vector<double> y = run.x;
    bool dropped = false;
    for (double& v : y) {
        if (v > 0.0 && v <= opts_.support_threshold) {
            v = 0.0;
            dropped = true;
        }
    }
    if (!dropped) return run;
    normalize(y);
    if (!(evaluate(g, y) > 0.0)) return run;
    Run next = iterate(g, std::move(y));
    next.iterations += run.iterations;
    if (next.value < run.value - opts_.convergence_tolerance) return run;
    return next;
}

LagrangianSolver::Run LagrangianSolver::prune_support(const Hypergraph& g, Run run) {
    bool changed = true;
    while (changed && support_size(run.x) > 1) {
        changed = false;
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < run.x.size(); ++i) {
            if (run.x[i] > 0.0) order.push_back(i);
        }
        std::optional<Run> pick;
        long long spent = 0;
        for (std::size_t idx : order) {
            std::vector<double> y = run.x;
            y[idx] = 0.0;
            normalize(y);
            if (!(evaluate(g, y) > 0.0)) continue;
            Run cand = drop_small_and_iterate(g, iterate(g, std::move(y)));
            spent += cand.iterations;
            if (cand.value < run.value - opts_.convergence_tolerance) continue;
            if (!pick || better(cand, *pick)) pick = std::move(cand);
        }
        run.iterations += spent;
        if (pick) {
            pick->iterations = run.iterations;
            run = std::move(*pick);
            changed = true;
        }
    }
    return run;
}

std::vector<double> LagrangianSolver::random_start(const Hypergraph& g) {
    // Normalized unit exponentials are uniform on the simplex.
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x(static_cast<std::size_t>(g.vertex_count()));
    for (double& v : x) v = -std::log1p(-unit(rng_)) + 1e-300;
    normalize(x);
    return x;
}

std::vector<double> LagrangianSolver::edge_start(const Hypergraph& g) {
    std::uniform_int_distribution<std::size_t> pick(0, g.edge_count() - 1);
    const RSet& e = g.edges()[pick(rng_)];
    std::vector<double> x(static_cast<std::size_t>(g.vertex_count()), 0.0);
    for (Vertex v : e) x[static_cast<std::size_t>(v - 1)] = 1.0 / static_cast<double>(e.size());
    return x;
}

OptResult LagrangianSolver::maximize(const Hypergraph& g) {
    if (g.empty()) {
        if (g.vertex_count() == 0) return OptResult{};
        return describe_weighting(g, Weighting::uniform(static_cast<std::size_t>(g.vertex_count())),
                                  opts_.support_threshold);
    }
    rng_.seed(opts_.seed);

    Run best;
    bool have_best = false;
    long long total_iterations = 0;
    for (int k = 0; k <= opts_.restarts; ++k) {
        std::vector<double> start = k == 0 ? std::vector<double>(static_cast<std::size_t>(g.vertex_count()),
                                                                 1.0 / g.vertex_count())
                                           : random_start(g);
        if (!(evaluate(g, start) > 0.0)) start = edge_start(g);
        Run run = drop_small_and_iterate(g, iterate(g, std::move(start)));
        total_iterations += run.iterations;
        if (!have_best || better(run, best)) {
            best = std::move(run);
            have_best = true;
        }
    }

    const long long before_prune = best.iterations;
    best = prune_support(g, std::move(best));
    total_iterations += best.iterations - before_prune;

    std::vector<double> x = best.x;
    for (double& v : x) {
        if (v <= opts_.support_threshold) v = 0.0;
    }
    OptResult res = describe_weighting(g, Weighting::normalized(std::move(x)), opts_.support_threshold);
    res.iterations = total_iterations;
    res.converged = best.converged;
    res.restarts_used = opts_.restarts;
    return res;
}

OptResult maximize(const Hypergraph& g, const SolverOptions& opts) {
    LagrangianSolver solver(opts);
    return solver.maximize(g);
}

}  // namespace hyperlag

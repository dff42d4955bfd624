#include "doctest.h"

#include <random>

#include "hyperlag/compression.hpp"
#include "hyperlag/errors.hpp"
#include "hyperlag/exact.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/weighting.hpp"
#include "oracles.hpp"

using namespace hyperlag;
using doctest::Approx;

TEST_CASE("weightings must lie on the simplex") {
    CHECK_THROWS_AS(Weighting({0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(Weighting({1.5, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(Weighting(std::vector<double>{}), std::invalid_argument);
    const Weighting w = Weighting::normalized({2.0, 1.0, 1.0});
    CHECK(w[0] == Approx(0.5));
    CHECK(Weighting::uniform(4)[3] == 0.25);
    CHECK_THROWS_AS(Weighting::normalized({0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("evaluation and links agree with the expanded sums") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = 2 + trial % 4;
        const int n = r + trial % 4;
        const Hypergraph g = oracle::random_graph(r, n, rng);
        const auto edges = oracle::edge_lists(g);
        const auto x = oracle::random_simplex_point(n, rng);
        CHECK(evaluate(g, x) == Approx(oracle::lagrangian_at(edges, x)).epsilon(1e-12));
        const auto links = link_values(g, x);
        for (int i = 1; i <= n; ++i) {
            CHECK(links[i - 1] == Approx(oracle::link_at(edges, i, x)).epsilon(1e-12));
            CHECK(link_value(g, i, x) == Approx(oracle::link_at(edges, i, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("growth step on the triangle") {
    const Hypergraph triangle = make_complete(3, 2);
    const std::vector<double> x{0.5, 0.3, 0.2};
    const auto want = oracle::growth(oracle::edge_lists(triangle), 2, x);
    const Weighting y = growth_step(triangle, Weighting(x));
    for (int i = 0; i < 3; ++i) CHECK(y[i] == Approx(want[i]).epsilon(1e-14));
    CHECK(y[0] == Approx(0.403226).epsilon(1e-6));
    CHECK(y[1] == Approx(0.338710).epsilon(1e-6));
    CHECK(y[2] == Approx(0.258065).epsilon(1e-6));
}

TEST_CASE("growth step from a zero-value start is refused") {
    const Hypergraph g(3, 4, {{1, 2, 3}});
    CHECK_THROWS_AS((void)growth_step(g, Weighting({0.0, 0.0, 0.5, 0.5})), degenerate_start_error);
}

TEST_CASE("exact complete-graph Lagrangians") {
    CHECK(complete_lagrangian(4, 3) == Rational(1, 16));
    CHECK(complete_lagrangian(3, 2) == Rational(1, 3));
    CHECK(complete_lagrangian(5, 3) == Rational(10, 125));
    CHECK(to_double(complete_lagrangian(4, 3)) == 0.0625);
    CHECK(big_binomial(60, 30) == BigInt("118264581564861424"));
    CHECK(big_pow(BigInt(3), 40) == BigInt("12157665459056928801"));
}

TEST_CASE("maximizing K_4^(3) gives 1/16 on the uniform weighting") {
    const OptResult res = maximize(make_complete(4, 3));
    CHECK(res.lambda_value == Approx(1.0 / 16).epsilon(1e-12));
    CHECK(res.support == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(res.kkt_residual < 1e-9);
    CHECK(res.pair_cover_ok);
    CHECK(res.converged);
    for (int i = 0; i < 4; ++i) CHECK(res.weighting[i] == Approx(0.25).epsilon(1e-9));
}

TEST_CASE("a single edge is maximized by spreading weight over it") {
    for (int r = 2; r <= 6; ++r) {
        std::vector<Vertex> e;
        for (int v = 1; v <= r; ++v) e.push_back(v + 1);
        const OptResult res = maximize(Hypergraph(r, r + 2, {RSet(e)}));
        CHECK(res.lambda_value == Approx(std::pow(1.0 / r, r)).epsilon(1e-10));
        CHECK(res.support.size() == static_cast<std::size_t>(r));
        CHECK(res.weighting[0] == 0.0);
    }
}

TEST_CASE("2-graph optima follow the clique-number formula") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const Hypergraph g = oracle::random_graph(2, 3 + trial % 5, rng);
        const int omega = oracle::clique_number(g);
        CHECK(maximize(g).lambda_value == Approx(0.5 * (1.0 - 1.0 / omega)).epsilon(1e-9));
    }
}

TEST_CASE("solver optimum dominates a simplex grid search and is attained") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = 3 + trial % 2;
        const Hypergraph g = oracle::random_graph(r, r + 1 + trial % 2, rng);
        const OptResult res = maximize(g);
        CHECK(res.lambda_value >= oracle::grid_lagrangian(g, 20) - 1e-12);
        CHECK(evaluate(g, res.weighting) == Approx(res.lambda_value).epsilon(1e-12));
        CHECK(res.kkt_residual < 1e-6);
    }
}

TEST_CASE("solver is deterministic for a fixed seed") {
    std::mt19937_64 rng(29);
    SolverOptions opts;
    opts.seed = 99;
    for (int trial = 0; trial < 20; ++trial) {
        const Hypergraph g = oracle::random_graph(3, 6, rng);
        const OptResult a = maximize(g, opts);
        const OptResult b = maximize(g, opts);
        CHECK(a.lambda_value == b.lambda_value);
        CHECK(std::vector<double>(a.weighting.values().begin(), a.weighting.values().end()) ==
              std::vector<double>(b.weighting.values().begin(), b.weighting.values().end()));
    }
}

TEST_CASE("solver options are validated") {
    SolverOptions opts;
    opts.max_iterations = 0;
    CHECK_THROWS_AS(opts.validate(), std::invalid_argument);
    opts = {};
    opts.convergence_tolerance = -1.0;
    CHECK_THROWS_AS(LagrangianSolver{opts}, std::invalid_argument);
}

TEST_CASE("empty hypergraphs have Lagrangian zero") {
    const OptResult res = maximize(Hypergraph(3, 4, {}));
    CHECK(res.lambda_value == 0.0);
}

TEST_CASE("oracle agrees with the solver on small 3-graphs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        const Hypergraph g = oracle::random_graph(3, 4 + trial % 2, rng);
        CHECK(oracle_maximize(g, 4).lambda_value == Approx(maximize(g).lambda_value).epsilon(1e-9));
    }
}

TEST_CASE("describe weighting reports support and KKT data") {
    const Hypergraph k = make_complete(4, 3);
    const OptResult res = describe_weighting(k, Weighting::uniform(4));
    CHECK(res.lambda_value == Approx(1.0 / 16));
    CHECK(res.kkt_residual < 1e-15);
    CHECK(res.support.size() == 4);
    CHECK(res.pair_cover_ok);
    const OptResult off = describe_weighting(k, Weighting({0.7, 0.1, 0.1, 0.1}));
    CHECK(off.kkt_residual > 1e-3);
}

TEST_CASE("gap identity holds at optima of left-compressed graphs") {
    for (std::uint64_t m = 1; m <= 20; ++m) {
        const Hypergraph g = make_colex_graph(3, m).with_vertex_count(6);
        const OptResult res = maximize(g);
        const GapCheck gap = remark_gap_check(g, res.weighting, 1e-7);
        CHECK(gap.non_increasing);
        CHECK(gap.max_residual < 1e-6);
    }
    CHECK_THROWS_AS((void)remark_gap_check(Hypergraph(2, 3, {{2, 3}}), Weighting::uniform(3), 1e-7),
                    precondition_error);
}

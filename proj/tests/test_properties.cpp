#include "doctest.h"

#include <random>

#include "hyperlag/bounds.hpp"
#include "hyperlag/campaigns.hpp"
#include "hyperlag/clique.hpp"
#include "hyperlag/colex.hpp"
#include "hyperlag/compression.hpp"
#include "hyperlag/enumerate.hpp"
#include "hyperlag/exact.hpp"
#include "hyperlag/lagrangian.hpp"
#include "oracles.hpp"

using namespace hyperlag;
using namespace hyperlag::lab;

namespace {

std::vector<std::uint64_t> sorted_ranks(const Hypergraph& g) {
    std::vector<std::uint64_t> out;
    for (const auto& e : g.edges()) out.push_back(colex_rank(e));
    std::sort(out.begin(), out.end());
    return out;
}

RSet random_rset(int r, int n, std::mt19937_64& rng) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 1);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(r);
    return RSet(all);
}

}  // namespace

TEST_CASE("colex rank round trip for r <= 5 and k < 10000") {
    for (int r = 1; r <= 5; ++r) {
        for (std::uint64_t k = 0; k < 10000; ++k) CHECK(colex_rank(colex_unrank(r, k)) == k);
    }
}

TEST_CASE("colex order agrees with rank order on triples of [7]") {
    const auto triples = all_subsets(7, 3);
    for (const auto& a : triples) {
        for (const auto& b : triples) CHECK((colex_compare(a, b) < 0) == (colex_rank(a) < colex_rank(b)));
    }
}

TEST_CASE("the first C(t, r) colex sets are [t]^(r)") {
    for (int r = 2; r <= 4; ++r) {
        for (int t = r; t <= 8; ++t) {
            const Hypergraph g = make_colex_graph(r, oracle::pascal(t, r));
            CHECK(g.vertex_count() == t);
            CHECK(oracle::edge_lists(g) == oracle::colex_subsets(t, r));
        }
    }
}

TEST_CASE("colex graphs are left-compressed") {
    for (int r = 2; r <= 4; ++r) {
        for (std::uint64_t m = 0; m <= 100; ++m) CHECK(is_left_compressed(make_colex_graph(r, m)));
    }
}

TEST_CASE("compression keeps m and never raises a colex rank") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = 2 + trial % 3;
        const int n = r + 1 + trial % 4;
        const Hypergraph g = oracle::random_graph(r, n, rng);
        const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
        const int j = std::uniform_int_distribution<int>(i + 1, n)(rng);
        const Hypergraph h = compress(g, i, j);
        REQUIRE(h.edge_count() == g.edge_count());
        const auto before = sorted_ranks(g);
        const auto after = sorted_ranks(h);
        for (std::size_t k = 0; k < before.size(); ++k) CHECK(after[k] <= before[k]);
    }
}

TEST_CASE("descendant order is irreflexive and transitive") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 3000; ++trial) {
        const int r = 2 + trial % 3;
        const RSet a = random_rset(r, 7, rng);
        const RSet b = random_rset(r, 7, rng);
        const RSet c = random_rset(r, 7, rng);
        CHECK_FALSE(is_descendant(a, a));
        if (is_descendant(a, b)) CHECK_FALSE(is_descendant(b, a));
        if (is_descendant(a, b) && is_descendant(b, c)) CHECK(is_descendant(a, c));
    }
}

TEST_CASE("normalization does not lower the value of a non-increasing optimal weighting") {
    std::mt19937_64 rng(55);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int r = 3;
        const int t = 5 + trial % 2;
        const Hypergraph g0 = oracle::random_graph(r, t, rng);
        const OptResult opt = maximize(g0);
        // Relabel so that weights are non-increasing in the label.
        std::vector<int> order(t);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return opt.weighting[a] > opt.weighting[b]; });
        std::vector<int> label(t);
        for (int k = 0; k < t; ++k) label[order[k]] = k + 1;
        std::vector<RSet> edges;
        for (const auto& e : g0.edges()) {
            std::vector<Vertex> img;
            for (Vertex v : e) img.push_back(label[v - 1]);
            edges.emplace_back(img);
        }
        const Hypergraph g(r, t, edges);
        std::vector<double> x(t);
        for (int k = 0; k < t; ++k) x[k] = opt.weighting[order[k]];
        bool full_lower = true;
        for (const auto& s : all_subsets(t - 1, r)) full_lower = full_lower && g.contains(s);
        if (full_lower) continue;
        ++checked;
        const Hypergraph h = normalize_left_compressed(g, t);
        CHECK(h.edge_count() == g.edge_count());
        CHECK(evaluate(h, x) >= evaluate(g, x) - 1e-12);
        CHECK(evaluate(g, x) == doctest::Approx(opt.lambda_value).epsilon(1e-12));
    }
    CHECK(checked > 20);
}

TEST_CASE("growth step never decreases the objective") {
    std::mt19937_64 rng(57);
    for (int sample = 0; sample < 1000; ++sample) {
        const int r = 2 + sample % 3;
        const int n = std::uniform_int_distribution<int>(r, 8)(rng);
        const Hypergraph g = oracle::random_graph(r, n, rng);
        const Weighting x(oracle::random_simplex_point(n, rng));
        CHECK(evaluate(g, growth_step(g, x)) >= evaluate(g, x) - 1e-12);
    }
}

TEST_CASE("subgraphs have no larger Lagrangian") {
    std::mt19937_64 rng(59);
    for (int pair = 0; pair < 200; ++pair) {
        const int r = 2 + pair % 3;
        const int n = r + 1 + pair % 3;
        const Hypergraph big = oracle::random_graph(r, n, rng);
        std::vector<RSet> kept;
        for (const auto& e : big.edges()) {
            if (rng() % 2) kept.push_back(e);
        }
        const Hypergraph small(r, n, kept);
        CHECK(maximize(small).lambda_value <= maximize(big).lambda_value + 1e-8);
    }
}

TEST_CASE("KKT conditions hold at converged optima") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 150; ++trial) {
        const int r = 2 + trial % 3;
        const Hypergraph g = oracle::random_graph(r, r + 1 + trial % 4, rng);
        const OptResult res = maximize(g);
        if (!res.converged) continue;
        CHECK(res.kkt_residual <= 1e-6);
        CHECK(res.pair_cover_ok);
    }
}

TEST_CASE("uniform weighting is a fixed point on complete graphs") {
    for (int r = 2; r <= 4; ++r) {
        for (int t = r; t <= 8; ++t) {
            const Weighting y = growth_step(make_complete(t, r), Weighting::uniform(t));
            for (int i = 0; i < t; ++i) CHECK(std::abs(y[i] - 1.0 / t) <= 1e-15);
        }
    }
}

TEST_CASE("complete 2-graph Lagrangians are exact") {
    for (int t = 1; t <= 100; ++t) CHECK(complete_lagrangian(t, 2) == Rational(t - 1, 2 * t));
}

TEST_CASE("solver agrees with the oracle on every 2-graph on 5 vertices") {
    for (int m = 1; m <= 10; ++m) {
        for (const auto& g : enumerate_graphs(2, 5, m, true)) {
            CHECK(std::abs(maximize(g).lambda_value - oracle_maximize(g, 6).lambda_value) <= 1e-7);
        }
    }
}

TEST_CASE("clique search agrees with brute force on every 2-graph on 6 vertices") {
    for (int m = 0; m <= 15; ++m) {
        for (const auto& g : enumerate_graphs(2, 6, m, true)) {
            const CliqueResult res = max_clique_order(g);
            CHECK(res.order == oracle::clique_number(g));
            if (res.order > 0) CHECK(has_clique_of_order(g, res.order).has_value());
        }
    }
}

TEST_CASE("adding an edge never lowers the clique number") {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 500; ++trial) {
        const int r = 2 + trial % 3;
        const int n = r + 1 + trial % 4;
        const Hypergraph g = oracle::random_graph(r, n, rng);
        const RSet extra = random_rset(r, n, rng);
        if (g.contains(extra)) continue;
        std::vector<RSet> edges(g.edges().begin(), g.edges().end());
        edges.push_back(extra);
        const Hypergraph h(r, n, edges);
        const CliqueResult res = max_clique_order(h);
        CHECK(res.order >= max_clique_order(g).order);
        CHECK(has_clique_of_order(h, res.order).has_value());
        CHECK(is_clique(h, res.witness));
    }
}

TEST_CASE("campaigns are reproducible") {
    CampaignOptions opts;
    opts.seed = 12;
    const CampaignReport a = verify_frankl_furedi(3, 5, 5, opts);
    const CampaignReport b = verify_frankl_furedi(3, 5, 5, opts);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t k = 0; k < a.records.size(); ++k) {
        CHECK(a.records[k].lambda == b.records[k].lambda);
        CHECK(a.records[k].margin == b.records[k].margin);
        CHECK(a.records[k].signature == b.records[k].signature);
    }
}

TEST_CASE("bound ordering holds exactly on the scanned range") {
    for (int r = 4; r <= 12; ++r) {
        for (int t = r + 2; t <= 400; ++t) {
            const BoundSummary b = theorem_bounds(r, t);
            CHECK(b.upper_clique_free <= b.upper_with_clique);
            CHECK(b.upper_with_clique <= b.plateau_end());
        }
    }
    const BoundSummary far = theorem_bounds(12, 10000);
    CHECK(far.lower == big_binomial(9999, 12));
    CHECK(far.lower > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

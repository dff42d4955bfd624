#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/report.hpp"

namespace hyperlag::lab {

/// Floating point cannot certify a strict inequality, so "λ < reference" is
/// checked as reference - λ >= strictness_margin and the slack is reported.
inline constexpr double strictness_margin = 1e-9;

/// Shared by the campaigns whose clique-free statement only exists at large t.
extern const char* const small_scale_note;

struct CampaignOptions {
    double tolerance = 1e-7;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    /// Maximum solver invocations a campaign may plan for.
    std::uint64_t budget = 1'000'000;
    SolverOptions solver{};
};

/// Every 2-graph on n_max vertices with at least one edge, up to isomorphism
/// (graphs on fewer vertices appear with isolated vertices), checked against
/// (1/2)(1 - 1/ω).
CampaignReport verify_motzkin_straus(int n_max, const CampaignOptions& opts);

/// λ(C_{r,m}) against λ([t-1]^{(r)}) for C(t-1,r) <= m <= C(t-1,r) + C(t-2,r-1).
/// Requires r >= 2 and t >= r + 1.
CampaignReport verify_colex_plateau(int r, int t, const CampaignOptions& opts);

/// All m-edge r-graphs on [n] against C_{r,m}. The last record ("ff-maximum")
/// carries the overall maximum, whether C_{r,m} attains it, and the colex
/// signatures of every maximiser. Throws budget_exceeded_error when
/// C(C(n,r), m) exceeds the budget, and std::invalid_argument when C_{r,m}
/// does not fit on [n].
CampaignReport verify_frankl_furedi(int r, int n, std::uint64_t m, const CampaignOptions& opts);

/// m-edge r-graphs on [t] for C(t-1,r) <= m <= C(t-1,r) + C(t-2,r-1), split by
/// whether they contain a clique of order t-1. Clique side: |λ - ref| <= tol.
/// Clique-free side: ref - λ >= strictness_margin.
CampaignReport verify_clique_dichotomy(int r, int t, const CampaignOptions& opts);

/// One record per t in [t_min, t_max] checking the exact bound identities.
/// The "bounds-first-nonempty" record reports the smallest t with a nonempty
/// clique-free range.
CampaignReport verify_bounds(int r, int t_min, int t_max);

/// One record per r with the number of t values checked and any counterexample.
CampaignReport verify_power_inequality(int r_min, int r_max, int t_max);

struct CorpusSpec {
    std::size_t count = 500;
    int r_min = 2;
    int r_max = 4;
    int n_max = 7;
    std::uint64_t seed = 0;
};

/// Random small graphs drawn from the given ranges, reproducible from the seed.
std::vector<Hypergraph> random_corpus(const CorpusSpec& spec);

/// For each corpus graph G: every compression compress(G, i, j) that changes
/// G, and the full fixpoint, must not lose more than the tolerance in λ.
CampaignReport verify_compression_monotone(const CorpusSpec& corpus, const CampaignOptions& opts);

struct NeighborhoodDiagnostic {
    /// "ok", or the violated precondition.
    std::string precondition = "ok";
    int window = 0;                         // t - 2r + 6
    std::uint64_t missing_link_sets = 0;    // |[window]^{(r-1)} \ E_{t-1}|
    std::uint64_t missing_edges = 0;        // |[window]^{(r)} \ E|
    std::uint64_t pair_bound = 0;           // 2^{r-1} |E_{(t-1)t}|
    double lambda = 0.0;
    double reference = 0.0;
    bool lambda_strictly_below = false;     // reference - λ >= strictness_margin
    bool link_count_holds = false;
    bool edge_count_holds = false;

    bool link_dichotomy_holds() const { return link_count_holds || lambda_strictly_below; }
    bool edge_dichotomy_holds() const { return edge_count_holds || lambda_strictly_below; }
};

/// Counting dichotomies for a left-compressed r-graph on [t] without
/// [t-1]^{(r)}: each count bound must hold or λ(G) must sit strictly below
/// λ([t-1]^{(r)}). Precondition failures are reported in the record.
NeighborhoodDiagnostic check_neighborhood_dichotomy(const Hypergraph& g, int t, const SolverOptions& opts = {});

/// Same, with λ(G) supplied by the caller.
NeighborhoodDiagnostic check_neighborhood_dichotomy(const Hypergraph& g, int t, double lambda);

/// Colex ranks of the edges, for record signatures.
std::vector<long long> colex_signature(const Hypergraph& g);

}  // namespace hyperlag::lab

#include "hyperlag/campaigns.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "hyperlag/bounds.hpp"
#include "hyperlag/clique.hpp"
#include "hyperlag/colex.hpp"
#include "hyperlag/compression.hpp"
#include "hyperlag/enumerate.hpp"
#include "hyperlag/errors.hpp"
#include "hyperlag/exact.hpp"
#include "hyperlag/parallel.hpp"

namespace hyperlag::lab {

const char* const small_scale_note =
    "The clique-free edge range for r >= 4 only opens at t >= 55 (t = 55 for r = 4), far beyond exhaustive "
    "enumeration; this campaign checks the exact bound arithmetic and the dichotomy on small (r, t) analogues "
    "in its place.";

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// splitmix64 of (base, index): per-instance seeds independent of scheduling.
std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

LagrangianSolver make_solver(const CampaignOptions& opts, std::uint64_t index) {
    SolverOptions so = opts.solver;
    so.seed = instance_seed(opts.seed, index);
    return LagrangianSolver(so);
}

VerificationRecord base_record(const std::string& campaign, std::uint64_t index, const Hypergraph& g, double tol) {
    VerificationRecord rec;
    rec.campaign = campaign;
    rec.index = index;
    rec.r = g.uniformity();
    rec.n = g.vertex_count();
    rec.m = g.edge_count();
    rec.signature = colex_signature(g);
    rec.tolerance = tol;
    return rec;
}

void check_budget(std::uint64_t required, std::uint64_t budget) {
    if (required > budget) throw budget_exceeded_error(required, budget);
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t plateau_begin(int r, int t) { return binomial(static_cast<std::uint64_t>(t - 1), static_cast<std::uint64_t>(r)); }

std::uint64_t plateau_end(int r, int t) {
    return plateau_begin(r, t) + binomial(static_cast<std::uint64_t>(t - 2), static_cast<std::uint64_t>(r - 1));
}

std::vector<Hypergraph> collect(int r, int n, std::uint64_t m_lo, std::uint64_t m_hi, std::uint64_t budget) {
    const std::uint64_t universe = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r));
    m_hi = std::min(m_hi, universe);
    std::uint64_t required = 0;
    for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
        required = saturating_add(required, GraphEnumerator(r, n, m, false).raw_count());
    }
    check_budget(required, budget);
    std::vector<Hypergraph> out;
    for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
        auto batch = enumerate_graphs(r, n, m, true);
        std::move(batch.begin(), batch.end(), std::back_inserter(out));
    }
    return out;
}

template <typename Fn>
CampaignReport run_instances(const std::string& campaign, const std::vector<Hypergraph>& graphs,
                             const CampaignOptions& opts, Fn&& check) {
    const auto start = Clock::now();
    CampaignReport report;
    report.campaign = campaign;
    report.seed = opts.seed;
    report.records.resize(graphs.size());
    parallel_for(graphs.size(), opts.workers, [&](std::size_t i) {
        const auto t0 = Clock::now();
        LagrangianSolver solver = make_solver(opts, i);
        VerificationRecord rec = base_record(campaign, i, graphs[i], opts.tolerance);
        check(graphs[i], solver, rec);
        rec.wall_time_seconds = seconds_since(t0);
        report.records[i] = std::move(rec);
    });
    report.wall_time_seconds = seconds_since(start);
    return report;
}

void add_solver_fields(VerificationRecord& rec, const OptResult& res) {
    rec.extra.emplace_back("support", static_cast<long long>(res.support.size()));
    rec.extra.emplace_back("kkt", res.kkt_residual);
    rec.extra.emplace_back("converged", res.converged);
}

}  // namespace

std::vector<long long> colex_signature(const Hypergraph& g) {
    std::vector<long long> sig;
    sig.reserve(g.edge_count());
    for (const RSet& e : g.edges()) sig.push_back(static_cast<long long>(colex_rank(e)));
    return sig;
}

CampaignReport verify_motzkin_straus(int n_max, const CampaignOptions& opts) {
    if (n_max < 2) throw std::invalid_argument("verify_motzkin_straus: n_max must be at least 2");
    const auto pairs = binomial(static_cast<std::uint64_t>(n_max), 2);
    const auto graphs = collect(2, n_max, 1, pairs, opts.budget);
    CampaignReport report = run_instances("ms", graphs, opts, [&](const Hypergraph& g, LagrangianSolver& solver,
                                                                  VerificationRecord& rec) {
        const OptResult res = solver.maximize(g);
        const int omega = max_clique_order(g).order;
        rec.lambda = res.lambda_value;
        rec.reference = 0.5 * (1.0 - 1.0 / omega);
        rec.clique_order = omega;
        const double deviation = std::abs(rec.lambda - rec.reference);
        rec.margin = opts.tolerance - deviation;
        rec.extra.emplace_back("deviation", deviation);
        add_solver_fields(rec, res);
    });
    report.note = "2-graphs on " + std::to_string(n_max) +
                  " vertices up to isomorphism; graphs on fewer vertices appear with isolated vertices.";
    return report;
}

CampaignReport verify_colex_plateau(int r, int t, const CampaignOptions& opts) {
    if (r < 2 || t < r + 1) throw std::invalid_argument("verify_colex_plateau: requires r >= 2 and t >= r + 1");
    std::vector<Hypergraph> graphs;
    for (std::uint64_t m = plateau_begin(r, t); m <= plateau_end(r, t); ++m) graphs.push_back(make_colex_graph(r, m));
    check_budget(graphs.size(), opts.budget);
    const Rational exact = complete_lagrangian(t - 1, r);
    const double reference = to_double(exact);
    return run_instances("plateau", graphs, opts, [&](const Hypergraph& g, LagrangianSolver& solver,
                                                      VerificationRecord& rec) {
        const OptResult res = solver.maximize(g);
        rec.lambda = res.lambda_value;
        rec.reference = reference;
        rec.clique_order = max_clique_order(g).order;
        rec.margin = opts.tolerance - std::abs(rec.lambda - reference);
        rec.extra.emplace_back("t", static_cast<long long>(t));
        rec.extra.emplace_back("reference_exact", exact.str());
        add_solver_fields(rec, res);
    });
}

CampaignReport verify_frankl_furedi(int r, int n, std::uint64_t m, const CampaignOptions& opts) {
    const Hypergraph colex = make_colex_graph(r, m);
    if (colex.vertex_count() > n) {
        throw std::invalid_argument("verify_frankl_furedi: C_{r,m} needs more than n vertices");
    }
    GraphEnumerator probe(r, n, m, false);
    check_budget(probe.raw_count(), opts.budget);
    const auto graphs = enumerate_graphs(r, n, m, true);
    const bool iso = GraphEnumerator(r, n, 0, true).iso_rejection();
    const Hypergraph colex_on_n = colex.with_vertex_count(n);

    LagrangianSolver colex_solver = make_solver(opts, graphs.size());
    const double colex_lambda = colex_solver.maximize(colex_on_n).lambda_value;

    CampaignReport report = run_instances("ff", graphs, opts, [&](const Hypergraph& g, LagrangianSolver& solver,
                                                                  VerificationRecord& rec) {
        const OptResult res = solver.maximize(g);
        rec.lambda = res.lambda_value;
        rec.reference = colex_lambda;
        rec.clique_order = max_clique_order(g).order;
        rec.margin = colex_lambda + opts.tolerance - rec.lambda;
        add_solver_fields(rec, res);
    });

    double best = colex_lambda;
    for (const auto& rec : report.records) best = std::max(best, rec.lambda);
    std::vector<long long> maximizers;
    bool colex_among = false;
    const std::uint64_t colex_mask = iso ? canonical_mask(colex_on_n) : 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (report.records[i].lambda < best - opts.tolerance) continue;
        maximizers.push_back(static_cast<long long>(i));
        colex_among = colex_among || (iso ? canonical_mask(graphs[i]) == colex_mask : graphs[i] == colex_on_n);
    }

    VerificationRecord summary = base_record("ff-maximum", graphs.size(), colex_on_n, opts.tolerance);
    summary.lambda = best;
    summary.reference = colex_lambda;
    summary.clique_order = max_clique_order(colex_on_n).order;
    summary.margin = colex_lambda + opts.tolerance - best;
    if (!colex_among) summary.margin = std::min(summary.margin, -opts.tolerance);
    summary.extra.emplace_back("colex_among_maximizers", colex_among);
    summary.extra.emplace_back("maximizer_indices", maximizers);
    summary.extra.emplace_back("iso_rejection", iso);
    report.records.push_back(std::move(summary));
    return report;
}

CampaignReport verify_clique_dichotomy(int r, int t, const CampaignOptions& opts) {
    if (r < 2 || t < r + 1) throw std::invalid_argument("verify_clique_dichotomy: requires r >= 2 and t >= r + 1");
    const auto graphs = collect(r, t, plateau_begin(r, t), plateau_end(r, t), opts.budget);
    const Rational exact = complete_lagrangian(t - 1, r);
    const double reference = to_double(exact);
    CampaignReport report = run_instances("dichotomy", graphs, opts, [&](const Hypergraph& g,
                                                                         LagrangianSolver& solver,
                                                                         VerificationRecord& rec) {
        const OptResult res = solver.maximize(g);
        const bool has_clique = has_clique_of_order(g, t - 1).has_value();
        rec.lambda = res.lambda_value;
        rec.reference = reference;
        rec.clique_order = max_clique_order(g).order;
        if (has_clique) {
            rec.margin = opts.tolerance - std::abs(rec.lambda - reference);
        } else {
            rec.margin = (reference - rec.lambda) - strictness_margin;
        }
        rec.extra.emplace_back("side", std::string(has_clique ? "clique" : "clique-free"));
        rec.extra.emplace_back("gap", reference - rec.lambda);
        add_solver_fields(rec, res);
        if (!has_clique) {
            const NeighborhoodDiagnostic diag = check_neighborhood_dichotomy(g, t, rec.lambda);
            rec.extra.emplace_back("neighborhood_precondition", diag.precondition);
            if (diag.precondition == "ok") {
                rec.extra.emplace_back("link_dichotomy", diag.link_dichotomy_holds());
                rec.extra.emplace_back("edge_dichotomy", diag.edge_dichotomy_holds());
            }
        }
    });
    report.note = small_scale_note;
    return report;
}

CampaignReport verify_bounds(int r, int t_min, int t_max) {
    const auto start = Clock::now();
    CampaignReport report;
    report.campaign = "bounds";
    report.note = small_scale_note;
    t_min = std::max(t_min, r + 1);
    std::optional<int> first;
    for (int t = t_min; t <= t_max; ++t) {
        const BoundSummary b = theorem_bounds(r, t);
        VerificationRecord rec;
        rec.campaign = "bounds";
        rec.index = report.records.size();
        rec.r = r;
        rec.n = t;
        const BigInt end = b.plateau_end();
        const BigInt slack = std::min(b.upper_with_clique - b.upper_clique_free, end - b.upper_with_clique);
        rec.margin = slack.convert_to<double>();
        rec.extra.emplace_back("t", static_cast<long long>(t));
        rec.extra.emplace_back("lower", b.lower.str());
        rec.extra.emplace_back("upper_with_clique", b.upper_with_clique.str());
        rec.extra.emplace_back("upper_clique_free", b.upper_clique_free.str());
        rec.extra.emplace_back("coeff_with_clique", b.coeff_with_clique.str());
        rec.extra.emplace_back("coeff_clique_free", b.coeff_clique_free.str());
        rec.extra.emplace_back("nonempty_clique_free", b.nonempty_clique_free);
        rec.extra.emplace_back("width_clique_free", b.width_clique_free().str());
        if (b.nonempty_clique_free && !first) first = t;
        report.records.push_back(std::move(rec));
    }
    VerificationRecord scan;
    scan.campaign = "bounds-first-nonempty";
    scan.index = report.records.size();
    scan.r = r;
    scan.extra.emplace_back("found", first.has_value());
    if (first) {
        scan.n = *first;
        scan.extra.emplace_back("t", static_cast<long long>(*first));
        scan.extra.emplace_back("width_clique_free", theorem_bounds(r, *first).width_clique_free().str());
    }
    report.records.push_back(std::move(scan));
    report.wall_time_seconds = seconds_since(start);
    return report;
}

CampaignReport verify_power_inequality(int r_min, int r_max, int t_max) {
    const auto start = Clock::now();
    CampaignReport report;
    report.campaign = "ineq";
    report.note = small_scale_note;
    for (int r = r_min; r <= r_max; ++r) {
        const auto t0 = Clock::now();
        const PowerInequalityReport rep = check_power_inequality(r, r, t_max);
        VerificationRecord rec;
        rec.campaign = "ineq";
        rec.index = report.records.size();
        rec.r = r;
        rec.n = t_max;
        rec.margin = 0.0 - static_cast<double>(rep.counterexamples.size());
        std::vector<long long> bad;
        for (const auto& [rr, t] : rep.counterexamples) bad.push_back(t);
        rec.extra.emplace_back("pairs_checked", static_cast<long long>(rep.pairs_checked));
        rec.extra.emplace_back("counterexample_t", bad);
        rec.wall_time_seconds = seconds_since(t0);
        report.records.push_back(std::move(rec));
    }
    report.wall_time_seconds = seconds_since(start);
    return report;
}

std::vector<Hypergraph> random_corpus(const CorpusSpec& spec) {
    if (spec.r_min < 2 || spec.r_max < spec.r_min || spec.n_max < spec.r_min + 1) {
        throw std::invalid_argument("random_corpus: invalid ranges");
    }
    std::mt19937_64 rng(spec.seed);
    std::vector<Hypergraph> out;
    out.reserve(spec.count);
    while (out.size() < spec.count) {
        const int r = std::uniform_int_distribution<int>(spec.r_min, spec.r_max)(rng);
        if (r + 1 > spec.n_max) continue;
        const int n = std::uniform_int_distribution<int>(r + 1, spec.n_max)(rng);
        auto universe = all_subsets(n, r);
        const auto m = std::uniform_int_distribution<std::size_t>(1, universe.size())(rng);
        std::shuffle(universe.begin(), universe.end(), rng);
        universe.resize(m);
        out.emplace_back(r, n, std::move(universe));
    }
    return out;
}

CampaignReport verify_compression_monotone(const CorpusSpec& corpus, const CampaignOptions& opts) {
    const auto graphs = random_corpus(corpus);
    std::uint64_t required = 0;
    for (const auto& g : graphs) {
        const auto n = static_cast<std::uint64_t>(g.vertex_count());
        required = saturating_add(required, 2 + n * (n - 1) / 2);
    }
    check_budget(required, opts.budget);
    return run_instances("compress-mono", graphs, opts, [&](const Hypergraph& g, LagrangianSolver& solver,
                                                            VerificationRecord& rec) {
        // λ is isomorphism invariant, so results are cached by canonical form.
        std::map<std::uint64_t, double> cache;
        const auto lambda_of = [&](const Hypergraph& h) {
            const std::uint64_t key = canonical_mask(h);
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, solver.maximize(h).lambda_value).first;
            return it->second;
        };
        const double base = lambda_of(g);
        double worst = base;
        long long checked = 0;
        for (Vertex i = 1; i <= g.vertex_count(); ++i) {
            for (Vertex j = i + 1; j <= g.vertex_count(); ++j) {
                const Hypergraph h = compress(g, i, j);
                if (h == g) continue;
                worst = std::min(worst, lambda_of(h));
                ++checked;
            }
        }
        const Hypergraph fix = compress_to_fixpoint(g);
        const double fix_lambda = lambda_of(fix);
        worst = std::min(worst, fix_lambda);
        rec.lambda = base;
        rec.reference = worst;
        rec.clique_order = max_clique_order(g).order;
        rec.margin = worst - base + opts.tolerance;
        rec.extra.emplace_back("compressions", checked);
        rec.extra.emplace_back("fixpoint_lambda", fix_lambda);
        rec.extra.emplace_back("fixpoint_left_compressed", is_left_compressed(fix));
    });
}

NeighborhoodDiagnostic check_neighborhood_dichotomy(const Hypergraph& g, int t, double lambda) {
    NeighborhoodDiagnostic d;
    const int r = g.uniformity();
    d.window = t - 2 * r + 6;
    d.lambda = lambda;
    if (g.vertex_count() > t || t < r + 1) {
        d.precondition = "graph-not-on-[t]";
        return d;
    }
    const Hypergraph h = g.with_vertex_count(t);
    if (!is_left_compressed(h)) {
        d.precondition = "not-left-compressed";
        return d;
    }
    const auto lower_sets = all_subsets(t - 1, r);
    if (std::all_of(lower_sets.begin(), lower_sets.end(), [&](const RSet& s) { return h.contains(s); })) {
        d.precondition = "contains-[t-1]^(r)";
        return d;
    }
    if (d.window < 1 || d.window > t) {
        d.precondition = "window-out-of-range";
        return d;
    }
    const SetFamily top_link = link(h, t - 1);
    for (const RSet& a : all_subsets(d.window, r - 1)) {
        if (!top_link.contains(a)) ++d.missing_link_sets;
    }
    for (const RSet& e : all_subsets(d.window, r)) {
        if (!h.contains(e)) ++d.missing_edges;
    }
    d.pair_bound = (std::uint64_t{1} << (r - 1)) * pair_link(h, t - 1, t).size();
    d.reference = to_double(complete_lagrangian(t - 1, r));
    d.lambda_strictly_below = d.reference - lambda >= strictness_margin;
    d.link_count_holds = d.missing_link_sets <= d.pair_bound;
    d.edge_count_holds = d.missing_edges <= d.pair_bound;
    return d;
}

NeighborhoodDiagnostic check_neighborhood_dichotomy(const Hypergraph& g, int t, const SolverOptions& opts) {
    NeighborhoodDiagnostic d = check_neighborhood_dichotomy(g, t, 0.0);
    if (d.precondition != "ok") return d;
    return check_neighborhood_dichotomy(g, t, maximize(g.with_vertex_count(t), opts).lambda_value);
}

}  // namespace hyperlag::lab

#include "doctest.h"

#include <sstream>

#include "hyperlag/campaigns.hpp"
#include "hyperlag/colex.hpp"
#include "hyperlag/compression.hpp"
#include "hyperlag/errors.hpp"
#include "hyperlag/report.hpp"
#include "oracles.hpp"

using namespace hyperlag;
using namespace hyperlag::lab;

namespace {

std::string body(const CampaignReport& report) {
    std::ostringstream os;
    write_jsonl(report, os);
    std::string text = os.str();
    // Drop the trailer, which carries the wall time.
    text.erase(text.rfind("{\"trailer\""));
    return text;
}

const FieldValue* field(const VerificationRecord& rec, const std::string& key) {
    for (const auto& [k, v] : rec.extra) {
        if (k == key) return &v;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("plateau campaign at r = 3, t = 5") {
    CampaignOptions opts;
    opts.tolerance = 1e-6;
    const CampaignReport report = verify_colex_plateau(3, 5, opts);
    REQUIRE(report.records.size() == 4);
    CHECK(report.all_passed());
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(report.records[k].m == 4 + k);
        CHECK(std::get<std::string>(*field(report.records[k], "reference_exact")) == "1/16");
    }
    const CampaignSummary s = report.summary();
    CHECK(s.instances == 4);
    CHECK(s.passes == 4);
    CHECK(s.fails == 0);
}

TEST_CASE("clique-number campaign on 4 vertices") {
    const CampaignReport report = verify_motzkin_straus(4, {});
    CHECK(report.records.size() == 10);
    CHECK(report.all_passed());
    for (const auto& rec : report.records) {
        const Hypergraph g(2, 4, [&] {
            std::vector<RSet> edges;
            for (long long rank : rec.signature) edges.push_back(colex_unrank(2, static_cast<std::uint64_t>(rank)));
            return edges;
        }());
        CHECK(rec.clique_order == oracle::clique_number(g));
    }
}

TEST_CASE("colex maximality campaign on [5]") {
    const CampaignReport report = verify_frankl_furedi(3, 5, 4, {});
    CHECK(report.all_passed());
    const VerificationRecord& last = report.records.back();
    CHECK(last.campaign == "ff-maximum");
    CHECK(std::get<bool>(*field(last, "colex_among_maximizers")));
    CHECK(last.lambda == doctest::Approx(1.0 / 16));
}

TEST_CASE("campaign budgets and preconditions") {
    CampaignOptions opts;
    opts.budget = 10;
    CHECK_THROWS_AS((void)verify_frankl_furedi(3, 6, 4, opts), budget_exceeded_error);
    CHECK_THROWS_AS((void)verify_motzkin_straus(5, opts), budget_exceeded_error);
    CHECK_THROWS_AS((void)verify_frankl_furedi(3, 4, 5, {}), std::invalid_argument);
    CHECK_THROWS_AS((void)verify_colex_plateau(3, 3, {}), std::invalid_argument);
    try {
        (void)verify_frankl_furedi(3, 6, 4, opts);
    } catch (const budget_exceeded_error& e) {
        CHECK(e.required() == oracle::pascal(20, 4));
        CHECK(e.budget() == 10);
    }
}

TEST_CASE("dichotomy campaigns on small analogues") {
    const CampaignReport r2 = verify_clique_dichotomy(2, 4, {});
    CHECK(r2.all_passed());
    const CampaignReport r3 = verify_clique_dichotomy(3, 5, {});
    CHECK(r3.records.size() == 22);
    CHECK(r3.all_passed());
    CHECK(r3.note == small_scale_note);
    int free_side = 0;
    for (const auto& rec : r3.records) {
        if (std::get<std::string>(*field(rec, "side")) == "clique-free") {
            ++free_side;
            CHECK(rec.lambda <= 1.0 / 16 - strictness_margin);
        }
    }
    CHECK(free_side > 0);
}

TEST_CASE("bounds and power-inequality campaigns") {
    const CampaignReport b = verify_bounds(4, 5, 60);
    CHECK(b.all_passed());
    const VerificationRecord& scan = b.records.back();
    CHECK(scan.campaign == "bounds-first-nonempty");
    CHECK(scan.n == 55);
    CHECK(std::get<std::string>(*field(scan, "width_clique_free")) == "17");
    const CampaignReport p = verify_power_inequality(4, 6, 200);
    CHECK(p.records.size() == 3);
    CHECK(p.all_passed());
}

TEST_CASE("random corpus is reproducible and within range") {
    CorpusSpec spec;
    spec.count = 50;
    spec.seed = 5;
    const auto a = random_corpus(spec);
    const auto b = random_corpus(spec);
    CHECK(a == b);
    for (const auto& g : a) {
        CHECK(g.uniformity() >= 2);
        CHECK(g.uniformity() <= 4);
        CHECK(g.vertex_count() <= 7);
        CHECK(g.vertex_count() > g.uniformity());
        CHECK(g.edge_count() >= 1);
    }
}

TEST_CASE("compression monotonicity on a small corpus") {
    CorpusSpec spec;
    spec.count = 30;
    spec.n_max = 6;
    const CampaignReport report = verify_compression_monotone(spec, {});
    CHECK(report.records.size() == 30);
    CHECK(report.all_passed());
}

TEST_CASE("report bodies do not depend on the worker count") {
    CampaignOptions one;
    one.workers = 1;
    CampaignOptions three;
    three.workers = 3;
    CHECK(body(verify_clique_dichotomy(3, 5, one)) == body(verify_clique_dichotomy(3, 5, three)));
    CorpusSpec spec;
    spec.count = 20;
    spec.n_max = 6;
    CHECK(body(verify_compression_monotone(spec, one)) == body(verify_compression_monotone(spec, three)));
}

TEST_CASE("report layout") {
    CampaignOptions opts;
    opts.seed = 4;
    const CampaignReport report = verify_colex_plateau(2, 4, opts);
    std::ostringstream jsonl;
    write_jsonl(report, jsonl);
    std::istringstream lines(jsonl.str());
    std::vector<std::string> rows;
    for (std::string line; std::getline(lines, line);) rows.push_back(line);
    REQUIRE(rows.size() == report.records.size() + 3);
    CHECK(rows.front().find("\"header\":true") != std::string::npos);
    CHECK(rows[rows.size() - 2].find("\"instances\":3") != std::string::npos);
    CHECK(rows[rows.size() - 2].find("\"seed\":4") != std::string::npos);
    CHECK(rows.back().find("\"trailer\":true") != std::string::npos);
    std::ostringstream csv;
    write_csv(report, csv);
    CHECK(csv.str().rfind("campaign,index,r,n,m,signature,lambda,reference,clique,pass,tol,margin,extra", 0) == 0);
    CHECK(summary_line(report.summary()).find("\"passes\":3") != std::string::npos);
}

TEST_CASE("neighbourhood dichotomy diagnostics") {
    const Hypergraph g(3, 5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
    const NeighborhoodDiagnostic d = check_neighborhood_dichotomy(g, 5);
    CHECK(d.precondition == "ok");
    CHECK(d.window == 5);
    CHECK(d.missing_link_sets == 8);
    CHECK(d.missing_edges == 7);
    CHECK(d.pair_bound == 0);
    CHECK(d.lambda_strictly_below);
    CHECK_FALSE(d.link_count_holds);
    CHECK(d.link_dichotomy_holds());
    CHECK(d.edge_dichotomy_holds());

    CHECK(check_neighborhood_dichotomy(Hypergraph(3, 5, {{2, 3, 4}}), 5).precondition == "not-left-compressed");
    CHECK(check_neighborhood_dichotomy(make_colex_graph(3, 4), 5).precondition == "contains-[t-1]^(r)");
    CHECK(check_neighborhood_dichotomy(Hypergraph(2, 4, {{1, 2}}), 4).precondition == "window-out-of-range");
    CHECK(check_neighborhood_dichotomy(make_complete(6, 3), 5).precondition == "graph-not-on-[t]");
}

TEST_CASE("colex signature lists edge ranks") {
    CHECK(colex_signature(make_colex_graph(3, 5)) == std::vector<long long>{0, 1, 2, 3, 4});
    CHECK(colex_signature(Hypergraph(2, 4, {{3, 4}, {1, 2}})) == std::vector<long long>{0, 5});
}

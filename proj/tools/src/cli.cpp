#include "hyperlag/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperlag/campaigns.hpp"
#include "hyperlag/clique.hpp"
#include "hyperlag/compression.hpp"
#include "hyperlag/errors.hpp"
#include "hyperlag/io.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/parallel.hpp"
#include "hyperlag/report.hpp"

namespace hyperlag::cli {

namespace {

using nlohmann::ordered_json;
using namespace hyperlag::lab;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned env_workers() {
    if (const char* value = std::getenv("HYPERLAG_WORKERS")) {
        try {
            const long parsed = std::stol(value);
            if (parsed >= 1) return static_cast<unsigned>(parsed);
        } catch (const std::exception&) {
        }
        throw usage_error("HYPERLAG_WORKERS must be a positive integer");
    }
    return default_workers();
}

struct Config {
    int r = 3;
    int t = 5;
    int n = 6;
    std::uint64_t m = 4;
    double tolerance = 1e-7;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    std::uint64_t budget = 1'000'000;
    std::string output = "-";
    std::string format = "jsonl";
    std::string input = "-";
    bool oracle = false;
    int depth = 6;
    bool to_fixpoint = false;
    std::vector<int> pair;
    int t_min = 0;
    int t_max = 100;
    int r_min = 4;
    int r_max = 12;
    std::size_t count = 500;
    int n_max = 7;
    int ms_n = 5;
};

// Reads the hypergraph input named by cfg.input ("-" is standard input).
std::vector<Hypergraph> load_graphs(const std::string& path, std::istream& in) {
    std::vector<Hypergraph> graphs;
    if (path == "-") {
        graphs = read_hypergraphs(in);
    } else {
        std::ifstream file(path);
        if (!file) throw usage_error("cannot open input file: " + path);
        graphs = read_hypergraphs(file);
    }
    if (graphs.empty()) throw usage_error("no hypergraph in input: " + path);
    return graphs;
}

template <typename Fn>
void with_output(const Config& cfg, std::ostream& out, Fn&& write) {
    if (cfg.output == "-") {
        write(out);
        out.flush();
        return;
    }
    std::ofstream file(cfg.output);
    if (!file) throw usage_error("cannot open output file: " + cfg.output);
    write(file);
}

ordered_json result_json(const OptResult& res) {
    ordered_json j;
    j["lambda"] = res.lambda_value;
    j["weights"] = res.weighting.values();
    j["support"] = res.support;
    j["kkt"] = res.kkt_residual;
    j["iters"] = res.iterations;
    j["converged"] = res.converged;
    return j;
}

CampaignOptions campaign_options(const Config& cfg) {
    CampaignOptions opts;
    opts.tolerance = cfg.tolerance;
    opts.seed = cfg.seed;
    opts.workers = cfg.workers == 0 ? env_workers() : cfg.workers;
    opts.budget = cfg.budget;
    return opts;
}

int emit_report(const Config& cfg, const CampaignReport& report, std::ostream& out, std::ostream& err) {
    if (cfg.format != "jsonl" && cfg.format != "csv") throw usage_error("unknown format: " + cfg.format);
    with_output(cfg, out, [&](std::ostream& os) {
        if (cfg.format == "csv") {
            write_csv(report, os);
        } else {
            write_jsonl(report, os);
        }
    });
    err << summary_line(report.summary()) << '\n';
    return report.all_passed() ? exit_ok : exit_check_failed;
}

void add_campaign_flags(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--tol", cfg.tolerance, "Absolute tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "Base seed");
    cmd->add_option("--workers", cfg.workers, "Worker threads (default: HYPERLAG_WORKERS or hardware)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget", cfg.budget, "Maximum planned instance count");
    cmd->add_option("-o,--output", cfg.output, "Report path (- for stdout)");
    cmd->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"jsonl", "csv"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Hypergraph Lagrangians, colex graphs and verification campaigns", "hyperlag"};
    app.require_subcommand(1);
    std::function<int()> action;

    auto* colex = app.add_subcommand("colex", "Colex constructions")->require_subcommand(1);
    auto* gen = colex->add_subcommand("gen", "Print the first m r-sets in colex order");
    gen->add_option("-r", cfg.r, "Uniformity")->required()->check(CLI::Range(1, 64));
    gen->add_option("-m", cfg.m, "Edge count")->required();
    add_campaign_flags(gen, cfg);
    gen->callback([&] {
        action = [&] {
            const Hypergraph g = make_colex_graph(cfg.r, cfg.m);
            with_output(cfg, out, [&](std::ostream& os) { os << to_text(g) << '\n'; });
            return exit_ok;
        };
    });

    auto* lag = app.add_subcommand("lagrangian", "Lagrangian computations")->require_subcommand(1);
    auto* solve = lag->add_subcommand("solve", "Maximize the Lagrangian of each input hypergraph");
    solve->add_option("-i,--input", cfg.input, "Hypergraph file (- for stdin)")->required();
    solve->add_flag("--oracle", cfg.oracle, "Use the exhaustive support oracle");
    solve->add_option("--depth", cfg.depth, "Oracle grid depth")->check(CLI::Range(1, 64));
    add_campaign_flags(solve, cfg);
    solve->callback([&] {
        action = [&] {
            const auto graphs = load_graphs(cfg.input, in);
            SolverOptions so;
            so.seed = cfg.seed;
            with_output(cfg, out, [&](std::ostream& os) {
                for (const Hypergraph& g : graphs) {
                    const OptResult res = cfg.oracle ? oracle_maximize(g, cfg.depth) : maximize(g, so);
                    os << result_json(res).dump() << '\n';
                }
            });
            return exit_ok;
        };
    });

    auto* clique = app.add_subcommand("clique", "Maximum clique order and witness");
    clique->add_option("-i,--input", cfg.input, "Hypergraph file (- for stdin)")->required();
    add_campaign_flags(clique, cfg);
    clique->callback([&] {
        action = [&] {
            const auto graphs = load_graphs(cfg.input, in);
            with_output(cfg, out, [&](std::ostream& os) {
                for (const Hypergraph& g : graphs) {
                    const CliqueResult res = max_clique_order(g);
                    ordered_json j;
                    j["omega"] = res.order;
                    j["witness"] = res.witness;
                    os << j.dump() << '\n';
                }
            });
            return exit_ok;
        };
    });

    auto* comp = app.add_subcommand("compress", "Left-compression of each input hypergraph");
    comp->add_option("-i,--input", cfg.input, "Hypergraph file (- for stdin)")->required();
    auto* fix = comp->add_flag("--to-fixpoint", cfg.to_fixpoint, "Compress until left-compressed");
    comp->add_option("--pair", cfg.pair, "Apply the single (i, j) compression")->expected(2)->excludes(fix);
    add_campaign_flags(comp, cfg);
    comp->callback([&] {
        action = [&] {
            const auto graphs = load_graphs(cfg.input, in);
            with_output(cfg, out, [&](std::ostream& os) {
                for (const Hypergraph& g : graphs) {
                    Hypergraph h = cfg.to_fixpoint        ? compress_to_fixpoint(g)
                                   : cfg.pair.size() == 2 ? compress(g, cfg.pair[0], cfg.pair[1])
                                                          : compress_sweep(g);
                    os << to_text(h) << '\n';
                }
            });
            return exit_ok;
        };
    });

    auto* verify = app.add_subcommand("verify", "Verification campaigns")->require_subcommand(1);
    const auto campaign = [&](const char* name, const char* help) {
        auto* cmd = verify->add_subcommand(name, help);
        add_campaign_flags(cmd, cfg);
        return cmd;
    };

    auto* ms = campaign("ms", "Clique-number formula on all 2-graphs with n vertices");
    ms->add_option("-n", cfg.ms_n, "Vertex count")->check(CLI::Range(2, 7));
    ms->callback([&] {
        action = [&] { return emit_report(cfg, verify_motzkin_straus(cfg.ms_n, campaign_options(cfg)), out, err); };
    });

    auto* ff = campaign("ff", "Colex graph maximizes the Lagrangian among m-edge r-graphs on [n]");
    ff->add_option("-r", cfg.r, "Uniformity")->check(CLI::Range(2, 7));
    ff->add_option("-n", cfg.n, "Vertex count")->check(CLI::Range(2, 7));
    ff->add_option("-m", cfg.m, "Edge count")->required();
    ff->callback([&] {
        action = [&] {
            return emit_report(cfg, verify_frankl_furedi(cfg.r, cfg.n, cfg.m, campaign_options(cfg)), out, err);
        };
    });

    auto* plateau = campaign("plateau", "Colex Lagrangian is constant across the plateau of t");
    plateau->add_option("-r", cfg.r, "Uniformity")->required()->check(CLI::Range(2, 12));
    plateau->add_option("-t", cfg.t, "Clique order")->required()->check(CLI::Range(3, 40));
    plateau->callback([&] {
        action = [&] { return emit_report(cfg, verify_colex_plateau(cfg.r, cfg.t, campaign_options(cfg)), out, err); };
    });

    auto* dich = campaign("dichotomy", "Clique versus clique-free Lagrangians across the plateau of t");
    dich->add_option("-r", cfg.r, "Uniformity")->required()->check(CLI::Range(2, 7));
    dich->add_option("-t", cfg.t, "Clique order")->required()->check(CLI::Range(3, 7));
    dich->callback([&] {
        action = [&] {
            return emit_report(cfg, verify_clique_dichotomy(cfg.r, cfg.t, campaign_options(cfg)), out, err);
        };
    });

    auto* bounds = campaign("bounds", "Exact edge-count bounds over a range of t");
    bounds->add_option("-r", cfg.r, "Uniformity")->required()->check(CLI::Range(4, 64));
    bounds->add_option("--t-min", cfg.t_min, "First t (default r + 1)");
    bounds->add_option("--scan-t", cfg.t_max, "Last t");
    bounds->callback([&] {
        action = [&] {
            const int t_min = cfg.t_min == 0 ? cfg.r + 1 : cfg.t_min;
            return emit_report(cfg, verify_bounds(cfg.r, t_min, cfg.t_max), out, err);
        };
    });

    auto* ineq = campaign("ineq", "Exact power inequality over r and t");
    ineq->add_option("--r-min", cfg.r_min, "Smallest r")->check(CLI::Range(4, 64));
    ineq->add_option("--r-max", cfg.r_max, "Largest r")->check(CLI::Range(4, 64));
    cfg.t_max = 100;
    auto* ineq_t = ineq->add_option("--t-max", cfg.t_max, "Largest t (default 10000)");
    ineq->callback([&] {
        action = [&] {
            const int t_max = ineq_t->count() > 0 ? cfg.t_max : 10000;
            return emit_report(cfg, verify_power_inequality(cfg.r_min, cfg.r_max, t_max), out, err);
        };
    });

    auto* mono = campaign("compress-mono", "Compression never decreases the Lagrangian on a random corpus");
    mono->add_option("--count", cfg.count, "Corpus size");
    mono->add_option("--r-min", cfg.r_min, "Smallest r");
    mono->add_option("--r-max", cfg.r_max, "Largest r");
    mono->add_option("--n-max", cfg.n_max, "Largest vertex count")->check(CLI::Range(3, 7));
    mono->callback([&] {
        action = [&] {
            CorpusSpec spec;
            spec.count = cfg.count;
            spec.r_min = mono->get_option("--r-min")->count() > 0 ? cfg.r_min : 2;
            spec.r_max = mono->get_option("--r-max")->count() > 0 ? cfg.r_max : 4;
            spec.n_max = cfg.n_max;
            spec.seed = cfg.seed;
            return emit_report(cfg, verify_compression_monotone(spec, campaign_options(cfg)), out, err);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        return action ? action() : exit_usage;
    } catch (const budget_exceeded_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace hyperlag::cli

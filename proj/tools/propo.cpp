// propo: command-line front end for Property O decisions, constructions, censuses, sampling and bounds.
//
// Exit codes: 0 success / HAS_O, 1 FAILS_O (or a failed reproduction / rejected certificate),
// 2 usage or input error, 3 INDETERMINATE, 4 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "propo/io.hpp"
#include "propo/report.hpp"
#include "propo/reproduce.hpp"

namespace {

using namespace propo;

constexpr int exit_ok = 0;
constexpr int exit_fails = 1;
constexpr int exit_input = 2;
constexpr int exit_indeterminate = 3;
constexpr int exit_defect = 4;

unsigned default_jobs() {
    if (const char* env = std::getenv("PROPO_JOBS")) {
        try {
            const auto v = std::stoul(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
    }
    return 1;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw input_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

std::pair<std::uint64_t, std::uint64_t> parse_partition(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw input_error("partition must look like A..B");
    }
    try {
        std::size_t used = 0;
        const auto a = std::stoull(text.substr(0, dots), &used);
        if (used != dots) {
            throw input_error("bad partition start");
        }
        const auto rest = text.substr(dots + 2);
        const auto b = std::stoull(rest, &used);
        if (used != rest.size()) {
            throw input_error("bad partition end");
        }
        return {a, b};
    } catch (const std::logic_error&) {
        throw input_error("partition must look like A..B with non-negative integers");
    }
}

struct CheckArgs {
    std::string file;
    std::string method = "dfs";
    std::optional<double> max_seconds;
    std::optional<std::uint64_t> max_nodes;
    std::string heuristic = "ascending";
    bool allow_large = false;
};

int run_check(const CheckArgs& a) {
    const auto text = read_text(a.file);
    std::istringstream in(text);
    const auto h = parse_hypergraph(in);
    json config{{"command", "check"}, {"input_sha256", sha256_hex(text)}, {"method", a.method}, {"heuristic", a.heuristic},
                {"max_seconds", a.max_seconds ? json(*a.max_seconds) : json(nullptr)},
                {"max_nodes", a.max_nodes ? json(*a.max_nodes) : json(nullptr)}};
    const auto t0 = std::chrono::steady_clock::now();
    WitnessCertificate cert;
    if (a.method == "naive") {
        cert = naive_find_witness(h);
    } else {
        SearchBudget budget{a.max_nodes, a.max_seconds, a.allow_large};
        cert = find_witness(h, budget, a.heuristic == "least-progress" ? VertexHeuristic::least_progress : VertexHeuristic::ascending);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(envelope(config, to_json(cert), std::nullopt, seconds));
    std::cerr << a.file << ": " << to_string(cert.status) << " (" << h.vertex_count() << " vertices, " << h.edge_count()
              << " edges, " << cert.stats.nodes_expanded << " nodes)\n";
    switch (cert.status) {
        case Status::has_o: return exit_ok;
        case Status::fails_o: return exit_fails;
        case Status::indeterminate: return exit_indeterminate;
    }
    return exit_defect;
}

int run_verify(const std::string& graph_file, const std::string& cert_file) {
    const auto h = read_file(graph_file).graph;
    auto doc = json::parse(read_text(cert_file));
    const auto cert = certificate_from_json(doc.contains("report") ? doc.at("report") : doc);
    if (cert.status == Status::indeterminate) {
        throw input_error("an INDETERMINATE certificate carries nothing to verify");
    }
    const bool ok = verify_certificate(h, cert);
    json config{{"command", "verify-certificate"}, {"input_sha256", sha256_hex(read_text(graph_file))},
                {"certificate_sha256", sha256_hex(read_text(cert_file))}};
    emit(envelope(config, {{"status", to_string(cert.status)}, {"verified", ok}}));
    std::cerr << "certificate " << (ok ? "verified" : "REJECTED") << '\n';
    return ok ? exit_ok : exit_fails;
}

int run_construct(unsigned k, const std::string& out_path, const std::string& layout_path, bool allow_large, bool stream) {
    json config{{"command", "construct"}, {"k", k}};
    json summary;
    if (stream) {
        std::ofstream out(out_path);
        if (!out) {
            throw input_error("cannot write " + out_path);
        }
        out << k << ' ' << gk_vertex_count(k) << ' ' << gk_edge_count(k) << '\n';
        std::array<std::uint64_t, 5> tags{};
        for_each_gk_edge(k, [&](std::span<const vertex_id> e, GkEdgeType t) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                out << (i ? " " : "") << e[i];
            }
            out << '\n';
            ++tags[static_cast<std::size_t>(t)];
        });
        summary = {{"vertex_count", gk_vertex_count(k)}, {"edge_count", gk_edge_count(k)}, {"streamed", true}};
        if (!layout_path.empty()) {
            std::ofstream(layout_path) << to_json(GkLayout{k, {}}, false).dump(2) << '\n';
        }
    } else {
        const auto g = build_gk(k, allow_large);
        std::ofstream out(out_path);
        if (!out) {
            throw input_error("cannot write " + out_path);
        }
        out << serialize_hypergraph(g.graph);
        std::array<std::uint64_t, 5> tags{};
        for (auto t : g.layout.edge_type) {
            ++tags[static_cast<std::size_t>(t)];
        }
        summary = {{"vertex_count", g.graph.vertex_count()},
                   {"edge_count", g.graph.edge_count()},
                   {"edge_type_counts", {{"base", tags[0]}, {"T1", tags[1]}, {"T2", tags[2]}, {"T3", tags[3]}, {"T4", tags[4]}}},
                   {"streamed", false}};
        if (!layout_path.empty()) {
            std::ofstream(layout_path) << to_json(g.layout).dump(2) << '\n';
        }
    }
    emit(envelope(config, summary));
    std::cerr << "G_" << k << ": " << summary["vertex_count"] << " vertices, " << summary["edge_count"] << " edges -> " << out_path << '\n';
    return exit_ok;
}

}

int main(int argc, char** argv) {
    CLI::App app{"propo: Property O toolkit for oriented k-uniform hypergraphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version));

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Decide Property O for a hypergraph file");
    check_cmd->add_option("FILE", check.file, "hypergraph file")->required();
    check_cmd->add_option("--method", check.method, "dfs or naive")->check(CLI::IsMember({"dfs", "naive"}));
    check_cmd->add_option("--max-seconds", check.max_seconds, "wall-clock budget");
    check_cmd->add_option("--max-nodes", check.max_nodes, "search node budget");
    check_cmd->add_option("--heuristic", check.heuristic, "ascending or least-progress")
        ->check(CLI::IsMember({"ascending", "least-progress"}));
    check_cmd->add_flag("--allow-large", check.allow_large, "permit unbounded search above 10 vertices");

    std::string verify_graph, verify_cert;
    auto* verify_cmd = app.add_subcommand("verify-certificate", "Re-check a certificate against its hypergraph");
    verify_cmd->add_option("FILE", verify_graph, "hypergraph file")->required();
    verify_cmd->add_option("CERTIFICATE", verify_cert, "certificate JSON")->required();

    unsigned construct_k = 0;
    std::string construct_out, construct_layout;
    bool construct_large = false, construct_stream = false;
    auto* construct_cmd = app.add_subcommand("construct", "Write the recursive family G_k");
    construct_cmd->add_option("--k", construct_k, "level k >= 2")->required();
    construct_cmd->add_option("--out", construct_out, "output hypergraph file")->required();
    construct_cmd->add_option("--layout", construct_layout, "layout JSON file");
    construct_cmd->add_flag("--allow-large", construct_large, "materialize above k = 5");
    construct_cmd->add_flag("--stream", construct_stream, "stream edges to the file without materializing");

    unsigned census_n = 0, census_k = 0, census_jobs = default_jobs();
    bool census_canonical = false;
    std::string census_partition, census_checkpoint, census_method = "bitset";
    auto* census_cmd = app.add_subcommand("census", "Count k-tournaments on n vertices with Property O");
    census_cmd->add_option("--n", census_n)->required();
    census_cmd->add_option("--k", census_k)->required();
    census_cmd->add_option("--jobs", census_jobs, "worker threads (default $PROPO_JOBS or 1)");
    census_cmd->add_flag("--canonical", census_canonical, "only relabeling-minimal tournaments");
    census_cmd->add_option("--partition", census_partition, "index range A..B");
    census_cmd->add_option("--checkpoint", census_checkpoint, "resumable checkpoint JSON");
    census_cmd->add_option("--method", census_method, "bitset or dfs")->check(CLI::IsMember({"bitset", "dfs"}));

    unsigned min_n = 0, min_k = 0, min_max_edges = 0;
    std::optional<double> min_budget;
    std::optional<unsigned> resume_edges;
    std::optional<std::uint64_t> resume_system;
    auto* min_cmd = app.add_subcommand("minedges", "Least edge count of a Property O k-graph on n vertices");
    min_cmd->add_option("--n", min_n)->required();
    min_cmd->add_option("--k", min_k)->required();
    min_cmd->add_option("--max-edges", min_max_edges)->required();
    min_cmd->add_option("--budget-seconds", min_budget);
    min_cmd->add_option("--resume-edges", resume_edges, "checkpoint edge count");
    min_cmd->add_option("--resume-system", resume_system, "checkpoint set-system index");

    unsigned tight_n = 0, tight_k = 0;
    auto* tight_cmd = app.add_subcommand("tight", "Search Property O families with exactly k! edges");
    tight_cmd->add_option("--n", tight_n)->required();
    tight_cmd->add_option("--k", tight_k)->required();

    SampleConfig sample_cfg;
    unsigned sample_jobs = default_jobs();
    bool sample_thm2 = false, sample_exact = false, sample_no_decide = false;
    auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo over uniform random k-tournaments");
    sample_cmd->add_option("--n", sample_cfg.n)->required();
    sample_cmd->add_option("--k", sample_cfg.k)->required();
    sample_cmd->add_option("--trials", sample_cfg.trials);
    sample_cmd->add_option("--seed", sample_cfg.seed);
    sample_cmd->add_option("--jobs", sample_jobs);
    sample_cmd->add_flag("--thm2", sample_thm2, "run the modified-order witness attempt per trial");
    sample_cmd->add_flag("--exact", sample_exact, "decide the whole tournament space instead of sampling");
    sample_cmd->add_flag("--no-decide", sample_no_decide, "skip per-trial Property O decisions");

    unsigned bounds_k = 0, bounds_precision = default_precision_digits;
    std::optional<double> bounds_alpha;
    std::optional<std::uint64_t> bounds_n;
    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the closed-form bounds at k");
    bounds_cmd->add_option("--k", bounds_k)->required();
    bounds_cmd->add_option("--alpha", bounds_alpha);
    bounds_cmd->add_option("--n", bounds_n);
    bounds_cmd->add_option("--precision", bounds_precision, "significant digits (rounded up to 50/100/200/400)");

    std::string claim;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "Run a bundled reproduction recipe");
    reproduce_cmd->add_option("CLAIM", claim, "thm1-lower, g2, g3, n5k3-census, f2, tight-k3, eq4-scan, phase1-claim")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*check_cmd) {
            return run_check(check);
        }
        if (*verify_cmd) {
            return run_verify(verify_graph, verify_cert);
        }
        if (*construct_cmd) {
            return run_construct(construct_k, construct_out, construct_layout, construct_large, construct_stream);
        }
        if (*census_cmd) {
            CensusConfig cfg;
            cfg.n = census_n;
            cfg.k = census_k;
            cfg.canonical_only = census_canonical;
            cfg.method = census_method == "dfs" ? CensusMethod::dfs : CensusMethod::bitset;
            cfg.jobs = census_jobs;
            if (!census_partition.empty()) {
                cfg.partition = parse_partition(census_partition);
            }
            if (!census_checkpoint.empty()) {
                cfg.checkpoint = census_checkpoint;
            }
            const auto report = tournament_census(cfg);
            json config = census_identity(cfg, report.start_index, report.end_index);
            emit(envelope(config, to_json(report), std::nullopt, report.wall_time_seconds));
            std::cerr << "census n=" << census_n << " k=" << census_k << ": " << report.property_o_count << " of "
                      << report.total_enumerated << " have Property O\n";
            return exit_ok;
        }
        if (*min_cmd) {
            MinEdgesConfig cfg{.n = min_n, .k = min_k, .max_edges = min_max_edges, .max_seconds = min_budget};
            if (resume_edges || resume_system) {
                cfg.resume = MinEdgesCheckpoint{resume_edges.value_or(0), resume_system.value_or(0)};
            }
            const auto result = min_edges_search(cfg);
            json config{{"command", "minedges"}, {"n", min_n}, {"k", min_k}, {"max_edges", min_max_edges},
                        {"budget_seconds", min_budget ? json(*min_budget) : json(nullptr)}};
            emit(envelope(config, to_json(result)));
            std::cerr << "minedges: " << to_string(result.outcome);
            if (result.minimum) {
                std::cerr << " minimum = " << *result.minimum;
            }
            std::cerr << '\n';
            return result.outcome == SearchOutcome::indeterminate ? exit_indeterminate : exit_ok;
        }
        if (*tight_cmd) {
            const auto result = tight_family_search(tight_n, tight_k);
            emit(envelope({{"command", "tight"}, {"n", tight_n}, {"k", tight_k}}, to_json(result)));
            std::cerr << "tight: " << to_string(result.outcome) << '\n';
            return exit_ok;
        }
        if (*sample_cmd) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto report = estimate_property_o_probability(sample_cfg, sample_exact, sample_jobs, sample_thm2, !sample_no_decide);
            const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            json config{{"command", "sample"}, {"n", sample_cfg.n}, {"k", sample_cfg.k}, {"trials", sample_cfg.trials},
                        {"seed", sample_cfg.seed}, {"thm2", sample_thm2}, {"exact", sample_exact}, {"decide", !sample_no_decide}};
            emit(envelope(config, to_json(report), sample_cfg.seed, seconds));
            if (report.decided) {
                std::cerr << "sample: fraction with Property O = " << report.fraction << " +/- " << report.ci95 << '\n';
            }
            return exit_ok;
        }
        if (*bounds_cmd) {
            const auto report = bounds_report(bounds_k, bounds_alpha, bounds_n, bounds_precision);
            json config{{"command", "bounds"}, {"k", bounds_k}, {"alpha", bounds_alpha ? json(*bounds_alpha) : json(nullptr)},
                        {"n", bounds_n ? json(*bounds_n) : json(nullptr)}, {"precision", report.precision_digits}};
            emit(envelope(config, to_json(report)));
            return exit_ok;
        }
        if (*reproduce_cmd) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto result = reproduce(claim);
            const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            json report{{"claim", result.claim}, {"expectation", result.expectation},
                        {"result", result.passed ? "PASS" : "FAIL"}, {"details", result.details}};
            emit(envelope({{"command", "reproduce"}, {"claim", claim}}, report, reproduce_seed, seconds));
            std::cerr << (result.passed ? "PASS " : "FAIL ") << result.claim << ": " << result.expectation << '\n';
            return result.passed ? exit_ok : exit_fails;
        }
    } catch (const invariant_violation& e) {
        std::cerr << "propo: internal invariant violated: " << e.what() << '\n';
        return exit_defect;
    } catch (const std::exception& e) {
        std::cerr << "propo: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "core.hpp"
#include "decide.hpp"
#include "enumerate.hpp"
#include "rng.hpp"

namespace propo {

struct SampleConfig {
    unsigned n = 0;
    unsigned k = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

// Uniform k-tournament: each subset gets an independent uniform orientation from the trial's substream.
inline Tournament sample_tournament(const SampleConfig& cfg, std::uint64_t trial_index) {
    if (cfg.k < 2 || cfg.k > cfg.n) {
        throw input_error("sampling needs 2 <= k <= n");
    }
    auto rng = Xoshiro256ss::substream(cfg.seed, trial_index);
    const auto kf = factorial(cfg.k);
    std::vector<std::uint32_t> orientation(binomial(cfg.n, cfg.k));
    for (auto& o : orientation) {
        o = static_cast<std::uint32_t>(rng.uniform(kf));
    }
    return Tournament(cfg.n, cfg.k, std::move(orientation));
}

// Edges consistent with the natural order are exactly those with the identity orientation.
inline std::size_t natural_consistent_count(const Tournament& t) {
    return static_cast<std::size_t>(std::count(t.orientation().begin(), t.orientation().end(), 0u));
}

// Phase-1 modified order for a tournament and what it achieves.
struct Thm2Trace {
    std::vector<std::size_t> consistent_set;   // C(T): subset indices whose edge follows the natural order
    std::vector<vertex_id> minima;             // M: least vertex of each member of C(T), ascending
    std::vector<vertex_id> selection;          // W: one vertex of K \ M per member K, ascending
    LinearOrder modified_order;                // W ascending, then the rest ascending
    bool applicable = false;                   // every member K of C(T) has K \ M nonempty
    bool claim_holds = false;                  // no member of C(T) is consistent with the modified order
    bool witness_found = false;                // no edge at all is consistent with the modified order
    std::size_t consistent_after = 0;          // edges consistent with the modified order
};

inline Thm2Trace thm2_witness_attempt(const Tournament& t) {
    const unsigned n = t.vertex_count(), k = t.uniformity();
    const auto subsets = colex_subsets(n, k);
    auto subset = [&](std::size_t s) { return std::span(subsets).subspan(s * k, k); };

    Thm2Trace trace;
    std::vector<bool> in_m(n, false), in_w(n, false);
    for (std::size_t s = 0; s < t.subset_count(); ++s) {
        if (t.orientation()[s] == 0) {
            trace.consistent_set.push_back(s);
            in_m[subset(s)[0]] = true;
        }
    }
    trace.applicable = true;
    for (auto s : trace.consistent_set) {
        const auto members = subset(s);
        if (std::all_of(members.begin(), members.end(), [&](vertex_id v) { return in_m[v]; })) {
            trace.applicable = false;
        }
    }
    for (vertex_id v = 0; v < n; ++v) {
        if (in_m[v]) {
            trace.minima.push_back(v);
        }
    }
    if (!trace.applicable) {
        trace.modified_order = LinearOrder::identity(n);
        return trace;
    }
    // greedy transversal: a member already hit by W needs no new vertex; otherwise take its least non-minimum
    for (auto s : trace.consistent_set) {
        const auto members = subset(s);
        if (std::any_of(members.begin(), members.end(), [&](vertex_id v) { return in_w[v]; })) {
            continue;
        }
        for (auto v : members) {
            if (!in_m[v]) {
                in_w[v] = true;
                break;
            }
        }
    }
    std::vector<vertex_id> perm;
    perm.reserve(n);
    for (vertex_id v = 0; v < n; ++v) {
        if (in_w[v]) {
            trace.selection.push_back(v);
            perm.push_back(v);
        }
    }
    for (vertex_id v = 0; v < n; ++v) {
        if (!in_w[v]) {
            perm.push_back(v);
        }
    }
    trace.modified_order = LinearOrder(std::move(perm));

    const auto flat = t.flat_edges();
    trace.claim_holds = true;
    for (auto s : trace.consistent_set) {
        if (is_consistent(std::span(flat).subspan(s * k, k), trace.modified_order)) {
            trace.claim_holds = false;
        }
    }
    for (std::size_t s = 0; s < t.subset_count(); ++s) {
        trace.consistent_after += is_consistent(std::span(flat).subspan(s * k, k), trace.modified_order);
    }
    trace.witness_found = trace.consistent_after == 0;
    return trace;
}

struct SampleReport {
    SampleConfig config;
    bool exact = false;
    std::uint64_t property_o_count = 0;
    double fraction = 0;
    double ci95 = 0;                  // normal-approximation half-width; 0 in exact mode
    std::uint64_t consistent_total = 0;
    std::uint64_t consistent_square_total = 0;
    double mean_consistent = 0;       // mean |C(T)|
    double mean_consistent_se = 0;    // its standard error
    bool decided = true;              // false when Property O was not decided (thm2-only runs)

    bool thm2 = false;
    std::uint64_t applicable = 0;
    std::uint64_t claim_checked = 0;  // applicable traces whose claim was checked
    std::uint64_t claim_violations = 0;
    std::uint64_t witness_found = 0;
};

namespace detail {

inline void sample_range(const SampleConfig& cfg, std::uint64_t begin, std::uint64_t end, bool decide, bool thm2,
                         SampleReport& out) {
    WitnessSearch search(cfg.n, cfg.k);
    for (std::uint64_t i = begin; i < end; ++i) {
        const auto t = sample_tournament(cfg, i);
        const auto c = natural_consistent_count(t);
        out.consistent_total += c;
        out.consistent_square_total += c * c;
        if (decide && search.run(t.flat_edges()).status == Status::has_o) {
            ++out.property_o_count;
            check_counting_bound(cfg.k, t.subset_count());
        }
        if (thm2) {
            const auto trace = thm2_witness_attempt(t);
            if (trace.applicable) {
                ++out.applicable;
                ++out.claim_checked;
                out.claim_violations += !trace.claim_holds;
            }
            out.witness_found += trace.witness_found;
        }
    }
}

}

// Monte Carlo estimate of the fraction of k-tournaments on n vertices with Property O. Trials are split
// across `jobs` threads; per-trial substreams and integer aggregation make the report schedule-independent.
// With exact = true the full tournament space is decided instead.
inline SampleReport estimate_property_o_probability(const SampleConfig& cfg, bool exact = false, unsigned jobs = 1,
                                                    bool thm2 = false, bool decide = true) {
    if (cfg.k < 2 || cfg.k > cfg.n) {
        throw input_error("sampling needs 2 <= k <= n");
    }
    SampleReport report;
    report.config = cfg;
    report.thm2 = thm2;
    report.decided = decide || exact;
    if (exact) {
        const auto census = tournament_census(CensusConfig{.n = cfg.n, .k = cfg.k, .jobs = jobs});
        report.exact = true;
        report.config.trials = census.total_enumerated;
        report.property_o_count = census.property_o_count;
        report.fraction = static_cast<double>(census.property_o_count) / static_cast<double>(census.total_enumerated);
        return report;
    }
    if (cfg.trials == 0) {
        throw input_error("trials must be positive");
    }
    if (decide && cfg.n > unbounded_search_vertex_limit) {
        throw refusal_error("per-trial Property O decisions above n = 10 refused");
    }
    jobs = static_cast<unsigned>(std::clamp<std::uint64_t>(jobs, 1, cfg.trials));
    std::vector<SampleReport> parts(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
        const auto a = cfg.trials / jobs * j;
        const auto b = j + 1 == jobs ? cfg.trials : cfg.trials / jobs * (j + 1);
        workers.emplace_back([&, j, a, b] {
            try {
                detail::sample_range(cfg, a, b, decide, thm2, parts[j]);
            } catch (...) {
                errors[j] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    for (const auto& p : parts) {
        report.property_o_count += p.property_o_count;
        report.consistent_total += p.consistent_total;
        report.consistent_square_total += p.consistent_square_total;
        report.applicable += p.applicable;
        report.claim_checked += p.claim_checked;
        report.claim_violations += p.claim_violations;
        report.witness_found += p.witness_found;
    }
    const auto trials = static_cast<double>(cfg.trials);
    report.fraction = static_cast<double>(report.property_o_count) / trials;
    report.ci95 = 1.96 * std::sqrt(report.fraction * (1 - report.fraction) / trials);
    report.mean_consistent = static_cast<double>(report.consistent_total) / trials;
    const double second = static_cast<double>(report.consistent_square_total) / trials;
    const double variance = std::max(0.0, second - report.mean_consistent * report.mean_consistent) *
                            (cfg.trials > 1 ? trials / (trials - 1) : 1.0);
    report.mean_consistent_se = std::sqrt(variance / trials);
    return report;
}

}

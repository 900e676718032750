#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"

namespace propo {

enum class Status { has_o, fails_o, indeterminate };
enum class Method { dfs, naive, proof_guided };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::has_o: return "HAS_O";
        case Status::fails_o: return "FAILS_O";
        case Status::indeterminate: return "INDETERMINATE";
    }
    return "?";
}

inline const char* to_string(Method m) {
    switch (m) {
        case Method::dfs: return "dfs";
        case Method::naive: return "naive";
        case Method::proof_guided: return "proof_guided";
    }
    return "?";
}

// Order in which the DFS tries unplaced vertices at each level.
enum class VertexHeuristic {
    ascending,      // by vertex id
    least_progress  // vertex that extends the fewest still-consistent edge prefixes first, ties by id
};

// Above this vertex count an unbounded search must be requested explicitly.
inline constexpr unsigned unbounded_search_vertex_limit = 10;

struct SearchBudget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> max_seconds;
    bool allow_large = false;

    bool bounded() const { return max_nodes || max_seconds; }
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t orders_examined = 0;
};

// Outcome of a Property O decision. `witness_order` is present iff status == fails_o.
struct WitnessCertificate {
    Status status = Status::indeterminate;
    std::optional<LinearOrder> witness_order;
    Method method = Method::dfs;
    SearchStats stats;
};

// Depth-first construction of a witness order, one vertex per level. A branch dies as soon as the
// placed prefix contains a consistent edge. Each edge tracks how far its tuple has been placed in
// tuple order; placing a vertex out of turn kills the edge, placing its last vertex in turn makes it
// consistent. Reusable across instances of the same (n, k) without reallocating.
class WitnessSearch {
public:
    WitnessSearch(unsigned n, unsigned k, VertexHeuristic heuristic = VertexHeuristic::ascending)
        : n_(n), k_(k), heuristic_(heuristic), placed_(n), perm_(n), incident_(n) {}

    // `flat` holds valid edges over {0..n-1}, k entries each.
    WitnessCertificate run(std::span<const vertex_id> flat, const SearchBudget& budget = {}) {
        load(flat);
        budget_ = budget;
        stats_ = {};
        out_of_budget_ = false;
        start_ = std::chrono::steady_clock::now();
        std::fill(placed_.begin(), placed_.end(), false);

        WitnessCertificate cert;
        cert.method = Method::dfs;
        if (search(0)) {
            cert.status = Status::fails_o;
            cert.witness_order = LinearOrder(perm_);
            stats_.orders_examined = 1;
        } else {
            cert.status = out_of_budget_ ? Status::indeterminate : Status::has_o;
        }
        cert.stats = stats_;
        return cert;
    }

private:
    static constexpr std::uint8_t dead = 0xff;

    struct Incidence {
        std::uint32_t edge;
        std::uint8_t position;
    };

    void load(std::span<const vertex_id> flat) {
        const std::size_t m = flat.size() / k_;
        progress_.assign(m, 0);
        for (auto& list : incident_) {
            list.clear();
        }
        for (std::size_t e = 0; e < m; ++e) {
            for (unsigned p = 0; p < k_; ++p) {
                incident_[flat[e * k_ + p]].push_back({static_cast<std::uint32_t>(e), static_cast<std::uint8_t>(p)});
            }
        }
        undo_.clear();
        undo_.reserve(flat.size());
    }

    bool budget_exhausted() {
        if (budget_.max_nodes && stats_.nodes_expanded >= *budget_.max_nodes) {
            return true;
        }
        if (budget_.max_seconds && (stats_.nodes_expanded & 1023) == 0) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            return elapsed.count() >= *budget_.max_seconds;
        }
        return false;
    }

    // Whether placing v now completes some edge in tuple order.
    bool completes_consistent_edge(vertex_id v) const {
        for (const auto& inc : incident_[v]) {
            if (progress_[inc.edge] == inc.position && inc.position + 1u == k_) {
                return true;
            }
        }
        return false;
    }

    unsigned progress_score(vertex_id v) const {
        unsigned score = 0;
        for (const auto& inc : incident_[v]) {
            score += progress_[inc.edge] == inc.position;
        }
        return score;
    }

    void place(vertex_id v, unsigned depth) {
        placed_[v] = true;
        perm_[depth] = v;
        for (const auto& inc : incident_[v]) {
            auto& p = progress_[inc.edge];
            if (p == dead) {
                continue;
            }
            undo_.push_back({inc.edge, p});
            p = (p == inc.position) ? static_cast<std::uint8_t>(p + 1) : dead;
        }
    }

    void unplace(vertex_id v, std::size_t undo_mark) {
        while (undo_.size() > undo_mark) {
            progress_[undo_.back().edge] = undo_.back().position;
            undo_.pop_back();
        }
        placed_[v] = false;
    }

    bool try_vertex(vertex_id v, unsigned depth) {
        if (completes_consistent_edge(v)) {
            return false;
        }
        ++stats_.nodes_expanded;
        const auto mark = undo_.size();
        place(v, depth);
        const bool found = search(depth + 1);
        if (!found) {
            unplace(v, mark);
        }
        return found;
    }

    bool search(unsigned depth) {
        if (depth == n_) {
            return true;
        }
        if (budget_exhausted()) {
            out_of_budget_ = true;
            return false;
        }
        if (heuristic_ == VertexHeuristic::ascending) {
            for (vertex_id v = 0; v < n_; ++v) {
                if (!placed_[v] && try_vertex(v, depth)) {
                    return true;
                }
                if (out_of_budget_) {
                    return false;
                }
            }
            return false;
        }
        std::vector<std::pair<unsigned, vertex_id>> candidates;
        for (vertex_id v = 0; v < n_; ++v) {
            if (!placed_[v]) {
                candidates.emplace_back(progress_score(v), v);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        for (const auto& [score, v] : candidates) {
            if (try_vertex(v, depth)) {
                return true;
            }
            if (out_of_budget_) {
                return false;
            }
        }
        return false;
    }

    unsigned n_;
    unsigned k_;
    VertexHeuristic heuristic_;
    std::vector<bool> placed_;
    std::vector<vertex_id> perm_;
    std::vector<std::vector<Incidence>> incident_;
    std::vector<std::uint8_t> progress_;
    std::vector<Incidence> undo_;  // (edge, previous progress)
    SearchBudget budget_;
    SearchStats stats_;
    bool out_of_budget_ = false;
    std::chrono::steady_clock::time_point start_;
};

inline std::size_t count_consistent_edges(const OrientedHypergraph& h, const LinearOrder& order) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        count += is_consistent(h.edge(i), order);
    }
    return count;
}

struct CountingBoundAudit {
    std::atomic<std::uint64_t> instances{0};
    std::atomic<std::uint64_t> violations{0};
};

// Process-wide tally of Property O answers checked against the k! edge lower bound.
inline CountingBoundAudit& counting_bound_audit() {
    static CountingBoundAudit audit;
    return audit;
}

// Every Property O hypergraph has at least k! edges; a positive answer below that is a defect.
// `instances` positive answers with `edge_count` edges each are tallied before the check.
inline void check_counting_bound(unsigned k, std::uint64_t edge_count, std::uint64_t instances = 1) {
    auto& audit = counting_bound_audit();
    audit.instances += instances;
    if (k <= 20 && edge_count < factorial(k)) {
        audit.violations += instances;
        throw invariant_violation("Property O reported for " + std::to_string(edge_count) +
                                  " edges, fewer than k! = " + std::to_string(factorial(k)));
    }
}

inline void check_counting_bound(const OrientedHypergraph& h) { check_counting_bound(h.uniformity(), h.edge_count()); }

inline WitnessCertificate find_witness(const OrientedHypergraph& h, const SearchBudget& budget = {},
                                       VertexHeuristic heuristic = VertexHeuristic::ascending) {
    if (h.vertex_count() > unbounded_search_vertex_limit && !budget.bounded() && !budget.allow_large) {
        throw refusal_error("unbounded witness search on " + std::to_string(h.vertex_count()) +
                            " vertices refused; set a budget or allow_large");
    }
    if (h.uniformity() >= 0xff) {
        throw input_error("uniformity too large for the witness search");
    }
    WitnessSearch search(h.vertex_count(), h.uniformity(), heuristic);
    auto cert = search.run(h.flat(), budget);
    if (cert.status == Status::fails_o && count_consistent_edges(h, *cert.witness_order) != 0) {
        throw invariant_violation("witness search returned an order with a consistent edge");
    }
    if (cert.status == Status::has_o) {
        check_counting_bound(h);
    }
    return cert;
}

inline bool has_property_o(const OrientedHypergraph& h) {
    return find_witness(h).status == Status::has_o;
}

// Independent oracle: every one of the n! orders, every edge.
inline WitnessCertificate naive_find_witness(const OrientedHypergraph& h,
                                             unsigned max_vertices = unbounded_search_vertex_limit) {
    const unsigned n = h.vertex_count();
    if (n > max_vertices) {
        throw refusal_error("naive enumeration of " + std::to_string(n) + "! orders refused (limit n <= " +
                            std::to_string(max_vertices) + ")");
    }
    WitnessCertificate cert;
    cert.method = Method::naive;
    std::vector<vertex_id> perm(n);
    std::iota(perm.begin(), perm.end(), vertex_id{0});
    std::vector<vertex_id> rank(n);
    const unsigned k = h.uniformity();
    do {
        ++cert.stats.orders_examined;
        for (vertex_id pos = 0; pos < n; ++pos) {
            rank[perm[pos]] = pos;
        }
        bool any = false;
        for (std::size_t i = 0; i < h.edge_count() && !any; ++i) {
            auto e = h.edge(i);
            bool increasing = true;
            for (unsigned j = 1; j < k && increasing; ++j) {
                increasing = rank[e[j - 1]] < rank[e[j]];
            }
            any = increasing;
        }
        if (!any) {
            cert.status = Status::fails_o;
            cert.witness_order = LinearOrder(perm);
            return cert;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    cert.status = Status::has_o;
    check_counting_bound(h);
    return cert;
}

inline bool naive_property_o(const OrientedHypergraph& h, unsigned max_vertices = unbounded_search_vertex_limit) {
    return naive_find_witness(h, max_vertices).status == Status::has_o;
}

// For k = 2: Property O holds iff the digraph has a directed cycle.
inline bool cycle_oracle_k2(const OrientedHypergraph& h) {
    if (h.uniformity() != 2) {
        throw input_error("cycle_oracle_k2 needs k = 2");
    }
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    arcs.reserve(h.edge_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        arcs.emplace_back(h.edge(i)[0], h.edge(i)[1]);
    }
    return !detail::is_acyclic(h.vertex_count(), arcs);
}

// Re-checks a certificate against the hypergraph. FAILS_O is checked with the consistency predicate
// alone; HAS_O is re-derived by naive enumeration, so it is refused above the naive limit.
inline bool verify_certificate(const OrientedHypergraph& h, const WitnessCertificate& cert) {
    switch (cert.status) {
        case Status::fails_o:
            return cert.witness_order && cert.witness_order->size() == h.vertex_count() &&
                   count_consistent_edges(h, *cert.witness_order) == 0;
        case Status::has_o:
            return !cert.witness_order && naive_property_o(h);
        case Status::indeterminate:
            return false;
    }
    return false;
}

}

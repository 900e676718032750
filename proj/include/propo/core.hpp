#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"

namespace propo {

// An ordered k-tuple of distinct vertices.
class OrientedEdge {
public:
    OrientedEdge() = default;

    explicit OrientedEdge(std::vector<vertex_id> tuple) : tuple_(std::move(tuple)) {
        if (tuple_.size() < 2) {
            throw input_error("an oriented edge needs at least 2 vertices");
        }
        auto sorted = tuple_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw input_error("oriented edge has a repeated vertex");
        }
    }

    OrientedEdge(std::initializer_list<vertex_id> tuple) : OrientedEdge(std::vector<vertex_id>(tuple)) {}

    std::span<const vertex_id> tuple() const { return tuple_; }
    std::size_t size() const { return tuple_.size(); }
    vertex_id operator[](std::size_t i) const { return tuple_[i]; }

    std::vector<vertex_id> underlying_set() const {
        auto sorted = tuple_;
        std::sort(sorted.begin(), sorted.end());
        return sorted;
    }

    friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
    friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;

private:
    std::vector<vertex_id> tuple_;
};

// A permutation of {0..n-1}; perm[i] is the i-th smallest vertex.
class LinearOrder {
public:
    LinearOrder() = default;

    explicit LinearOrder(std::vector<vertex_id> perm) : perm_(std::move(perm)), rank_(perm_.size(), unset) {
        for (std::size_t pos = 0; pos < perm_.size(); ++pos) {
            const auto v = perm_[pos];
            if (v >= perm_.size() || rank_[v] != unset) {
                throw input_error("linear order is not a permutation of 0.." + std::to_string(perm_.size() - 1));
            }
            rank_[v] = static_cast<vertex_id>(pos);
        }
    }

    static LinearOrder identity(std::size_t n) {
        std::vector<vertex_id> perm(n);
        std::iota(perm.begin(), perm.end(), vertex_id{0});
        return LinearOrder(std::move(perm));
    }

    std::size_t size() const { return perm_.size(); }
    std::span<const vertex_id> perm() const { return perm_; }
    std::span<const vertex_id> ranks() const { return rank_; }
    vertex_id rank(vertex_id v) const { return rank_[v]; }
    vertex_id at(std::size_t pos) const { return perm_[pos]; }

    friend bool operator==(const LinearOrder& a, const LinearOrder& b) { return a.perm_ == b.perm_; }

private:
    static constexpr vertex_id unset = ~vertex_id{0};
    std::vector<vertex_id> perm_;
    std::vector<vertex_id> rank_;
};

// True iff the tuple entries appear in strictly increasing rank.
inline bool is_consistent(std::span<const vertex_id> edge, const LinearOrder& order) {
    for (auto v : edge) {
        if (v >= order.size()) {
            throw input_error("vertex " + std::to_string(v) + " outside order of size " + std::to_string(order.size()));
        }
    }
    for (std::size_t i = 1; i < edge.size(); ++i) {
        if (order.rank(edge[i - 1]) >= order.rank(edge[i])) {
            return false;
        }
    }
    return true;
}

inline bool is_consistent(const OrientedEdge& edge, const LinearOrder& order) {
    return is_consistent(edge.tuple(), order);
}

// Number of linear orders on n vertices consistent with one fixed oriented k-edge: n!/k!.
inline big_int consistent_order_count(unsigned n, unsigned k) {
    if (k < 2 || k > n) {
        throw input_error("consistent_order_count needs 2 <= k <= n");
    }
    big_int out = 1;
    for (unsigned i = k + 1; i <= n; ++i) {
        out *= i;
    }
    return out;
}

namespace detail {

// Kahn's algorithm over arcs on nodes 0..node_count-1.
inline bool is_acyclic(std::size_t node_count, std::span<const std::pair<std::size_t, std::size_t>> arcs) {
    std::vector<std::vector<std::size_t>> next(node_count);
    std::vector<std::size_t> in_degree(node_count, 0);
    for (const auto& [from, to] : arcs) {
        next[from].push_back(to);
        ++in_degree[to];
    }
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < node_count; ++v) {
        if (in_degree[v] == 0) {
            stack.push_back(v);
        }
    }
    std::size_t removed = 0;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        ++removed;
        for (auto w : next[v]) {
            if (--in_degree[w] == 0) {
                stack.push_back(w);
            }
        }
    }
    return removed == node_count;
}

}

// Whether some linear order is consistent with both edges: the union of the two chains is acyclic.
inline bool edges_compatible(const OrientedEdge& a, const OrientedEdge& b) {
    std::vector<vertex_id> nodes(a.tuple().begin(), a.tuple().end());
    nodes.insert(nodes.end(), b.tuple().begin(), b.tuple().end());
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    auto local = [&](vertex_id v) {
        return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
    };
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (const auto* e : {&a, &b}) {
        for (std::size_t i = 1; i < e->size(); ++i) {
            arcs.emplace_back(local((*e)[i - 1]), local((*e)[i]));
        }
    }
    return detail::is_acyclic(nodes.size(), arcs);
}

// Vertex count n, uniformity k, and a family of oriented k-edges with distinct underlying sets.
// Edges are stored flat, k entries per edge.
class OrientedHypergraph {
public:
    OrientedHypergraph() = default;

    OrientedHypergraph(unsigned n, unsigned k, std::vector<vertex_id> flat_edges)
        : n_(n), k_(k), flat_(std::move(flat_edges)) {
        validate();
    }

    OrientedHypergraph(unsigned n, unsigned k, const std::vector<OrientedEdge>& edges) : n_(n), k_(k) {
        flat_.reserve(edges.size() * k);
        for (const auto& e : edges) {
            if (e.size() != k) {
                throw input_error("edge of arity " + std::to_string(e.size()) + " in a " + std::to_string(k) + "-graph");
            }
            flat_.insert(flat_.end(), e.tuple().begin(), e.tuple().end());
        }
        validate();
    }

    unsigned vertex_count() const { return n_; }
    unsigned uniformity() const { return k_; }
    std::size_t edge_count() const { return k_ == 0 ? 0 : flat_.size() / k_; }
    std::span<const vertex_id> edge(std::size_t i) const { return std::span(flat_).subspan(i * k_, k_); }
    OrientedEdge edge_at(std::size_t i) const {
        auto e = edge(i);
        return OrientedEdge(std::vector<vertex_id>(e.begin(), e.end()));
    }
    std::span<const vertex_id> flat() const { return flat_; }

    friend bool operator==(const OrientedHypergraph&, const OrientedHypergraph&) = default;

private:
    void validate() const {
        if (k_ < 2) {
            throw input_error("uniformity k must be at least 2");
        }
        if (flat_.size() % k_ != 0) {
            throw input_error("edge data is not a multiple of k");
        }
        const auto m = edge_count();
        std::vector<vertex_id> sets(flat_.size());
        for (std::size_t i = 0; i < m; ++i) {
            auto e = edge(i);
            auto out = sets.begin() + static_cast<std::ptrdiff_t>(i * k_);
            std::copy(e.begin(), e.end(), out);
            std::sort(out, out + k_);
            for (unsigned j = 0; j < k_; ++j) {
                if (out[j] >= n_) {
                    throw input_error("edge " + std::to_string(i) + ": vertex " + std::to_string(out[j]) + " out of range");
                }
                if (j > 0 && out[j] == out[j - 1]) {
                    throw input_error("edge " + std::to_string(i) + ": repeated vertex");
                }
            }
        }
        std::vector<std::size_t> idx(m);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        auto row = [&](std::size_t i) { return std::span(sets).subspan(i * k_, k_); };
        auto less = [&](std::size_t a, std::size_t b) {
            auto ra = row(a), rb = row(b);
            return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
        };
        std::sort(idx.begin(), idx.end(), less);
        for (std::size_t i = 1; i < m; ++i) {
            if (!less(idx[i - 1], idx[i])) {
                throw input_error("edges " + std::to_string(std::min(idx[i - 1], idx[i])) + " and " +
                                  std::to_string(std::max(idx[i - 1], idx[i])) + " share an underlying set");
            }
        }
    }

    unsigned n_ = 0;
    unsigned k_ = 0;
    std::vector<vertex_id> flat_;
};

// Replace every vertex v by sigma[v].
inline OrientedHypergraph relabel(const OrientedHypergraph& h, std::span<const vertex_id> sigma) {
    if (sigma.size() != h.vertex_count()) {
        throw input_error("relabeling has the wrong length");
    }
    LinearOrder check(std::vector<vertex_id>(sigma.begin(), sigma.end()));
    std::vector<vertex_id> flat(h.flat().begin(), h.flat().end());
    for (auto& v : flat) {
        v = sigma[v];
    }
    return OrientedHypergraph(h.vertex_count(), h.uniformity(), std::move(flat));
}

// A k-tournament on {0..n-1}: one orientation per k-subset. Subsets are indexed in colex order,
// orientations by the lexicographic rank of the permutation applied to the sorted subset.
class Tournament {
public:
    Tournament() = default;

    Tournament(unsigned n, unsigned k, std::vector<std::uint32_t> orientation)
        : n_(n), k_(k), orientation_(std::move(orientation)) {
        if (k < 2 || k > n) {
            throw input_error("tournament needs 2 <= k <= n");
        }
        if (orientation_.size() != binomial(n, k)) {
            throw input_error("tournament needs exactly C(n,k) orientations");
        }
        const auto kf = factorial(k);
        for (auto o : orientation_) {
            if (o >= kf) {
                throw input_error("orientation index out of range");
            }
        }
    }

    static Tournament from_hypergraph(const OrientedHypergraph& h) {
        const unsigned n = h.vertex_count(), k = h.uniformity();
        if (k > n || h.edge_count() != binomial(n, k)) {
            throw input_error("hypergraph is not a k-tournament: needs one edge per k-subset");
        }
        std::vector<std::uint32_t> orientation(h.edge_count());
        std::vector<vertex_id> sorted(k);
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            auto e = h.edge(i);
            std::copy(e.begin(), e.end(), sorted.begin());
            std::sort(sorted.begin(), sorted.end());
            orientation[colex_rank(sorted)] = static_cast<std::uint32_t>(pattern_rank(e));
        }
        return Tournament(n, k, std::move(orientation));
    }

    unsigned vertex_count() const { return n_; }
    unsigned uniformity() const { return k_; }
    std::size_t subset_count() const { return orientation_.size(); }
    std::span<const std::uint32_t> orientation() const { return orientation_; }

    // Edges in colex subset order.
    std::vector<vertex_id> flat_edges() const {
        const auto subsets = colex_subsets(n_, k_);
        std::vector<vertex_id> flat(subsets.size());
        for (std::size_t s = 0; s < orientation_.size(); ++s) {
            const auto perm = permutation_unrank(k_, orientation_[s]);
            for (unsigned i = 0; i < k_; ++i) {
                flat[s * k_ + i] = subsets[s * k_ + perm[i]];
            }
        }
        return flat;
    }

    OrientedHypergraph to_hypergraph() const { return OrientedHypergraph(n_, k_, flat_edges()); }

    friend bool operator==(const Tournament&, const Tournament&) = default;

private:
    unsigned n_ = 0;
    unsigned k_ = 0;
    std::vector<std::uint32_t> orientation_;
};

}

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"

namespace propo {

// Recursive Property O family G_k on 3^(k-1) vertices.
//
// G_2 is the oriented 3-cycle (0,1),(1,2),(2,0). G_k splits its vertices into consecutive blocks
// X, Y, Z of size 3^(k-2), each carrying a shifted copy of G_{k-1}, and has four edge types:
//   T1 = (x, y-edge)   T2 = (z-edge, x)   T3 = (y-edge, z)   T4 = (x-edge, y)
// Edge index i of G_k is laid out as type-major, then sub-edge, then the extra vertex, so any edge
// can be decoded in O(k) without materializing the family.

enum class GkEdgeType : std::uint8_t { base = 0, t1 = 1, t2 = 2, t3 = 3, t4 = 4 };

inline const char* to_string(GkEdgeType t) {
    static constexpr std::array<const char*, 5> names{"base", "T1", "T2", "T3", "T4"};
    return names[static_cast<std::size_t>(t)];
}

inline constexpr unsigned gk_eager_limit = 5;

inline std::uint64_t gk_vertex_count(unsigned k) {
    if (k < 2 || k > 40) {
        throw input_error("G_k needs 2 <= k <= 40");
    }
    std::uint64_t v = 1;
    for (unsigned i = 1; i < k; ++i) {
        v *= 3;
    }
    return v;
}

// |E_k| by the recurrence |E_{k+1}| = 4 |E_k| |V_k|.
inline std::uint64_t gk_edge_count(unsigned k) {
    if (k < 2 || k > 9) {
        throw input_error("gk_edge_count needs 2 <= k <= 9 (64-bit range)");
    }
    std::uint64_t e = 3;
    for (unsigned level = 2; level < k; ++level) {
        e = 4 * e * gk_vertex_count(level);
    }
    return e;
}

// Closed form 2^(2(k-2)) * 3^(C(k-1,2)+1), exact.
inline big_int gk_edge_count_closed_form(unsigned k) {
    if (k < 2) {
        throw input_error("G_k needs k >= 2");
    }
    big_int out = 1;
    for (unsigned i = 0; i < 2 * (k - 2); ++i) {
        out *= 2;
    }
    const unsigned threes = (k - 1) * (k - 2) / 2 + 1;
    for (unsigned i = 0; i < threes; ++i) {
        out *= 3;
    }
    return out;
}

struct GkBlocks {
    vertex_id x_begin, y_begin, z_begin, end;
};

// Top-level X, Y, Z ranges of a G_level copy starting at `offset` (level >= 3).
inline GkBlocks gk_blocks(unsigned level, vertex_id offset = 0) {
    const auto b = static_cast<vertex_id>(gk_vertex_count(level - 1));
    return {offset, offset + b, offset + 2 * b, offset + 3 * b};
}

namespace detail {

inline GkEdgeType gk_decode(unsigned level, vertex_id offset, std::uint64_t index, std::span<vertex_id> out) {
    if (level == 2) {
        out[0] = offset + static_cast<vertex_id>(index);
        out[1] = offset + static_cast<vertex_id>((index + 1) % 3);
        return GkEdgeType::base;
    }
    const auto b = gk_vertex_count(level - 1);
    const auto sub_edges = gk_edge_count(level - 1);
    const auto per_type = sub_edges * b;
    const auto type = index / per_type;
    const auto rest = index % per_type;
    const auto sub = rest / b;
    const auto extra = static_cast<vertex_id>(rest % b);
    const auto blocks = gk_blocks(level, offset);
    auto head = out.first(level - 1);
    switch (type) {
        case 0:
            out[0] = blocks.x_begin + extra;
            gk_decode(level - 1, blocks.y_begin, sub, out.subspan(1));
            return GkEdgeType::t1;
        case 1:
            gk_decode(level - 1, blocks.z_begin, sub, head);
            out[level - 1] = blocks.x_begin + extra;
            return GkEdgeType::t2;
        case 2:
            gk_decode(level - 1, blocks.y_begin, sub, head);
            out[level - 1] = blocks.z_begin + extra;
            return GkEdgeType::t3;
        default:
            gk_decode(level - 1, blocks.x_begin, sub, head);
            out[level - 1] = blocks.y_begin + extra;
            return GkEdgeType::t4;
    }
}

}

// Writes edge `index` of G_k into `out` (size k) and returns its type.
inline GkEdgeType gk_edge(unsigned k, std::uint64_t index, std::span<vertex_id> out) {
    if (out.size() != k || index >= gk_edge_count(k)) {
        throw input_error("gk_edge: bad index or output size");
    }
    return detail::gk_decode(k, 0, index, out);
}

// Streams every edge of G_k in index order without storing the family.
template<class Visitor>
void for_each_gk_edge(unsigned k, Visitor&& visit) {
    const auto m = gk_edge_count(k);
    std::vector<vertex_id> buf(k);
    for (std::uint64_t i = 0; i < m; ++i) {
        const auto type = detail::gk_decode(k, 0, i, buf);
        visit(std::span<const vertex_id>(buf), type);
    }
}

struct GkLayout {
    unsigned k = 2;
    std::vector<GkEdgeType> edge_type;  // per edge, in index order; empty unless materialized

    std::uint64_t vertex_count() const { return gk_vertex_count(k); }
    std::uint64_t edge_count() const { return gk_edge_count(k); }

    // For edge `index`: the index of the G_{k-1} edge it extends and the extra vertex.
    std::pair<std::uint64_t, vertex_id> provenance(std::uint64_t index) const {
        if (k == 2) {
            return {index, static_cast<vertex_id>(index)};
        }
        const auto b = gk_vertex_count(k - 1);
        const auto rest = index % (gk_edge_count(k - 1) * b);
        std::vector<vertex_id> buf(k);
        const auto type = gk_edge(k, index, buf);
        const vertex_id extra = type == GkEdgeType::t1 ? buf[0] : buf[k - 1];
        return {rest / b, extra};
    }
};

struct GkGraph {
    OrientedHypergraph graph;
    GkLayout layout;
};

inline GkGraph build_gk(unsigned k, bool allow_large = false) {
    if (k < 2) {
        throw input_error("build_gk needs k >= 2");
    }
    if (k > gk_eager_limit && !allow_large) {
        throw refusal_error("build_gk(" + std::to_string(k) + ") would materialize " + std::to_string(gk_edge_count(k)) +
                            " edges; use for_each_gk_edge or allow_large");
    }
    GkLayout layout{k, {}};
    const auto m = gk_edge_count(k);
    std::vector<vertex_id> flat;
    flat.reserve(m * k);
    layout.edge_type.reserve(m);
    for_each_gk_edge(k, [&](std::span<const vertex_id> e, GkEdgeType type) {
        flat.insert(flat.end(), e.begin(), e.end());
        layout.edge_type.push_back(type);
    });
    return {OrientedHypergraph(static_cast<unsigned>(gk_vertex_count(k)), k, std::move(flat)), std::move(layout)};
}

// Which branch of the covering argument produced each level of the found edge.
enum class ProofCase : std::uint8_t {
    base = 0,
    x_below_y = 1,      // some x precedes all of Y: (x, y-edge)
    x_above_z = 2,      // some x follows all of Z: (z-edge, x)
    y_below_z0 = 3,     // all of Y precede z_{x0}: (y-edge, z_{x0})
    y_above_z0 = 4      // some y follows z_{x0}: (x-edge, y)
};

struct ProofReplay {
    OrientedEdge edge;
    std::uint64_t index = 0;        // position of the edge in G_k's index order
    std::vector<ProofCase> cases;   // outermost level first
};

namespace detail {

inline std::uint64_t gk_replay(unsigned level, vertex_id offset, const LinearOrder& order, std::span<vertex_id> out,
                               std::vector<ProofCase>& cases) {
    auto rank = [&](vertex_id v) { return order.rank(v); };
    if (level == 2) {
        // the edge leaving the least of the three vertices is consistent
        vertex_id least = 0;
        for (vertex_id i = 1; i < 3; ++i) {
            if (rank(offset + i) < rank(offset + least)) {
                least = i;
            }
        }
        out[0] = offset + least;
        out[1] = offset + (least + 1) % 3;
        cases.push_back(ProofCase::base);
        return least;
    }
    const auto b = static_cast<vertex_id>(gk_vertex_count(level - 1));
    const auto per_type = gk_edge_count(level - 1) * b;
    const auto blocks = gk_blocks(level, offset);
    auto arg_extreme = [&](vertex_id begin, bool want_max) {
        vertex_id best = begin;
        for (vertex_id v = begin + 1; v < begin + b; ++v) {
            if (want_max ? rank(v) > rank(best) : rank(v) < rank(best)) {
                best = v;
            }
        }
        return best;
    };
    const auto x_min = arg_extreme(blocks.x_begin, false);
    const auto x_max = arg_extreme(blocks.x_begin, true);
    const auto y_min = arg_extreme(blocks.y_begin, false);
    const auto y_max = arg_extreme(blocks.y_begin, true);
    const auto z_max = arg_extreme(blocks.z_begin, true);
    auto head = out.first(level - 1);

    if (rank(x_min) < rank(y_min)) {
        cases.push_back(ProofCase::x_below_y);
        out[0] = x_min;
        const auto sub = gk_replay(level - 1, blocks.y_begin, order, out.subspan(1), cases);
        return 0 * per_type + sub * b + (x_min - blocks.x_begin);
    }
    if (rank(x_max) > rank(z_max)) {
        cases.push_back(ProofCase::x_above_z);
        const auto sub = gk_replay(level - 1, blocks.z_begin, order, head, cases);
        out[level - 1] = x_max;
        return 1 * per_type + sub * b + (x_max - blocks.x_begin);
    }
    // x0 = max X; z_{x0} = least z above x0, which exists since the previous case failed
    vertex_id z0 = z_max;
    for (vertex_id z = blocks.z_begin; z < blocks.end; ++z) {
        if (rank(z) > rank(x_max) && rank(z) < rank(z0)) {
            z0 = z;
        }
    }
    if (rank(y_max) < rank(z0)) {
        cases.push_back(ProofCase::y_below_z0);
        const auto sub = gk_replay(level - 1, blocks.y_begin, order, head, cases);
        out[level - 1] = z0;
        return 2 * per_type + sub * b + (z0 - blocks.z_begin);
    }
    cases.push_back(ProofCase::y_above_z0);
    const auto sub = gk_replay(level - 1, blocks.x_begin, order, head, cases);
    out[level - 1] = y_max;
    return 3 * per_type + sub * b + (y_max - blocks.y_begin);
}

}

// Locates an edge of G_k consistent with `order` by following the covering argument level by level.
inline ProofReplay find_consistent_edge_gk(const GkLayout& layout, const LinearOrder& order) {
    if (order.size() != layout.vertex_count()) {
        throw input_error("order has " + std::to_string(order.size()) + " vertices, G_" + std::to_string(layout.k) +
                          " has " + std::to_string(layout.vertex_count()));
    }
    ProofReplay replay;
    std::vector<vertex_id> buf(layout.k);
    replay.index = detail::gk_replay(layout.k, 0, order, buf, replay.cases);
    replay.edge = OrientedEdge(std::move(buf));
    if (!is_consistent(replay.edge, order)) {
        throw invariant_violation("proof replay produced an edge inconsistent with the order");
    }
    return replay;
}

}

#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "propo/construct.hpp"
#include "propo/decide.hpp"
#include "propo/rng.hpp"

using namespace propo;

namespace {

LinearOrder random_order(Xoshiro256ss& rng, std::size_t n) {
    std::vector<vertex_id> perm(n);
    std::iota(perm.begin(), perm.end(), vertex_id{0});
    portable_shuffle(perm, rng);
    return LinearOrder(std::move(perm));
}

}

TEST(construct, g2_is_the_three_cycle) {
    const auto g = build_gk(2);
    EXPECT_EQ(g.graph, OrientedHypergraph(3, 2, std::vector<OrientedEdge>{{0, 1}, {1, 2}, {2, 0}}));
    const auto replay = find_consistent_edge_gk(g.layout, LinearOrder({2, 0, 1}));
    EXPECT_EQ(replay.edge, (OrientedEdge{2, 0}));
}

TEST(construct, sizes_follow_closed_forms) {
    const std::uint64_t expected_edges[] = {3, 36, 1296, 139968, 45349632};
    for (unsigned k = 2; k <= 6; ++k) {
        EXPECT_EQ(gk_vertex_count(k), static_cast<std::uint64_t>(std::pow(3, k - 1)));
        EXPECT_EQ(gk_edge_count(k), expected_edges[k - 2]);
        EXPECT_EQ(gk_edge_count_closed_form(k), expected_edges[k - 2]);
        if (k > 2) {
            EXPECT_EQ(gk_edge_count(k), 4 * gk_edge_count(k - 1) * gk_vertex_count(k - 1));
        }
    }
}

TEST(construct, eager_builds_are_valid_and_tagged) {
    for (unsigned k = 2; k <= 4; ++k) {
        const auto g = build_gk(k);
        EXPECT_EQ(g.graph.vertex_count(), gk_vertex_count(k));
        EXPECT_EQ(g.graph.edge_count(), gk_edge_count(k));
        EXPECT_EQ(g.layout.edge_type.size(), g.graph.edge_count());
        if (k > 2) {
            const auto quarter = g.graph.edge_count() / 4;
            for (std::size_t i = 0; i < g.graph.edge_count(); ++i) {
                EXPECT_EQ(static_cast<std::size_t>(g.layout.edge_type[i]), 1 + i / quarter);
            }
        }
    }
    EXPECT_THROW(build_gk(6), refusal_error);
    EXPECT_THROW(build_gk(1), input_error);
}

TEST(construct, edge_types_follow_the_blocks) {
    const auto g = build_gk(3);
    const auto b = gk_blocks(3);
    auto in = [](vertex_id v, vertex_id lo, vertex_id hi) { return v >= lo && v < hi; };
    for (std::size_t i = 0; i < g.graph.edge_count(); ++i) {
        const auto e = g.graph.edge(i);
        switch (g.layout.edge_type[i]) {
            case GkEdgeType::t1:
                EXPECT_TRUE(in(e[0], b.x_begin, b.y_begin) && in(e[1], b.y_begin, b.z_begin) && in(e[2], b.y_begin, b.z_begin));
                break;
            case GkEdgeType::t2:
                EXPECT_TRUE(in(e[0], b.z_begin, b.end) && in(e[1], b.z_begin, b.end) && in(e[2], b.x_begin, b.y_begin));
                break;
            case GkEdgeType::t3:
                EXPECT_TRUE(in(e[0], b.y_begin, b.z_begin) && in(e[1], b.y_begin, b.z_begin) && in(e[2], b.z_begin, b.end));
                break;
            case GkEdgeType::t4:
                EXPECT_TRUE(in(e[0], b.x_begin, b.y_begin) && in(e[1], b.x_begin, b.y_begin) && in(e[2], b.y_begin, b.z_begin));
                break;
            default:
                ADD_FAILURE();
        }
    }
}

TEST(construct, streaming_matches_eager) {
    const auto g = build_gk(4);
    std::vector<vertex_id> out(4);
    for (std::uint64_t i = 0; i < g.graph.edge_count(); i += 37) {
        EXPECT_EQ(gk_edge(4, i, out), g.layout.edge_type[i]);
        EXPECT_TRUE(std::equal(out.begin(), out.end(), g.graph.edge(i).begin()));
    }
}

TEST(construct, k6_streams_without_duplicate_sets_in_a_slice) {
    std::uint64_t count = 0;
    std::set<std::vector<vertex_id>> seen;
    for_each_gk_edge(6, [&](std::span<const vertex_id> e, GkEdgeType) {
        if (count++ % 997 == 0) {
            std::vector<vertex_id> s(e.begin(), e.end());
            std::sort(s.begin(), s.end());
            EXPECT_TRUE(std::adjacent_find(s.begin(), s.end()) == s.end());
            EXPECT_TRUE(seen.insert(s).second);
            EXPECT_LT(s.back(), gk_vertex_count(6));
        }
    });
    EXPECT_EQ(count, gk_edge_count(6));
}

TEST(construct, replay_returns_consistent_edges) {
    Xoshiro256ss rng(17);
    for (unsigned k = 2; k <= 5; ++k) {
        const GkLayout layout{k, {}};
        std::vector<vertex_id> out(k);
        for (int trial = 0; trial < 200; ++trial) {
            const auto order = random_order(rng, layout.vertex_count());
            const auto replay = find_consistent_edge_gk(layout, order);
            EXPECT_TRUE(is_consistent(replay.edge, order));
            EXPECT_EQ(replay.cases.size(), k - 1);
            gk_edge(k, replay.index, out);
            EXPECT_TRUE(std::equal(out.begin(), out.end(), replay.edge.tuple().begin()));
        }
    }
    EXPECT_THROW(find_consistent_edge_gk(GkLayout{3, {}}, LinearOrder::identity(8)), input_error);
}

TEST(construct, g3_exhaustive) {
    const auto g = build_gk(3);
    const auto cert = find_witness(g.graph);
    EXPECT_EQ(cert.status, Status::has_o);
}

TEST(construct, removing_any_edge_of_g2_breaks_property_o) {
    const auto g = build_gk(2);
    for (std::size_t drop = 0; drop < 3; ++drop) {
        std::vector<OrientedEdge> kept;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i != drop) {
                kept.push_back(g.graph.edge_at(i));
            }
        }
        EXPECT_FALSE(has_property_o(OrientedHypergraph(3, 2, kept)));
    }
}

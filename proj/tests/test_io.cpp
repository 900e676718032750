#include <sstream>

#include <gtest/gtest.h>

#include "propo/io.hpp"

using namespace propo;

namespace {

std::size_t error_line(const std::string& text) {
    try {
        parse_hypergraph(std::string_view(text));
    } catch (const parse_error& e) {
        return e.line();
    }
    ADD_FAILURE() << "no parse error for:\n" << text;
    return 0;
}

}

TEST(io, parses_comments_and_blank_lines) {
    const auto h = parse_hypergraph(std::string_view("# cycle\n\n2 3 3\n0 1\n  1 2  \n# note\n2 0\n"));
    EXPECT_EQ(h.vertex_count(), 3u);
    EXPECT_EQ(h.uniformity(), 2u);
    EXPECT_EQ(h.edge_at(2), (OrientedEdge{2, 0}));
}

TEST(io, round_trip) {
    const OrientedHypergraph h(5, 3, std::vector<OrientedEdge>{{4, 0, 2}, {1, 3, 0}, {2, 3, 4}});
    EXPECT_EQ(parse_hypergraph(std::string_view(serialize_hypergraph(h))), h);
}

TEST(io, tournament_marker) {
    const Tournament t(4, 3, {1, 0, 4, 5});
    std::istringstream in(serialize_tournament(t));
    const auto parsed = parse_file(in);
    EXPECT_TRUE(parsed.tournament);
    EXPECT_EQ(Tournament::from_hypergraph(parsed.graph), t);
    EXPECT_EQ(error_line("3 4 3 T\n0 1 2\n0 1 3\n0 2 3\n"), 1u);
}

TEST(io, errors_carry_line_numbers) {
    EXPECT_EQ(error_line("2 3 2\n0 1\n0 1 2\n"), 3u);       // arity
    EXPECT_EQ(error_line("2 3 2\n0 1\n1 3\n"), 3u);         // vertex out of range
    EXPECT_EQ(error_line("3 4 1\n# c\n1 1 2\n"), 3u);       // repeated vertex
    EXPECT_EQ(error_line("2 3 2\n0 1\n\n1 0\n"), 4u);       // duplicate underlying set, later line
    EXPECT_EQ(error_line("2 3 3\n0 1\n1 2\n"), 1u);         // count mismatch
    EXPECT_EQ(error_line("2 x 1\n0 1\n"), 1u);              // bad header
    EXPECT_EQ(error_line("2 3 1\n0 -1\n"), 2u);             // bad vertex token
}

TEST(io, empty_input_is_an_error) {
    EXPECT_THROW(parse_hypergraph(std::string_view("# nothing\n")), input_error);
    EXPECT_THROW(read_file("/nonexistent/file.hg"), input_error);
}

#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace propo {

class parse_error : public input_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : input_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Result of parsing the text format. `tournament` is set when the header carries the `T` marker.
struct ParsedFile {
    OrientedHypergraph graph;
    bool tournament = false;
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

inline std::uint64_t parse_count(std::string_view token, std::size_t line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw parse_error(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

}

// Format: header `k n m` (or `k n m T` for tournaments), then m lines of k vertex ids.
// Lines starting with '#' and blank lines are skipped.
inline ParsedFile parse_file(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> header_line;
    unsigned k = 0, n = 0;
    std::uint64_t m = 0;
    bool tournament = false;
    std::vector<vertex_id> flat;
    std::vector<std::size_t> edge_lines;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '#') {
            continue;
        }
        auto tokens = detail::split_tokens(line);
        if (tokens.empty()) {
            continue;
        }
        if (!header_line) {
            if (tokens.size() != 3 && !(tokens.size() == 4 && tokens[3] == "T")) {
                throw parse_error(line_no, "header must be 'k n m' or 'k n m T'");
            }
            const auto kk = detail::parse_count(tokens[0], line_no);
            const auto nn = detail::parse_count(tokens[1], line_no);
            m = detail::parse_count(tokens[2], line_no);
            if (kk < 2) {
                throw parse_error(line_no, "k must be at least 2");
            }
            if (kk > 64 || nn > (1u << 30)) {
                throw parse_error(line_no, "k or n too large");
            }
            k = static_cast<unsigned>(kk);
            n = static_cast<unsigned>(nn);
            tournament = tokens.size() == 4;
            header_line = line_no;
            continue;
        }
        if (edge_lines.size() == m) {
            throw parse_error(line_no, "more edge lines than the header's m = " + std::to_string(m));
        }
        if (tokens.size() != k) {
            throw parse_error(line_no, "expected " + std::to_string(k) + " vertex ids, got " + std::to_string(tokens.size()));
        }
        const auto first = flat.size();
        for (auto tok : tokens) {
            const auto v = detail::parse_count(tok, line_no);
            if (v >= n) {
                throw parse_error(line_no, "vertex id " + std::to_string(v) + " out of range for n = " + std::to_string(n));
            }
            for (auto i = first; i < flat.size(); ++i) {
                if (flat[i] == v) {
                    throw parse_error(line_no, "repeated vertex " + std::to_string(v) + " in edge");
                }
            }
            flat.push_back(static_cast<vertex_id>(v));
        }
        edge_lines.push_back(line_no);
    }
    if (!header_line) {
        throw parse_error(line_no + 1, "missing header");
    }
    if (edge_lines.size() != m) {
        throw parse_error(*header_line, "header declares " + std::to_string(m) + " edges, found " +
                                            std::to_string(edge_lines.size()));
    }

    // Duplicate underlying sets are reported against the later edge's line.
    std::vector<std::pair<std::vector<vertex_id>, std::size_t>> sets;
    sets.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<vertex_id> s(flat.begin() + static_cast<std::ptrdiff_t>(i * k),
                                 flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * k));
        std::sort(s.begin(), s.end());
        sets.emplace_back(std::move(s), i);
    }
    std::sort(sets.begin(), sets.end());
    for (std::size_t i = 1; i < sets.size(); ++i) {
        if (sets[i].first == sets[i - 1].first) {
            const auto later = std::max(sets[i].second, sets[i - 1].second);
            throw parse_error(edge_lines[later], "duplicate underlying set");
        }
    }

    ParsedFile out{OrientedHypergraph(n, k, std::move(flat)), tournament};
    if (tournament && (k > n || m != binomial(n, k))) {
        throw parse_error(*header_line, "tournament header needs m = C(n,k)");
    }
    return out;
}

inline OrientedHypergraph parse_hypergraph(std::istream& in) { return parse_file(in).graph; }

inline OrientedHypergraph parse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_hypergraph(in);
}

inline ParsedFile read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open " + path);
    }
    return parse_file(in);
}

inline std::string serialize_hypergraph(const OrientedHypergraph& h, bool tournament_marker = false) {
    std::ostringstream out;
    out << h.uniformity() << ' ' << h.vertex_count() << ' ' << h.edge_count();
    if (tournament_marker) {
        out << " T";
    }
    out << '\n';
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto e = h.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j) {
            out << (j ? " " : "") << e[j];
        }
        out << '\n';
    }
    return out.str();
}

inline std::string serialize_tournament(const Tournament& t) {
    return serialize_hypergraph(t.to_hypergraph(), true);
}

}

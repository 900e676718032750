#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "config_hash.hpp"
#include "core.hpp"
#include "coverage.hpp"
#include "decide.hpp"
#include "rng.hpp"

namespace propo {

// Tournaments are indexed in mixed radix: subset s (colex order) contributes digit o_s in base k!,
// with subset 0 least significant. An index range [start, end) is a partition of the space.

enum class CensusMethod {
    bitset,  // union of order-coverage bitsets per tournament
    dfs      // cheap witness battery, then the pruned witness search
};

inline const char* to_string(CensusMethod m) { return m == CensusMethod::bitset ? "bitset" : "dfs"; }

// Unpartitioned censuses above this many tournaments are refused.
inline constexpr std::uint64_t census_unpartitioned_limit = std::uint64_t{1} << 32;

inline big_int tournament_space_size(unsigned n, unsigned k) {
    big_int out = 1;
    const auto subsets = binomial(n, k);
    const auto kf = factorial(k);
    for (std::uint64_t i = 0; i < subsets; ++i) {
        out *= kf;
    }
    return out;
}

struct CensusReport {
    unsigned n = 0;
    unsigned k = 0;
    std::uint64_t start_index = 0;
    std::uint64_t end_index = 0;
    std::uint64_t total_enumerated = 0;
    std::uint64_t property_o_count = 0;
    std::uint64_t canonical_count = 0;  // tournaments passing the canonical filter (all, when unfiltered)
    bool canonical_filter_used = false;
    CensusMethod method = CensusMethod::bitset;
    std::optional<std::uint64_t> first_property_o_index;
    double wall_time_seconds = 0;
};

// Reports over adjacent ranges combine into the report of their union, in either argument order.
inline CensusReport merge_reports(const CensusReport& a, const CensusReport& b) {
    if (a.n != b.n || a.k != b.k || a.canonical_filter_used != b.canonical_filter_used) {
        throw input_error("merging census reports of different configurations");
    }
    const CensusReport& lo = a.start_index <= b.start_index ? a : b;
    const CensusReport& hi = a.start_index <= b.start_index ? b : a;
    if (lo.end_index != hi.start_index) {
        throw input_error("merging census reports over non-adjacent ranges");
    }
    CensusReport out = lo;
    out.end_index = hi.end_index;
    out.total_enumerated += hi.total_enumerated;
    out.property_o_count += hi.property_o_count;
    out.canonical_count += hi.canonical_count;
    if (!out.first_property_o_index) {
        out.first_property_o_index = hi.first_property_o_index;
    }
    out.wall_time_seconds += hi.wall_time_seconds;
    return out;
}

inline std::vector<std::uint32_t> tournament_digits(unsigned n, unsigned k, std::uint64_t index) {
    const auto subsets = binomial(n, k);
    const auto kf = factorial(k);
    std::vector<std::uint32_t> digits(subsets);
    for (auto& d : digits) {
        d = static_cast<std::uint32_t>(index % kf);
        index /= kf;
    }
    return digits;
}

inline Tournament tournament_at(unsigned n, unsigned k, std::uint64_t index) {
    return Tournament(n, k, tournament_digits(n, k, index));
}

namespace detail {

struct CensusCounts {
    std::uint64_t property_o = 0;
    std::uint64_t canonical = 0;
    std::optional<std::uint64_t> first_property_o;
};

// Walks digits in mixed-radix order over [start, end), calling evaluate(digits, changed_up_to) where
// changed_up_to is the highest digit that changed since the previous call.
template<class Evaluate>
void walk_tournaments(unsigned n, unsigned k, std::uint64_t start, std::uint64_t end, Evaluate&& evaluate) {
    if (start >= end) {
        return;
    }
    auto digits = tournament_digits(n, k, start);
    const auto kf = static_cast<std::uint32_t>(factorial(k));
    std::size_t changed = digits.size() - 1;
    for (std::uint64_t idx = start;;) {
        evaluate(idx, std::span<const std::uint32_t>(digits), changed);
        if (++idx == end) {
            break;
        }
        std::size_t s = 0;
        while (++digits[s] == kf) {
            digits[s] = 0;
            ++s;
        }
        changed = s;
    }
}

inline CensusCounts census_bitset(unsigned n, unsigned k, std::uint64_t start, std::uint64_t end, bool canonical_only) {
    const OrderCoverage cov(n, k);
    std::optional<SubsetSymmetry> sym;
    if (canonical_only) {
        sym.emplace(n, k);
    }
    const auto m = cov.subset_count();
    const auto words = cov.words();
    // acc[s] = union of the masks of subsets s..m-1
    std::vector<std::uint64_t> acc((m + 1) * words, 0);
    CensusCounts counts;
    walk_tournaments(n, k, start, end, [&](std::uint64_t idx, std::span<const std::uint32_t> digits, std::size_t changed) {
        for (std::size_t s = changed + 1; s-- > 0;) {
            const auto mask = cov.mask(s, digits[s]);
            for (std::size_t w = 0; w < words; ++w) {
                acc[s * words + w] = acc[(s + 1) * words + w] | mask[w];
            }
        }
        if (sym && !sym->is_minimal_tournament(digits)) {
            return;
        }
        ++counts.canonical;
        if (cov.is_full(std::span(acc).first(words))) {
            check_counting_bound(k, binomial(n, k));
            ++counts.property_o;
            if (!counts.first_property_o) {
                counts.first_property_o = idx;
            }
        }
    });
    return counts;
}

inline CensusCounts census_dfs(unsigned n, unsigned k, std::uint64_t start, std::uint64_t end, bool canonical_only) {
    std::optional<SubsetSymmetry> sym;
    if (canonical_only) {
        sym.emplace(n, k);
    }
    const auto subsets = colex_subsets(n, k);
    const auto perms = permutation_table(k);
    const auto m = subsets.size() / k;

    // witness battery: reversed natural order, natural order, and a few fixed shuffles
    std::vector<std::vector<vertex_id>> battery;
    std::vector<vertex_id> perm(n);
    std::iota(perm.begin(), perm.end(), vertex_id{0});
    battery.emplace_back(perm.rbegin(), perm.rend());
    battery.push_back(perm);
    Xoshiro256ss rng(0x70726f706fULL);
    for (int i = 0; i < 6; ++i) {
        portable_shuffle(perm, rng);
        battery.push_back(perm);
    }
    // battery_hit[b * m + s]: the orientation of subset s consistent with battery order b
    std::vector<std::uint32_t> battery_hit;
    std::vector<vertex_id> tuple(k);
    for (const auto& order : battery) {
        std::vector<vertex_id> rank(n);
        for (vertex_id pos = 0; pos < n; ++pos) {
            rank[order[pos]] = pos;
        }
        for (std::size_t s = 0; s < m; ++s) {
            std::copy_n(subsets.begin() + static_cast<std::ptrdiff_t>(s * k), k, tuple.begin());
            std::sort(tuple.begin(), tuple.end(), [&](vertex_id a, vertex_id b) { return rank[a] < rank[b]; });
            battery_hit.push_back(static_cast<std::uint32_t>(pattern_rank(std::span<const vertex_id>(tuple))));
        }
    }

    WitnessSearch search(n, k);
    std::vector<vertex_id> flat(m * k);
    CensusCounts counts;
    walk_tournaments(n, k, start, end, [&](std::uint64_t idx, std::span<const std::uint32_t> digits, std::size_t changed) {
        for (std::size_t s = 0; s <= changed; ++s) {
            for (unsigned i = 0; i < k; ++i) {
                flat[s * k + i] = subsets[s * k + perms[digits[s] * k + i]];
            }
        }
        if (sym && !sym->is_minimal_tournament(digits)) {
            return;
        }
        ++counts.canonical;
        for (std::size_t b = 0; b < battery.size(); ++b) {
            bool witness = true;
            for (std::size_t s = 0; s < m && witness; ++s) {
                witness = digits[s] != battery_hit[b * m + s];
            }
            if (witness) {
                return;
            }
        }
        if (search.run(flat).status == Status::has_o) {
            check_counting_bound(k, binomial(n, k));
            ++counts.property_o;
            if (!counts.first_property_o) {
                counts.first_property_o = idx;
            }
        }
    });
    return counts;
}

}

// Decides every tournament with index in [start, end).
inline CensusReport census_range(unsigned n, unsigned k, std::uint64_t start, std::uint64_t end, bool canonical_only = false,
                                 CensusMethod method = CensusMethod::bitset) {
    if (k < 2 || k > n) {
        throw input_error("census needs 2 <= k <= n");
    }
    if (start > end || big_int(end) > tournament_space_size(n, k)) {
        throw input_error("census partition outside the tournament space");
    }
    if (method == CensusMethod::dfs && n > unbounded_search_vertex_limit) {
        throw refusal_error("dfs census above n = 10 refused");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const auto counts = method == CensusMethod::bitset ? detail::census_bitset(n, k, start, end, canonical_only)
                                                       : detail::census_dfs(n, k, start, end, canonical_only);
    CensusReport report;
    report.n = n;
    report.k = k;
    report.start_index = start;
    report.end_index = end;
    report.total_enumerated = end - start;
    report.property_o_count = counts.property_o;
    report.canonical_count = counts.canonical;
    report.canonical_filter_used = canonical_only;
    report.method = method;
    report.first_property_o_index = counts.first_property_o;
    report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

struct CensusConfig {
    unsigned n = 0;
    unsigned k = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> partition{};
    bool canonical_only = false;
    CensusMethod method = CensusMethod::bitset;
    unsigned jobs = 1;
    std::optional<std::filesystem::path> checkpoint{};
    std::uint64_t checkpoint_interval = std::uint64_t{1} << 24;
};

// Fields that determine the census result; the checkpoint is bound to their digest.
inline nlohmann::json census_identity(const CensusConfig& cfg, std::uint64_t start, std::uint64_t end) {
    return {{"command", "census"}, {"n", cfg.n}, {"k", cfg.k}, {"start", start}, {"end", end},
            {"canonical", cfg.canonical_only}, {"method", to_string(cfg.method)}};
}

// Splits [start, end) into `jobs` contiguous pieces, runs them on separate threads and merges in order.
inline CensusReport census_parallel(unsigned n, unsigned k, std::uint64_t start, std::uint64_t end, bool canonical_only,
                                    CensusMethod method, unsigned jobs) {
    jobs = std::max(1u, jobs);
    const auto span = end - start;
    if (jobs == 1 || span < jobs) {
        return census_range(n, k, start, end, canonical_only, method);
    }
    std::vector<CensusReport> parts(jobs);
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned j = 0; j < jobs; ++j) {
        const auto a = start + span / jobs * j;
        const auto b = j + 1 == jobs ? end : start + span / jobs * (j + 1);
        workers.emplace_back([&, j, a, b] {
            try {
                parts[j] = census_range(n, k, a, b, canonical_only, method);
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
    auto out = parts[0];
    double slowest = parts[0].wall_time_seconds;
    for (unsigned j = 1; j < jobs; ++j) {
        out = merge_reports(out, parts[j]);
        slowest = std::max(slowest, parts[j].wall_time_seconds);
    }
    out.wall_time_seconds = slowest;
    return out;
}

// Full census driver: validates feasibility, honours partitions, jobs and checkpoints.
// A checkpoint written under a different configuration digest is refused.
inline CensusReport tournament_census(const CensusConfig& cfg) {
    if (cfg.k < 2 || cfg.k > cfg.n) {
        throw input_error("census needs 2 <= k <= n");
    }
    const auto space = tournament_space_size(cfg.n, cfg.k);
    std::uint64_t start = 0, end = 0;
    if (cfg.partition) {
        std::tie(start, end) = *cfg.partition;
    } else {
        if (space > census_unpartitioned_limit) {
            throw refusal_error("tournament space for n=" + std::to_string(cfg.n) + ", k=" + std::to_string(cfg.k) +
                                " has " + space.str() + " members; give an explicit --partition");
        }
        end = static_cast<std::uint64_t>(space);
    }
    if (start > end || big_int(end) > space) {
        throw input_error("partition must satisfy start <= end <= " + space.str());
    }
    if (!cfg.checkpoint) {
        return census_parallel(cfg.n, cfg.k, start, end, cfg.canonical_only, cfg.method, cfg.jobs);
    }

    const auto hash = config_hash(census_identity(cfg, start, end));
    CensusReport total;
    total.n = cfg.n;
    total.k = cfg.k;
    total.start_index = total.end_index = start;
    total.canonical_filter_used = cfg.canonical_only;
    total.method = cfg.method;
    if (std::filesystem::exists(*cfg.checkpoint)) {
        std::ifstream in(*cfg.checkpoint);
        const auto saved = nlohmann::json::parse(in);
        if (saved.at("config_hash").get<std::string>() != hash) {
            throw input_error("checkpoint " + cfg.checkpoint->string() + " belongs to a different configuration");
        }
        total.end_index = saved.at("next_index").get<std::uint64_t>();
        total.total_enumerated = total.end_index - start;
        total.property_o_count = saved.at("property_o_count").get<std::uint64_t>();
        total.canonical_count = saved.at("canonical_count").get<std::uint64_t>();
        if (!saved.at("first_property_o_index").is_null()) {
            total.first_property_o_index = saved.at("first_property_o_index").get<std::uint64_t>();
        }
    }
    auto save = [&] {
        nlohmann::json state{{"config_hash", hash},
                             {"next_index", total.end_index},
                             {"property_o_count", total.property_o_count},
                             {"canonical_count", total.canonical_count},
                             {"first_property_o_index", total.first_property_o_index ? nlohmann::json(*total.first_property_o_index)
                                                                                     : nlohmann::json(nullptr)}};
        const auto tmp = cfg.checkpoint->string() + ".tmp";
        std::ofstream(tmp) << state.dump(2) << '\n';
        std::filesystem::rename(tmp, *cfg.checkpoint);
    };
    while (total.end_index < end) {
        const auto chunk_end = std::min(end, total.end_index + std::max<std::uint64_t>(1, cfg.checkpoint_interval));
        const auto part = census_parallel(cfg.n, cfg.k, total.end_index, chunk_end, cfg.canonical_only, cfg.method, cfg.jobs);
        total = merge_reports(total, part);
        save();
    }
    if (total.end_index == start) {
        save();
    }
    return total;
}

// Lexicographically least relabeling: edges sorted as tuples, compared as a sequence.
inline OrientedHypergraph canonical_form(const OrientedHypergraph& h, unsigned max_vertices = coverage_vertex_limit) {
    const unsigned n = h.vertex_count(), k = h.uniformity();
    if (n > max_vertices) {
        throw refusal_error("canonical_form above n = " + std::to_string(max_vertices) + " refused");
    }
    const auto m = h.edge_count();
    std::vector<vertex_id> sigma(n);
    std::iota(sigma.begin(), sigma.end(), vertex_id{0});
    std::vector<vertex_id> best, image(m * k);
    std::vector<std::size_t> rows(m);
    std::vector<vertex_id> sorted(m * k);
    auto src = h.flat();
    do {
        for (std::size_t i = 0; i < m * k; ++i) {
            image[i] = sigma[src[i]];
        }
        std::iota(rows.begin(), rows.end(), std::size_t{0});
        std::sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
            return std::lexicographical_compare(image.begin() + static_cast<std::ptrdiff_t>(a * k),
                                                image.begin() + static_cast<std::ptrdiff_t>((a + 1) * k),
                                                image.begin() + static_cast<std::ptrdiff_t>(b * k),
                                                image.begin() + static_cast<std::ptrdiff_t>((b + 1) * k));
        });
        for (std::size_t r = 0; r < m; ++r) {
            std::copy_n(image.begin() + static_cast<std::ptrdiff_t>(rows[r] * k), k,
                        sorted.begin() + static_cast<std::ptrdiff_t>(r * k));
        }
        if (best.empty() || sorted < best) {
            best = sorted;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return OrientedHypergraph(n, k, std::move(best));
}

enum class SearchOutcome { found, none, indeterminate };

inline const char* to_string(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::found: return "FOUND";
        case SearchOutcome::none: return "NONE";
        case SearchOutcome::indeterminate: return "INDETERMINATE";
    }
    return "?";
}

// Where an interrupted minimum-edge search resumes: edge count and set-system index within it.
struct MinEdgesCheckpoint {
    unsigned edges = 0;
    std::uint64_t system_index = 0;
};

struct MinEdgesResult {
    SearchOutcome outcome = SearchOutcome::none;
    std::optional<unsigned> minimum;
    std::optional<OrientedHypergraph> family;
    std::uint64_t systems_examined = 0;  // canonical set systems whose orientations were searched
    std::uint64_t nodes = 0;
    std::optional<MinEdgesCheckpoint> checkpoint;
};

namespace detail {

// Tries every orientation of the chosen subsets; a branch dies when the uncovered orders outnumber
// what the remaining edges can cover (each edge covers exactly n!/k! orders).
class OrientationSearch {
public:
    OrientationSearch(const OrderCoverage& cov, std::span<const std::uint32_t> chosen)
        : cov_(cov), chosen_(chosen), acc_((chosen.size() + 1) * cov.words(), 0), picks_(chosen.size()) {
        per_edge_ = cov.order_count() / cov.orientation_count();
    }

    template<class Tick>
    bool run(Tick&& tick) { return descend(0, tick); }

    std::span<const std::uint32_t> picks() const { return picks_; }

private:
    template<class Tick>
    bool descend(std::size_t depth, Tick& tick) {
        const auto words = cov_.words();
        auto acc = std::span(acc_).subspan(depth * words, words);
        const auto uncovered = cov_.order_count() - cov_.covered(acc);
        if (uncovered == 0) {
            return true;
        }
        const auto remaining = chosen_.size() - depth;
        if (uncovered > remaining * per_edge_) {
            return false;
        }
        auto next = std::span(acc_).subspan((depth + 1) * words, words);
        for (std::uint32_t o = 0; o < cov_.orientation_count(); ++o) {
            if (!tick()) {
                return false;
            }
            const auto mask = cov_.mask(chosen_[depth], o);
            for (std::size_t w = 0; w < words; ++w) {
                next[w] = acc[w] | mask[w];
            }
            picks_[depth] = o;
            if (descend(depth + 1, tick)) {
                return true;
            }
        }
        return false;
    }

    const OrderCoverage& cov_;
    std::span<const std::uint32_t> chosen_;
    std::vector<std::uint64_t> acc_;
    std::vector<std::uint32_t> picks_;
    std::uint64_t per_edge_ = 0;
};

// Next m-combination of {0..universe-1} in lexicographic order; false after the last.
inline bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t universe) {
    const auto m = c.size();
    std::size_t i = m;
    while (i > 0 && c[i - 1] == universe - m + i - 1) {
        --i;
    }
    if (i == 0) {
        return false;
    }
    ++c[i - 1];
    for (auto j = i; j < m; ++j) {
        c[j] = c[j - 1] + 1;
    }
    return true;
}

}

struct MinEdgesConfig {
    unsigned n = 0;
    unsigned k = 0;
    unsigned max_edges = 0;
    std::optional<double> max_seconds{};
    std::optional<MinEdgesCheckpoint> resume{};
};

// Minimum edge count of an oriented k-graph on n vertices with Property O, trying edge counts upward
// from k!. Underlying set systems are taken one per relabeling orbit, then all their orientations.
inline MinEdgesResult min_edges_search(const MinEdgesConfig& cfg) {
    const unsigned n = cfg.n, k = cfg.k;
    if (k < 2 || k > n) {
        throw input_error("min_edges_search needs 2 <= k <= n");
    }
    const OrderCoverage cov(n, k);
    const SubsetSymmetry sym(n, k, false);
    const auto universe = static_cast<std::uint32_t>(cov.subset_count());
    const auto lowest = static_cast<unsigned>(std::max<std::uint64_t>(cov.orientation_count(), 1));
    const auto highest = static_cast<unsigned>(std::min<std::uint64_t>(cfg.max_edges, universe));

    MinEdgesResult result;
    const auto t0 = std::chrono::steady_clock::now();
    bool out_of_time = false;
    auto tick = [&] {
        ++result.nodes;
        if (cfg.max_seconds && (result.nodes & 4095) == 1) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
            out_of_time = elapsed.count() >= *cfg.max_seconds;
        }
        return !out_of_time;
    };

    unsigned first_m = lowest;
    std::uint64_t skip = 0;
    if (cfg.resume) {
        first_m = std::max(first_m, cfg.resume->edges);
        skip = cfg.resume->system_index;
    }
    for (unsigned m = first_m; m <= highest; ++m) {
        std::vector<std::uint32_t> chosen(m);
        std::iota(chosen.begin(), chosen.end(), 0u);
        std::uint64_t system_index = 0;
        do {
            if (system_index++ < skip) {
                continue;
            }
            if (!sym.is_minimal_selection(chosen)) {
                continue;
            }
            ++result.systems_examined;
            detail::OrientationSearch search(cov, chosen);
            if (search.run(tick)) {
                std::vector<vertex_id> flat;
                for (std::size_t i = 0; i < m; ++i) {
                    const auto subset = cov.subset_at(chosen[i]);
                    const auto perm = permutation_unrank(k, search.picks()[i]);
                    for (unsigned j = 0; j < k; ++j) {
                        flat.push_back(subset[perm[j]]);
                    }
                }
                OrientedHypergraph family(n, k, std::move(flat));
                if (!has_property_o(family)) {
                    throw invariant_violation("min_edges_search produced a family without Property O");
                }
                result.outcome = SearchOutcome::found;
                result.minimum = m;
                result.family = std::move(family);
                return result;
            }
            if (out_of_time) {
                result.outcome = SearchOutcome::indeterminate;
                result.checkpoint = MinEdgesCheckpoint{m, system_index - 1};
                return result;
            }
        } while (detail::next_combination(chosen, universe));
        skip = 0;
    }
    result.outcome = SearchOutcome::none;
    return result;
}

struct TightFamilyResult {
    SearchOutcome outcome = SearchOutcome::none;
    std::optional<OrientedHypergraph> family;
    std::uint64_t candidate_edges = 0;
    std::uint64_t cliques_decided = 0;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t tight_candidate_limit = 4096;

// Families of exactly k! edges can only have Property O if every order is consistent with exactly one
// edge, so all pairs must be incompatible. Searches such pairwise-incompatible families on n vertices
// (one edge fixed to (0, 1, ..., k-1) by symmetry) and decides each survivor exactly.
inline TightFamilyResult tight_family_search(unsigned n, unsigned k) {
    if (k < 2 || k > n) {
        throw input_error("tight_family_search needs 2 <= k <= n");
    }
    if (n > unbounded_search_vertex_limit || binomial(n, k) * factorial(k) > tight_candidate_limit) {
        throw refusal_error("tight_family_search(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ") exceeds the guard");
    }
    TightFamilyResult result;
    const auto target = factorial(k);
    const auto subsets = colex_subsets(n, k);
    const auto perms = permutation_table(k);
    std::vector<OrientedEdge> edges;
    std::vector<std::uint64_t> set_of;
    for (std::size_t s = 0; s < subsets.size() / k; ++s) {
        for (std::uint64_t o = 0; o < target; ++o) {
            std::vector<vertex_id> tuple(k);
            for (unsigned i = 0; i < k; ++i) {
                tuple[i] = subsets[s * k + perms[o * k + i]];
            }
            edges.emplace_back(std::move(tuple));
            set_of.push_back(s);
        }
    }
    const auto count = edges.size();
    result.candidate_edges = count;
    // edge 0 is (0, 1, ..., k-1): subset 0, identity orientation
    const std::size_t words = (count + 63) / 64;
    std::vector<std::uint64_t> adjacent(count * words, 0);
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) {
            if (set_of[a] != set_of[b] && !edges_compatible(edges[a], edges[b])) {
                adjacent[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
                adjacent[b * words + a / 64] |= std::uint64_t{1} << (a % 64);
            }
        }
    }

    std::vector<std::size_t> clique{0};
    std::optional<OrientedHypergraph> found;
    auto popcount = [&](const std::vector<std::uint64_t>& bits) {
        std::uint64_t c = 0;
        for (auto w : bits) {
            c += static_cast<std::uint64_t>(std::popcount(w));
        }
        return c;
    };
    // candidates: edges after the last clique member adjacent to every member
    auto extend = [&](auto& self, std::vector<std::uint64_t> candidates) -> bool {
        ++result.nodes;
        if (clique.size() == target) {
            std::vector<OrientedEdge> family;
            for (auto i : clique) {
                family.push_back(edges[i]);
            }
            OrientedHypergraph h(n, k, family);
            ++result.cliques_decided;
            if (has_property_o(h)) {
                found = std::move(h);
                return true;
            }
            return false;
        }
        if (clique.size() + popcount(candidates) < target) {
            return false;
        }
        for (std::size_t w = 0; w < words; ++w) {
            while (candidates[w]) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(candidates[w]));
                candidates[w] &= candidates[w] - 1;
                const auto v = w * 64 + bit;
                std::vector<std::uint64_t> next(words, 0);
                for (std::size_t x = 0; x < words; ++x) {
                    next[x] = candidates[x] & adjacent[v * words + x];
                }
                clique.push_back(v);
                if (self(self, std::move(next))) {
                    return true;
                }
                clique.pop_back();
                if (clique.size() + popcount(candidates) < target) {
                    return false;
                }
            }
        }
        return false;
    };
    std::vector<std::uint64_t> start(adjacent.begin(), adjacent.begin() + static_cast<std::ptrdiff_t>(words));
    if (extend(extend, std::move(start))) {
        result.outcome = SearchOutcome::found;
        result.family = std::move(found);
    }
    return result;
}

}

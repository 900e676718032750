#pragma once

#include <chrono>
#include <ctime>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "bounds_report.hpp"
#include "config_hash.hpp"
#include "construct.hpp"
#include "decide.hpp"
#include "enumerate.hpp"
#include "stochastic.hpp"

#ifndef PROPO_VERSION
#define PROPO_VERSION "0.0.0"
#endif

namespace propo {

using nlohmann::json;

inline constexpr const char* tool_version = PROPO_VERSION;

inline json order_json(const LinearOrder& order) {
    return json(std::vector<vertex_id>(order.perm().begin(), order.perm().end()));
}

inline json to_json(const WitnessCertificate& cert) {
    return {{"status", to_string(cert.status)},
            {"witness_order", cert.witness_order ? order_json(*cert.witness_order) : json(nullptr)},
            {"method", to_string(cert.method)},
            {"nodes_expanded", cert.stats.nodes_expanded},
            {"orders_examined", cert.stats.orders_examined}};
}

inline WitnessCertificate certificate_from_json(const json& j) {
    WitnessCertificate cert;
    const auto status = j.at("status").get<std::string>();
    if (status == "HAS_O") {
        cert.status = Status::has_o;
    } else if (status == "FAILS_O") {
        cert.status = Status::fails_o;
    } else if (status == "INDETERMINATE") {
        cert.status = Status::indeterminate;
    } else {
        throw input_error("unknown certificate status '" + status + "'");
    }
    const auto method = j.value("method", std::string("dfs"));
    cert.method = method == "naive" ? Method::naive : method == "proof_guided" ? Method::proof_guided : Method::dfs;
    if (j.contains("witness_order") && !j.at("witness_order").is_null()) {
        cert.witness_order = LinearOrder(j.at("witness_order").get<std::vector<vertex_id>>());
    }
    cert.stats.nodes_expanded = j.value("nodes_expanded", std::uint64_t{0});
    return cert;
}

inline json to_json(const CensusReport& r) {
    return {{"n", r.n},
            {"k", r.k},
            {"space_size", tournament_space_size(r.n, r.k).str()},
            {"partition", {{"start_index", r.start_index}, {"end_index", r.end_index}}},
            {"total_enumerated", r.total_enumerated},
            {"property_o_count", r.property_o_count},
            {"canonical_filter_used", r.canonical_filter_used},
            {"canonical_count", r.canonical_count},
            {"method", to_string(r.method)},
            {"first_property_o_index", r.first_property_o_index ? json(*r.first_property_o_index) : json(nullptr)}};
}

inline json edges_json(const OrientedHypergraph& h) {
    json edges = json::array();
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        edges.push_back(std::vector<vertex_id>(h.edge(i).begin(), h.edge(i).end()));
    }
    return edges;
}

inline json to_json(const MinEdgesResult& r) {
    json j{{"outcome", to_string(r.outcome)},
           {"minimum", r.minimum ? json(*r.minimum) : json(nullptr)},
           {"systems_examined", r.systems_examined},
           {"nodes", r.nodes},
           {"family", r.family ? edges_json(*r.family) : json(nullptr)}};
    if (r.checkpoint) {
        j["checkpoint"] = {{"edges", r.checkpoint->edges}, {"system_index", r.checkpoint->system_index}};
    } else {
        j["checkpoint"] = nullptr;
    }
    return j;
}

inline json to_json(const TightFamilyResult& r) {
    return {{"outcome", to_string(r.outcome)},
            {"candidate_edges", r.candidate_edges},
            {"cliques_decided", r.cliques_decided},
            {"nodes", r.nodes},
            {"family", r.family ? edges_json(*r.family) : json(nullptr)}};
}

inline json to_json(const SampleReport& r) {
    json j{{"n", r.config.n},
           {"k", r.config.k},
           {"trials", r.config.trials},
           {"exact", r.exact},
           {"fraction", r.decided ? json(r.fraction) : json(nullptr)},
           {"ci95", r.decided ? json(r.ci95) : json(nullptr)},
           {"property_o_count", r.decided ? json(r.property_o_count) : json(nullptr)}};
    if (!r.exact) {
        j["mean_consistent"] = r.mean_consistent;
        j["mean_consistent_se"] = r.mean_consistent_se;
    }
    if (r.thm2) {
        j["thm2"] = {{"applicable", r.applicable},
                     {"claim_checked", r.claim_checked},
                     {"claim_violations", r.claim_violations},
                     {"witness_found", r.witness_found}};
    }
    return j;
}

inline json to_json(const BoundsReport& r) {
    json j{{"k", r.k},
           {"alpha", r.alpha ? json(*r.alpha) : json(nullptr)},
           {"n", r.n ? json(*r.n) : json(nullptr)},
           {"precision_digits", r.precision_digits},
           {"factorial_lower", {{"value", r.k <= 20 ? json(factorial(r.k)) : json(r.factorial_lower)}, {"kind", "exact"}}},
           {"n_thm1_ceil", {{"value", r.n_thm1_ceil}, {"kind", "exact"}}}};
    for (const auto& [name, q] : r.quantities) {
        j[name] = {{"value", q.value}, {"approx", q.approx}, {"kind", q.asymptotic ? "asymptotic" : "exact"}};
    }
    auto flag = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
    j["eq4_certified"] = flag(r.eq4_certified);
    j["eq4_cross_check_agrees"] = flag(r.eq4_cross_check_agrees);
    if (r.n) {
        j["eq4_certified_at_n"] = flag(r.eq4_certified_at_n);
    }
    if (r.alpha) {
        j["discrepancy"] = flag(r.c_discrepancy);
    }
    return j;
}

inline json to_json(const GkLayout& layout, bool with_edge_types = true) {
    json levels = json::array();
    for (unsigned level = layout.k; level >= 3; --level) {
        const auto b = gk_blocks(level);
        levels.push_back({{"level", level},
                          {"copy_size", b.y_begin - b.x_begin},
                          {"X", {b.x_begin, b.y_begin}},
                          {"Y", {b.y_begin, b.z_begin}},
                          {"Z", {b.z_begin, b.end}}});
    }
    json j{{"k", layout.k},
           {"vertex_count", layout.vertex_count()},
           {"edge_count", layout.edge_count()},
           {"blocks", levels},
           {"block_note", "each block holds a copy of the previous level laid out the same way, shifted by its start"}};
    if (with_edge_types) {
        json tags = json::array();
        for (auto t : layout.edge_type) {
            tags.push_back(to_string(t));
        }
        j["edge_types"] = tags;
    }
    return j;
}

// Wraps a report with tool version, config digest and seed. Timing lives under "run_info" so the rest
// of the document is byte-identical across reruns of one configuration.
inline json envelope(const json& config, const json& report, std::optional<std::uint64_t> seed = {},
                     std::optional<double> wall_time_seconds = {}) {
    json run_info{{"timestamp", static_cast<std::int64_t>(std::time(nullptr))}};
    if (wall_time_seconds) {
        run_info["wall_time_seconds"] = *wall_time_seconds;
    }
    return {{"tool", "propo"},
            {"tool_version", tool_version},
            {"config", config},
            {"config_hash", config_hash(config)},
            {"seed", seed ? json(*seed) : json(nullptr)},
            {"report", report},
            {"run_info", run_info}};
}

}

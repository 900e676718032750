#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "propo/enumerate.hpp"
#include "propo/rng.hpp"
#include "propo/stochastic.hpp"

using namespace propo;

// Golden streams come from an independent Python implementation (tests/oracles/rng_golden.py).
TEST(rng, splitmix_reference_values) {
    SplitMix64 sm(0);
    EXPECT_EQ(sm.next(), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(sm.next(), 0x6e789e6aa1b965f4ULL);
    EXPECT_EQ(sm.next(), 0x06c45d188009454fULL);
}

TEST(rng, xoshiro_golden_stream) {
    Xoshiro256ss r(42);
    const std::uint64_t expected[] = {0x15780b2e0c2ec716ULL, 0x6104d9866d113a7eULL, 0xae17533239e499a1ULL,
                                      0xecb8ad4703b360a1ULL, 0xfde6dc7fe2ec5e64ULL};
    for (auto e : expected) {
        EXPECT_EQ(r.next(), e);
    }
    auto sub = Xoshiro256ss::substream(7, 3);
    EXPECT_EQ(sub.next(), 0x7957c3b74b90459eULL);
    EXPECT_EQ(sub.next(), 0x32f5b5fef980b055ULL);
    EXPECT_EQ(sub.next(), 0xf54ad23e63375dfeULL);
    Xoshiro256ss u(1);
    const std::uint64_t dice[] = {1, 4, 2, 5, 5, 4, 2, 3, 1, 4, 1, 4};
    for (auto d : dice) {
        EXPECT_EQ(u.uniform(6), d);
    }
}

TEST(stochastic, sampled_tournaments_are_golden) {
    const SampleConfig cfg{5, 3, 1, 7};
    const std::vector<std::vector<std::uint32_t>> expected{
        {1, 3, 4, 0, 5, 0, 4, 5, 3, 4}, {5, 2, 0, 3, 5, 0, 1, 1, 0, 1}, {5, 1, 0, 0, 0, 1, 3, 2, 3, 0}};
    for (std::uint64_t trial = 0; trial < 3; ++trial) {
        const auto t = sample_tournament(cfg, trial);
        EXPECT_TRUE(std::equal(t.orientation().begin(), t.orientation().end(), expected[trial].begin()));
    }
    const auto t = sample_tournament(SampleConfig{4, 3, 1, 99}, 5);
    EXPECT_EQ(t.flat_edges(), (std::vector<vertex_id>{0, 1, 2, 0, 1, 3, 2, 3, 0, 1, 2, 3}));
    EXPECT_EQ(sample_tournament(cfg, 2), sample_tournament(cfg, 2));
}

TEST(stochastic, n3_k2_samples_are_uniform) {
    const SampleConfig cfg{3, 2, 100000, 2024};
    std::map<std::uint64_t, std::uint64_t> freq;
    for (std::uint64_t i = 0; i < cfg.trials; ++i) {
        const auto t = sample_tournament(cfg, i);
        freq[t.orientation()[0] + 2 * t.orientation()[1] + 4 * t.orientation()[2]]++;
    }
    ASSERT_EQ(freq.size(), 8u);
    const double p = 1.0 / 8, sigma = std::sqrt(cfg.trials * p * (1 - p));
    double chi2 = 0;
    for (const auto& [key, count] : freq) {
        EXPECT_LT(std::abs(static_cast<double>(count) - cfg.trials * p), 4 * sigma);
        chi2 += std::pow(count - cfg.trials * p, 2) / (cfg.trials * p);
    }
    EXPECT_LT(chi2, 24.32);  // chi-square, 7 degrees of freedom, p = 0.001
}

TEST(stochastic, k2_estimates_match_the_analytic_fraction) {
    const SampleConfig cfg{5, 2, 100000, 11};
    const auto r = estimate_property_o_probability(cfg);
    const double p = 1 - 120.0 / 1024;
    const double se = std::sqrt(p * (1 - p) / cfg.trials);
    EXPECT_LT(std::abs(r.fraction - p), 3 * se);
    EXPECT_NEAR(r.mean_consistent, 5.0, 3 * r.mean_consistent_se);
}

TEST(stochastic, exact_mode_and_errors) {
    const auto exact = estimate_property_o_probability(SampleConfig{3, 2, 1, 0}, true);
    EXPECT_TRUE(exact.exact);
    EXPECT_DOUBLE_EQ(exact.fraction, 0.25);
    EXPECT_THROW(estimate_property_o_probability(SampleConfig{5, 2, 0, 1}), input_error);
    EXPECT_THROW(estimate_property_o_probability(SampleConfig{12, 2, 10, 1}), refusal_error);
    EXPECT_NO_THROW(estimate_property_o_probability(SampleConfig{12, 2, 10, 1}, false, 1, true, false));
}

TEST(stochastic, reports_are_schedule_independent) {
    const SampleConfig cfg{6, 3, 3000, 5};
    const auto a = estimate_property_o_probability(cfg, false, 1, true);
    const auto b = estimate_property_o_probability(cfg, false, 3, true);
    EXPECT_EQ(a.property_o_count, b.property_o_count);
    EXPECT_EQ(a.consistent_total, b.consistent_total);
    EXPECT_EQ(a.consistent_square_total, b.consistent_square_total);
    EXPECT_EQ(a.applicable, b.applicable);
    EXPECT_EQ(a.witness_found, b.witness_found);
    EXPECT_EQ(a.fraction, b.fraction);
}

TEST(stochastic, trace_invariants) {
    const SampleConfig cfg{7, 3, 2000, 77};
    for (std::uint64_t i = 0; i < cfg.trials; ++i) {
        const auto t = sample_tournament(cfg, i);
        const auto trace = thm2_witness_attempt(t);
        for (auto w : trace.selection) {
            EXPECT_FALSE(std::binary_search(trace.minima.begin(), trace.minima.end(), w));
        }
        EXPECT_LE(trace.selection.size(), trace.consistent_set.size());
        if (!trace.applicable) {
            continue;
        }
        EXPECT_TRUE(trace.claim_holds);
        // edges avoiding W are consistent with the modified order iff they are with the natural one
        const auto flat = t.flat_edges();
        for (std::size_t s = 0; s < t.subset_count(); ++s) {
            const auto e = std::span(flat).subspan(s * 3, 3);
            const bool touches = std::any_of(e.begin(), e.end(), [&](vertex_id v) {
                return std::binary_search(trace.selection.begin(), trace.selection.end(), v);
            });
            if (!touches) {
                EXPECT_EQ(is_consistent(e, trace.modified_order), is_consistent(e, LinearOrder::identity(7)));
            }
        }
        if (trace.witness_found) {
            EXPECT_EQ(count_consistent_edges(t.to_hypergraph(), trace.modified_order), 0u);
        }
    }
}

TEST(stochastic, trace_examples) {
    // every subset oriented against the natural order: C(T) is empty
    const auto reversed = thm2_witness_attempt(Tournament(4, 3, {5, 5, 5, 5}));
    EXPECT_TRUE(reversed.consistent_set.empty());
    EXPECT_TRUE(reversed.applicable);
    EXPECT_EQ(reversed.modified_order, LinearOrder::identity(4));
    EXPECT_TRUE(reversed.witness_found);

    // the 3-cycle (0,1),(1,2),(2,0): C(T) = {01, 12}, M = {0, 1} contains K = {0, 1}
    const auto cycle = thm2_witness_attempt(Tournament(3, 2, {0, 1, 0}));
    EXPECT_EQ(cycle.minima, (std::vector<vertex_id>{0, 1}));
    EXPECT_FALSE(cycle.applicable);

    // C(T) = {(0,1), (0,2), (1,2)}: M = {0, 1} again holds K = {0, 1}
    EXPECT_FALSE(thm2_witness_attempt(Tournament(3, 2, {0, 0, 0})).applicable);
}

TEST(stochastic, inapplicable_traces_by_size) {
    // at n = 4, k = 3 only vertices 0 and 1 can be minima, so no 3-set lies inside M
    for (std::uint64_t idx = 0; idx < 1296; ++idx) {
        EXPECT_TRUE(thm2_witness_attempt(tournament_at(4, 3, idx)).applicable);
    }
    // at n = 5, k = 3 the set {0, 1, 2} can: orient {0,1,2}, {1,2,3}, {2,3,4} naturally
    std::vector<std::uint32_t> orientation(10, 5);
    orientation[0] = orientation[3] = orientation[9] = 0;  // colex ranks of 012, 123, 234
    const auto trace = thm2_witness_attempt(Tournament(5, 3, orientation));
    EXPECT_EQ(trace.minima, (std::vector<vertex_id>{0, 1, 2}));
    EXPECT_FALSE(trace.applicable);
}

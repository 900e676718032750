#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"

namespace propo {

inline constexpr unsigned coverage_vertex_limit = 8;

// For every k-subset s (colex) and orientation o (lex rank), the bitset of the n! linear orders
// (lex order of permutations) consistent with that oriented edge. A family has Property O iff the
// union of its edges' bitsets is full.
class OrderCoverage {
public:
    OrderCoverage(unsigned n, unsigned k) : n_(n), k_(k) {
        if (k < 2 || k > n) {
            throw input_error("OrderCoverage needs 2 <= k <= n");
        }
        if (n > coverage_vertex_limit) {
            throw refusal_error("order coverage tables above n = " + std::to_string(coverage_vertex_limit) + " refused");
        }
        orders_ = factorial(n);
        orientations_ = factorial(k);
        words_ = (orders_ + 63) / 64;
        subsets_ = colex_subsets(n, k);
        subset_count_ = subsets_.size() / k;
        table_.assign(subset_count_ * orientations_ * words_, 0);

        full_.assign(words_, ~std::uint64_t{0});
        if (orders_ % 64) {
            full_.back() = (std::uint64_t{1} << (orders_ % 64)) - 1;
        }

        std::vector<vertex_id> perm(n), rank(n), pattern(k);
        std::iota(perm.begin(), perm.end(), vertex_id{0});
        std::size_t order_index = 0;
        do {
            for (vertex_id pos = 0; pos < n; ++pos) {
                rank[perm[pos]] = pos;
            }
            for (std::size_t s = 0; s < subset_count_; ++s) {
                const auto subset = subset_at(s);
                // the consistent tuple lists the subset by rank; its pattern is the orientation
                for (unsigned i = 0; i < k; ++i) {
                    pattern[i] = i;
                }
                std::sort(pattern.begin(), pattern.end(),
                          [&](vertex_id a, vertex_id b) { return rank[subset[a]] < rank[subset[b]]; });
                const auto o = pattern_rank(std::span<const vertex_id>(pattern));
                table_[(s * orientations_ + o) * words_ + order_index / 64] |= std::uint64_t{1} << (order_index % 64);
            }
            ++order_index;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    unsigned vertex_count() const { return n_; }
    unsigned uniformity() const { return k_; }
    std::uint64_t order_count() const { return orders_; }
    std::uint64_t orientation_count() const { return orientations_; }
    std::size_t subset_count() const { return subset_count_; }
    std::size_t words() const { return words_; }

    std::span<const vertex_id> subset_at(std::size_t s) const { return std::span(subsets_).subspan(s * k_, k_); }

    std::span<const std::uint64_t> mask(std::size_t subset, std::uint64_t orientation) const {
        return std::span(table_).subspan((subset * orientations_ + orientation) * words_, words_);
    }

    std::pair<std::size_t, std::uint64_t> locate(std::span<const vertex_id> edge) const {
        std::vector<vertex_id> sorted(edge.begin(), edge.end());
        std::sort(sorted.begin(), sorted.end());
        return {colex_rank(sorted), pattern_rank(edge)};
    }

    std::span<const std::uint64_t> edge_mask(std::span<const vertex_id> edge) const {
        const auto [s, o] = locate(edge);
        return mask(s, o);
    }

    std::span<const std::uint64_t> full_mask() const { return full_; }

    bool is_full(std::span<const std::uint64_t> acc) const {
        for (std::size_t w = 0; w < words_; ++w) {
            if (acc[w] != full_[w]) {
                return false;
            }
        }
        return true;
    }

    std::uint64_t covered(std::span<const std::uint64_t> acc) const {
        std::uint64_t c = 0;
        for (auto w : acc) {
            c += static_cast<std::uint64_t>(std::popcount(w));
        }
        return c;
    }

    // Index of the first order not in `acc`, or order_count() if acc is full.
    std::uint64_t first_uncovered(std::span<const std::uint64_t> acc) const {
        for (std::size_t w = 0; w < words_; ++w) {
            const auto missing = ~acc[w] & full_[w];
            if (missing) {
                return w * 64 + static_cast<std::uint64_t>(std::countr_zero(missing));
            }
        }
        return orders_;
    }

    // The order with the given lexicographic index.
    LinearOrder order_at(std::uint64_t index) const {
        const auto perm = permutation_unrank(n_, index);
        return LinearOrder(std::vector<vertex_id>(perm.begin(), perm.end()));
    }

    bool has_property_o(const OrientedHypergraph& h) const {
        std::vector<std::uint64_t> acc(words_, 0);
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            const auto m = edge_mask(h.edge(i));
            for (std::size_t w = 0; w < words_; ++w) {
                acc[w] |= m[w];
            }
        }
        return is_full(acc);
    }

private:
    unsigned n_;
    unsigned k_;
    std::uint64_t orders_ = 0;
    std::uint64_t orientations_ = 0;
    std::size_t words_ = 0;
    std::size_t subset_count_ = 0;
    std::vector<vertex_id> subsets_;
    std::vector<std::uint64_t> table_;
    std::vector<std::uint64_t> full_;
};

// Action of the symmetric group on k-subsets and their orientations, for all n! relabelings
// (lex order; relabeling 0 is the identity).
class SubsetSymmetry {
public:
    SubsetSymmetry(unsigned n, unsigned k, bool with_orientations = true) : n_(n), k_(k) {
        if (n > coverage_vertex_limit) {
            throw refusal_error("symmetry tables above n = " + std::to_string(coverage_vertex_limit) + " refused");
        }
        const auto subsets = colex_subsets(n, k);
        subset_count_ = subsets.size() / k;
        orientations_ = factorial(k);
        const auto perms = permutation_table(k);
        std::vector<vertex_id> sigma(n), image(k), sorted(k);
        std::iota(sigma.begin(), sigma.end(), vertex_id{0});
        do {
            for (std::size_t s = 0; s < subset_count_; ++s) {
                for (unsigned i = 0; i < k; ++i) {
                    sorted[i] = sigma[subsets[s * k + i]];
                }
                std::sort(sorted.begin(), sorted.end());
                subset_image_.push_back(static_cast<std::uint32_t>(colex_rank(sorted)));
                if (!with_orientations) {
                    continue;
                }
                for (std::uint64_t o = 0; o < orientations_; ++o) {
                    for (unsigned i = 0; i < k; ++i) {
                        image[i] = sigma[subsets[s * k + perms[o * k + i]]];
                    }
                    orientation_image_.push_back(static_cast<std::uint32_t>(pattern_rank(std::span<const vertex_id>(image))));
                }
            }
            ++relabelings_;
        } while (std::next_permutation(sigma.begin(), sigma.end()));

        preimage_.resize(subset_image_.size());
        for (std::size_t g = 0; g < relabelings_; ++g) {
            for (std::size_t s = 0; s < subset_count_; ++s) {
                preimage_[g * subset_count_ + subset_image_[g * subset_count_ + s]] = static_cast<std::uint32_t>(s);
            }
        }
    }

    std::size_t relabelings() const { return relabelings_; }
    std::size_t subset_count() const { return subset_count_; }

    std::uint32_t subset_image(std::size_t g, std::size_t s) const { return subset_image_[g * subset_count_ + s]; }
    std::uint32_t subset_preimage(std::size_t g, std::size_t t) const { return preimage_[g * subset_count_ + t]; }
    std::uint32_t orientation_image(std::size_t g, std::size_t s, std::uint64_t o) const {
        return orientation_image_[(g * subset_count_ + s) * orientations_ + o];
    }

    // Whether the tournament with these digits (subset order, least significant first) has the
    // smallest mixed-radix index in its relabeling orbit.
    bool is_minimal_tournament(std::span<const std::uint32_t> digits) const {
        for (std::size_t g = 1; g < relabelings_; ++g) {
            for (std::size_t t = subset_count_; t-- > 0;) {
                const auto s = subset_preimage(g, t);
                const auto d = orientation_image(g, s, digits[s]);
                if (d < digits[t]) {
                    return false;
                }
                if (d > digits[t]) {
                    break;
                }
            }
        }
        return true;
    }

    // Whether the sorted subset selection is lexicographically minimal among its images.
    bool is_minimal_selection(std::span<const std::uint32_t> sorted_selection) const {
        std::vector<std::uint32_t> image(sorted_selection.size());
        for (std::size_t g = 1; g < relabelings_; ++g) {
            for (std::size_t i = 0; i < sorted_selection.size(); ++i) {
                image[i] = subset_image(g, sorted_selection[i]);
            }
            std::sort(image.begin(), image.end());
            if (std::lexicographical_compare(image.begin(), image.end(), sorted_selection.begin(), sorted_selection.end())) {
                return false;
            }
        }
        return true;
    }

private:
    unsigned n_;
    unsigned k_;
    std::size_t subset_count_ = 0;
    std::uint64_t orientations_ = 0;
    std::size_t relabelings_ = 0;
    std::vector<std::uint32_t> subset_image_;
    std::vector<std::uint32_t> preimage_;
    std::vector<std::uint32_t> orientation_image_;
};

}

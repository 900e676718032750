#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace propo {

using vertex_id = std::uint32_t;
using big_int = boost::multiprecision::cpp_int;

// Malformed arguments or data (maps to CLI exit code 2).
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a result contradicts a proven property; always a defect.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Computation refused because it is too large without an explicit override.
class refusal_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::uint64_t factorial(unsigned k) {
    if (k > 20) {
        throw input_error("factorial(" + std::to_string(k) + ") overflows 64 bits");
    }
    std::uint64_t out = 1;
    for (unsigned i = 2; i <= k; ++i) {
        out *= i;
    }
    return out;
}

inline big_int big_factorial(unsigned k) {
    big_int out = 1;
    for (unsigned i = 2; i <= k; ++i) {
        out *= i;
    }
    return out;
}

inline big_int big_binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    big_int out = 1;
    for (unsigned i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

// Exact C(n, k) in 64 bits; throws when the result does not fit.
inline std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 out = 1;
    for (unsigned i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
        if (out > std::numeric_limits<std::uint64_t>::max()) {
            throw input_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows 64 bits");
        }
    }
    return static_cast<std::uint64_t>(out);
}

// Lexicographic rank of the relative order pattern of `values` (distinct entries).
// Rank 0 is the increasing pattern.
template<class T>
std::uint64_t pattern_rank(std::span<const T> values) {
    std::uint64_t rank = 0;
    const std::size_t k = values.size();
    for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t smaller_after = 0;
        for (std::size_t j = i + 1; j < k; ++j) {
            smaller_after += values[j] < values[i];
        }
        rank = rank * (k - i) + smaller_after;
    }
    return rank;
}

// Inverse of pattern_rank: the permutation of {0..k-1} with the given lexicographic rank.
inline std::vector<std::uint8_t> permutation_unrank(unsigned k, std::uint64_t rank) {
    std::vector<std::uint8_t> pool(k);
    for (unsigned i = 0; i < k; ++i) {
        pool[i] = static_cast<std::uint8_t>(i);
    }
    std::vector<std::uint8_t> out;
    out.reserve(k);
    std::uint64_t radix = factorial(k);
    for (unsigned i = 0; i < k; ++i) {
        radix /= (k - i);
        const auto digit = rank / radix;
        rank %= radix;
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return out;
}

// All k! permutations in lexicographic order, flattened row-major (k entries per row).
inline std::vector<std::uint8_t> permutation_table(unsigned k) {
    std::vector<std::uint8_t> row(k);
    for (unsigned i = 0; i < k; ++i) {
        row[i] = static_cast<std::uint8_t>(i);
    }
    std::vector<std::uint8_t> table;
    table.reserve(factorial(k) * k);
    do {
        table.insert(table.end(), row.begin(), row.end());
    } while (std::next_permutation(row.begin(), row.end()));
    return table;
}

// Colexicographic rank of a sorted k-subset (combinatorial number system).
inline std::uint64_t colex_rank(std::span<const vertex_id> sorted_subset) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < sorted_subset.size(); ++i) {
        rank += binomial(sorted_subset[i], static_cast<unsigned>(i + 1));
    }
    return rank;
}

// All k-subsets of {0..n-1} in colex order, each sorted ascending, flattened row-major.
inline std::vector<vertex_id> colex_subsets(unsigned n, unsigned k) {
    std::vector<vertex_id> out;
    if (k > n) {
        return out;
    }
    std::vector<vertex_id> cur(k);
    for (unsigned i = 0; i < k; ++i) {
        cur[i] = i;
    }
    out.reserve(binomial(n, k) * k);
    while (true) {
        out.insert(out.end(), cur.begin(), cur.end());
        // colex successor: bump the lowest entry that has room, reset those below it
        unsigned i = 0;
        while (i < k && cur[i] + 1 == (i + 1 < k ? cur[i + 1] : n)) {
            ++i;
        }
        if (i == k) {
            break;
        }
        ++cur[i];
        for (unsigned j = 0; j < i; ++j) {
            cur[j] = j;
        }
    }
    return out;
}

}

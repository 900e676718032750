#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <utility>

namespace propo {

// SplitMix64 (Steele, Lea, Flood 2014). Used for seeding and substream derivation.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// xoshiro256** 1.0 (Blackman, Vigna), state filled from SplitMix64.
//
// Substreams: trial i under seed s draws from Xoshiro256ss::substream(s, i), whose state is seeded by
// SplitMix64(s ^ SplitMix64(i).next()). Outputs are fixed across platforms and are golden-tested.
class Xoshiro256ss {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256ss(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : s_) {
            word = sm.next();
        }
    }

    static Xoshiro256ss substream(std::uint64_t seed, std::uint64_t index) {
        return Xoshiro256ss(seed ^ SplitMix64(index).next());
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return next(); }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform integer in [0, bound) by rejection; bound > 0. Portable, unlike std distributions.
    std::uint64_t uniform(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const auto r = next();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> s_{};
};

// Fisher-Yates with the portable uniform draw (std::shuffle is implementation-defined).
template<class Range>
void portable_shuffle(Range& range, Xoshiro256ss& rng) {
    for (auto i = range.size(); i > 1; --i) {
        const auto j = rng.uniform(i);
        std::swap(range[i - 1], range[j]);
    }
}

}

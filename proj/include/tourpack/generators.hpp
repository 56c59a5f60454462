#pragma once

#include <cstdint>

#include "tourpack/graph.hpp"

namespace tourpack {

/// SplitMix64 (Steele, Lea & Flood). Fixed arithmetic on uint64_t, so a seed
/// yields the same stream on every platform and in every language port.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    bool next_bit() noexcept { return (next() >> 63) != 0; }

    /// Uniform in [0, bound) by rejection on the top of the range; bound > 0.
    std::uint64_t uniform(std::uint64_t bound) noexcept {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

/// Seed for the i-th independent stream derived from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Pairs (i,j), i<j, are visited in lexicographic order; each takes the top
/// bit of one SplitMix64 draw ('1' = i->j).
Tournament random_tournament(int n, std::uint64_t seed);
Tournament transitive_tournament(int n);
/// Arc i->j iff (j-i) mod n lies in 1..(n-1)/2. Throws InputError for even n.
Tournament rotational_tournament(int n);
/// The directed triangle 0->1->2->0.
Tournament directed_triangle();

/// Tournament on n vertices whose orientation bits are read from `code`
/// (bit b = b-th pair in lexicographic order); enumerates all tournaments on n
/// labeled vertices as code runs over [0, 2^(n(n-1)/2)).
Tournament tournament_from_code(int n, std::uint64_t code);

}  // namespace tourpack

#include "tourpack/generators.hpp"

#include "tourpack/errors.hpp"

namespace tourpack {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    SplitMix64 mix(master ^ (index * 0xD1B54A32D192ED03ULL));
    mix.next();
    return mix.next();
}

Tournament random_tournament(int n, std::uint64_t seed) {
    if (n < 1) throw InputError("random_tournament needs n >= 1");
    SplitMix64 rng(seed);
    Tournament t(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (!rng.next_bit()) t.orient(j, i);
        }
    }
    return t;
}

Tournament transitive_tournament(int n) {
    if (n < 1) throw InputError("transitive_tournament needs n >= 1");
    return Tournament(n);
}

Tournament rotational_tournament(int n) {
    if (n < 3 || n % 2 == 0) throw InputError("rotational_tournament needs odd n >= 3");
    Tournament t(n);
    const int half = (n - 1) / 2;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if ((j - i) > half) t.orient(j, i);
        }
    }
    return t;
}

Tournament directed_triangle() {
    Tournament t(3);
    t.orient(2, 0);
    return t;
}

Tournament tournament_from_code(int n, std::uint64_t code) {
    Tournament t(n);
    int bit = 0;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j, ++bit) {
            if (((code >> bit) & 1U) == 0) t.orient(j, i);
        }
    }
    return t;
}

}  // namespace tourpack

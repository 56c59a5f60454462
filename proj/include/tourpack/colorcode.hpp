#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "tourpack/graph.hpp"
#include "tourpack/verify.hpp"

namespace tourpack {

/// Number of colors used for parameter k: 2k^2 + k, i.e. k blocks of 2k+1.
int color_count(int k);

/// Color in 1..colors() for every arc of a tournament.
class ArcColoring {
public:
    ArcColoring(const Tournament& t, int colors);

    int colors() const noexcept { return colors_; }
    int size() const noexcept { return n_; }
    int at(Vertex u, Vertex v) const { return color_[static_cast<std::size_t>(u) * n_ + v]; }
    int at(const Arc& a) const { return at(a.tail, a.head); }
    /// Throws InputError for a non-arc or a color outside 1..colors().
    void set(const Arc& a, int color);

private:
    int n_;
    int colors_;
    std::vector<int> color_;  // 0 where there is no arc
};

/// Independent uniform colors per arc, arcs visited in lexicographic order.
ArcColoring random_arc_coloring(const Tournament& t, int k, std::uint64_t seed);

/// Arc-disjoint and, across the whole family, no color used twice.
Check verify_colorful(const Tournament& t, const ArcColoring& coloring, const CyclePacking& packing);

/// Searches for k colorful cycles. Only the split of the colors into k
/// unordered blocks of 2k+1 matters, so blocks are enumerated instead of all
/// permutations: the block holding the smallest unassigned color is fixed
/// first, which also lets a block without a usable cycle prune every split
/// containing it. Per block the shortest cycle among its arcs is taken and
/// the block is rejected if that cycle repeats a color. Supports k <= 5.
std::optional<CyclePacking> colorful_packing_permutation(const Tournament& t, const ArcColoring& coloring,
                                                         int k);

/// ceil(e^l * ln(1/delta)) with l = 2k^2+k, saturating at UINT64_MAX.
std::uint64_t trials_for_delta(int k, double delta);

struct ColorCodingOptions {
    /// Exactly one of trials / delta may be set; neither means one trial.
    std::optional<std::uint64_t> trials;
    std::optional<double> delta;
    std::uint64_t seed = 0;
    /// Enumerate every coloring instead of sampling when l^|A(T)| is at most
    /// this many colorings.
    std::uint64_t exhaustive_limit = 4096;
    /// Sampling stops with BudgetExceeded once this passes.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct ColorCodingResult {
    std::optional<CyclePacking> packing;
    std::uint64_t trials_used = 0;
    /// true when the answer is certain: a packing was found or the input is
    /// acyclic.
    bool exact = false;
};

/// Monte Carlo decision. A returned packing always verifies; "no" can be
/// wrong only on yes-instances. Trial i colors with derive_seed(seed, i).
ColorCodingResult solve_color_coding(const Tournament& t, int k, const ColorCodingOptions& options);

}  // namespace tourpack

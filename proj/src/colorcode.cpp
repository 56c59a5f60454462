#include "tourpack/colorcode.hpp"

#include <cmath>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>

#include "tourpack/errors.hpp"
#include "tourpack/generators.hpp"
#include "tourpack/order.hpp"

namespace tourpack {

int color_count(int k) { return 2 * k * k + k; }

ArcColoring::ArcColoring(const Tournament& t, int colors)
    : n_(t.size()), colors_(colors), color_(static_cast<std::size_t>(t.size()) * t.size(), 0) {
    if (colors < 1) throw InputError("coloring needs at least one color");
    for (const Arc& a : t.arcs()) color_[static_cast<std::size_t>(a.tail) * n_ + a.head] = 1;
}

void ArcColoring::set(const Arc& a, int color) {
    if (a.tail < 0 || a.head < 0 || a.tail >= n_ || a.head >= n_ ||
        color_[static_cast<std::size_t>(a.tail) * n_ + a.head] == 0) {
        throw InputError("cannot color non-arc " + to_string(a));
    }
    if (color < 1 || color > colors_) throw InputError("color " + std::to_string(color) + " out of range");
    color_[static_cast<std::size_t>(a.tail) * n_ + a.head] = color;
}

ArcColoring random_arc_coloring(const Tournament& t, int k, std::uint64_t seed) {
    if (k < 1) throw InputError("random_arc_coloring needs k >= 1");
    const int colors = color_count(k);
    ArcColoring coloring(t, colors);
    SplitMix64 rng(seed);
    for (const Arc& a : t.arcs()) {
        coloring.set(a, 1 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(colors))));
    }
    return coloring;
}

Check verify_colorful(const Tournament& t, const ArcColoring& coloring, const CyclePacking& packing) {
    if (auto check = verify_packing(t, packing); !check) return check;
    std::set<int> seen;
    for (const Arc& a : packing.arcs()) {
        if (!seen.insert(coloring.at(a)).second) {
            return Check::fail("color " + std::to_string(coloring.at(a)) + " appears twice");
        }
    }
    return Check::pass();
}

// ---------------------------------------------------------------------------
// Colorful search

namespace {

using ColorMask = std::uint64_t;

class BlockSearch {
public:
    BlockSearch(const Tournament& t, const ArcColoring& coloring, int k)
        : t_(t), coloring_(coloring), k_(k), block_size_(2 * k + 1) {}

    std::optional<CyclePacking> run() {
        const int colors = coloring_.colors();
        ColorMask all = colors == 64 ? ~ColorMask{0} : (ColorMask{1} << colors) - 1;
        CyclePacking packing;
        if (split(all, packing)) return packing;
        return std::nullopt;
    }

private:
    // Picks the block containing the lowest remaining color, then recurses.
    bool split(ColorMask remaining, CyclePacking& packing) {
        if (static_cast<int>(packing.size()) == k_) return true;
        const int anchor = __builtin_ctzll(remaining);
        std::vector<int> rest;
        for (ColorMask m = remaining & ~(ColorMask{1} << anchor); m; m &= m - 1) {
            rest.push_back(__builtin_ctzll(m));
        }
        return choose(rest, 0, block_size_ - 1, ColorMask{1} << anchor, remaining, packing);
    }

    bool choose(const std::vector<int>& rest, std::size_t from, int missing, ColorMask block,
                ColorMask remaining, CyclePacking& packing) {
        if (missing == 0) {
            const auto& cycle = block_cycle(block);
            if (!cycle) return false;
            packing.cycles.push_back(*cycle);
            if (split(remaining & ~block, packing)) return true;
            packing.cycles.pop_back();
            return false;
        }
        for (std::size_t i = from; i + static_cast<std::size_t>(missing) <= rest.size(); ++i) {
            if (choose(rest, i + 1, missing - 1, block | (ColorMask{1} << rest[i]), remaining, packing)) {
                return true;
            }
        }
        return false;
    }

    const std::optional<Cycle>& block_cycle(ColorMask block) {
        auto it = memo_.find(block);
        if (it == memo_.end()) it = memo_.emplace(block, shortest_rainbow_cycle(block)).first;
        return it->second;
    }

    bool in_block(ColorMask block, Vertex u, Vertex v) const {
        if (!t_.has_arc(u, v)) return false;
        return (block >> (coloring_.at(u, v) - 1)) & 1U;
    }

    // Shortest cycle using arcs whose colors lie in `block`; nullopt if there
    // is none or if the shortest one repeats a color.
    std::optional<Cycle> shortest_rainbow_cycle(ColorMask block) const {
        const int n = t_.size();
        std::optional<Cycle> best;
        for (Vertex s = 0; s < n; ++s) {
            std::vector<Vertex> parent(n, -1);
            parent[s] = s;
            std::deque<Vertex> queue{s};
            std::optional<Vertex> closer;
            while (!queue.empty() && !closer) {
                const Vertex x = queue.front();
                queue.pop_front();
                for (Vertex y = 0; y < n; ++y) {
                    if (y == x || !in_block(block, x, y)) continue;
                    if (y == s) {
                        closer = x;
                        break;
                    }
                    if (parent[y] != -1) continue;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
            if (!closer) continue;
            std::vector<Vertex> walk{*closer};
            while (walk.back() != s) walk.push_back(parent[walk.back()]);
            Cycle c{std::vector<Vertex>(walk.rbegin(), walk.rend())};
            if (!best || c.size() < best->size()) best = std::move(c);
        }
        if (!best) return std::nullopt;
        ColorMask seen = 0;
        for (const Arc& a : best->arcs()) {
            const ColorMask bit = ColorMask{1} << (coloring_.at(a) - 1);
            if (seen & bit) return std::nullopt;
            seen |= bit;
        }
        return best;
    }

    const Tournament& t_;
    const ArcColoring& coloring_;
    int k_;
    int block_size_;
    std::unordered_map<ColorMask, std::optional<Cycle>> memo_;
};

}  // namespace

std::optional<CyclePacking> colorful_packing_permutation(const Tournament& t, const ArcColoring& coloring,
                                                         int k) {
    if (k < 1) throw InputError("colorful search needs k >= 1");
    if (coloring.colors() != color_count(k)) throw InputError("coloring must use 2k^2+k colors");
    if (coloring.colors() > 64) throw InputError("colorful search supports k <= 5");
    if (coloring.size() != t.size()) throw InputError("coloring belongs to a different tournament");
    BlockSearch search(t, coloring, k);
    auto packing = search.run();
    if (packing) {
        if (auto check = verify_colorful(t, coloring, *packing); !check) {
            throw std::logic_error("colorful search returned a bad family: " + check.detail);
        }
    }
    return packing;
}

std::uint64_t trials_for_delta(int k, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw InputError("delta must lie in (0,1)");
    const double trials = std::ceil(std::exp(static_cast<double>(color_count(k))) * std::log(1.0 / delta));
    if (!(trials < 1.8e19)) return UINT64_MAX;
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(trials));
}

ColorCodingResult solve_color_coding(const Tournament& t, int k, const ColorCodingOptions& options) {
    if (k < 1) throw InputError("solve_color_coding needs k >= 1");
    if (options.trials && options.delta) throw InputError("give either trials or delta, not both");
    if (options.trials && *options.trials == 0) throw InputError("trials must be positive");
    const std::uint64_t trials = options.delta ? trials_for_delta(k, *options.delta) : options.trials.value_or(1);

    ColorCodingResult result;
    if (is_acyclic(t.to_digraph())) {
        result.exact = true;
        return result;
    }

    const auto arcs = t.arcs();
    const int colors = color_count(k);

    // Small instances: every coloring, in mixed-radix order.
    std::uint64_t colorings = 1;
    bool small = true;
    for (std::size_t i = 0; i < arcs.size() && small; ++i) {
        if (colorings > options.exhaustive_limit / static_cast<std::uint64_t>(colors)) small = false;
        colorings *= static_cast<std::uint64_t>(colors);
    }
    if (small && colorings <= options.exhaustive_limit) {
        std::vector<int> digits(arcs.size(), 0);
        for (std::uint64_t c = 0; c < colorings; ++c) {
            ArcColoring coloring(t, colors);
            for (std::size_t i = 0; i < arcs.size(); ++i) coloring.set(arcs[i], digits[i] + 1);
            ++result.trials_used;
            if (auto packing = colorful_packing_permutation(t, coloring, k)) {
                result.packing = std::move(packing);
                result.exact = true;
                return result;
            }
            for (std::size_t i = 0; i < digits.size() && ++digits[i] == colors; ++i) digits[i] = 0;
        }
        // Shortest-cycle rejection can miss packings even here.
        return result;
    }

    for (std::uint64_t i = 0; i < trials; ++i) {
        if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
            throw BudgetExceeded("wall-clock budget exhausted after " + std::to_string(i) + " trials");
        }
        const auto coloring = random_arc_coloring(t, k, derive_seed(options.seed, i));
        ++result.trials_used;
        if (auto packing = colorful_packing_permutation(t, coloring, k)) {
            result.packing = std::move(packing);
            result.exact = true;
            return result;
        }
    }
    return result;
}

}  // namespace tourpack

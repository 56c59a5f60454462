#pragma once

// Reference routines written without the library's algorithms, used to
// cross-check it. Only plain graph accessors are used.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "tourpack/generators.hpp"
#include "tourpack/graph.hpp"

namespace testsupport {

using tourpack::Arc;
using tourpack::Cycle;
using tourpack::CyclePacking;
using tourpack::Digraph;
using tourpack::Tournament;
using tourpack::Vertex;

template <class Graph>
bool packing_ok(const Graph& g, const CyclePacking& p) {
    std::set<std::pair<int, int>> used;
    for (const Cycle& c : p.cycles) {
        const auto& v = c.vertices;
        if (v.size() < 3) return false;
        if (std::set<int>(v.begin(), v.end()).size() != v.size()) return false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const int a = v[i];
            const int b = v[(i + 1) % v.size()];
            if (a < 0 || b < 0 || a >= g.size() || b >= g.size() || !g.has_arc(a, b)) return false;
            if (!used.insert({a, b}).second) return false;
        }
    }
    return true;
}

/// Acyclic iff repeatedly deleting vertices without out-arcs empties the graph.
template <class Graph>
bool acyclic_by_sinks(const Graph& g, const std::set<std::pair<int, int>>& removed = {}) {
    const int n = g.size();
    std::vector<bool> alive(n, true);
    for (int round = 0; round < n; ++round) {
        bool progress = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            bool sink = true;
            for (int w = 0; w < n && sink; ++w) {
                if (alive[w] && w != v && g.has_arc(v, w) && !removed.count({v, w})) sink = false;
            }
            if (sink) {
                alive[v] = false;
                progress = true;
            }
        }
        if (!progress) break;
    }
    return std::none_of(alive.begin(), alive.end(), [](bool b) { return b; });
}

/// Minimum number of back arcs over all n! orderings.
template <class Graph>
int min_fas_by_orderings(const Graph& g) {
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    int best = INT32_MAX;
    do {
        int back = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            for (std::size_t j = i + 1; j < perm.size(); ++j) back += g.has_arc(perm[j], perm[i]);
        }
        best = std::min(best, back);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return g.size() == 0 ? 0 : best;
}

/// Every simple cycle, found by trying each vertex sequence that starts at
/// its minimum vertex.
template <class Graph>
std::vector<std::vector<int>> all_cycles(const Graph& g) {
    const int n = g.size();
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1) vs.push_back(v);
        }
        if (vs.size() < 3) continue;
        std::vector<int> rest(vs.begin() + 1, vs.end());
        do {
            std::vector<int> seq{vs[0]};
            seq.insert(seq.end(), rest.begin(), rest.end());
            bool ok = true;
            for (std::size_t i = 0; i < seq.size() && ok; ++i) ok = g.has_arc(seq[i], seq[(i + 1) % seq.size()]);
            if (ok) out.push_back(seq);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return out;
}

/// Largest number of arc-disjoint cycles, by exhaustive search (tiny n).
inline int packing_number(const Tournament& t, std::size_t max_len = SIZE_MAX) {
    std::vector<std::vector<int>> cycles;
    for (auto& c : all_cycles(t)) {
        if (c.size() <= max_len) cycles.push_back(std::move(c));
    }
    std::vector<std::vector<std::pair<int, int>>> arcs;
    for (const auto& c : cycles) {
        std::vector<std::pair<int, int>> a;
        for (std::size_t i = 0; i < c.size(); ++i) a.emplace_back(c[i], c[(i + 1) % c.size()]);
        arcs.push_back(std::move(a));
    }
    std::set<std::pair<int, int>> used;
    int best = 0;
    const auto go = [&](auto&& self, std::size_t from, int count) -> void {
        best = std::max(best, count);
        for (std::size_t i = from; i < arcs.size(); ++i) {
            bool free = true;
            for (const auto& a : arcs[i]) free = free && !used.count(a);
            if (!free) continue;
            for (const auto& a : arcs[i]) used.insert(a);
            self(self, i + 1, count + 1);
            for (const auto& a : arcs[i]) used.erase(a);
        }
    };
    go(go, 0, 0);
    return best;
}

template <class Graph>
bool has_directed_triangle(const Graph& g) {
    const int n = g.size();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                if (a != b && b != c && a != c && g.has_arc(a, b) && g.has_arc(b, c) && g.has_arc(c, a)) return true;
            }
        }
    }
    return false;
}

/// Random oriented digraph whose adjacencies only join different parts of a
/// random 2..4-partition; retried until it has no directed triangle.
inline Digraph random_triangle_free(int n, tourpack::SplitMix64& rng) {
    for (;;) {
        const int parts = 2 + static_cast<int>(rng.uniform(3));
        std::vector<int> part(n);
        for (int& p : part) p = static_cast<int>(rng.uniform(parts));
        const std::uint64_t density = 40 + rng.uniform(50);
        Digraph d(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (part[u] == part[v] || rng.uniform(100) >= density) continue;
                if (rng.next_bit()) {
                    d.add_arc(u, v);
                } else {
                    d.add_arc(v, u);
                }
            }
        }
        if (!has_directed_triangle(d)) return d;
    }
}

/// Random DAG: arcs only from lower to higher position of a random order.
inline Digraph random_dag(int n, int percent, tourpack::SplitMix64& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.uniform(static_cast<std::uint64_t>(i) + 1)]);
    Digraph d(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (static_cast<int>(rng.uniform(100)) < percent) d.add_arc(order[i], order[j]);
        }
    }
    return d;
}

}  // namespace testsupport

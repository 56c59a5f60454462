#pragma once

#include <variant>
#include <vector>

#include "tourpack/errors.hpp"
#include "tourpack/graph.hpp"

namespace tourpack {

/// Either a cycle packing (the "many disjoint cycles" side) or a feedback arc
/// set certificate (the "small hitting set" side).
using PackingOrFas = std::variant<CyclePacking, FasCertificate>;

/// Raised by fas_triangle_free when its input has a triangle.
class TriangleFound : public InputError {
public:
    explicit TriangleFound(Cycle triangle);
    const Cycle& triangle() const noexcept { return triangle_; }

private:
    Cycle triangle_;
};

/// Number of unordered vertex pairs with no arc in either direction.
struct NonAdjacencyCount {
    long long value = 0;
};

NonAdjacencyCount lambda_count(const Digraph& d);

/// Rewrites a packing of r <= k arc-disjoint cycles into r arc-disjoint cycles
/// of length at most 2k+1. Each step shortcuts the longest cycle through an
/// unused chord, picking the chord with the largest length reduction (ties:
/// smallest endpoint pair). Throws InputError if `packing` does not verify in
/// `t` or has more than k cycles.
CyclePacking shorten_packing(const Tournament& t, const CyclePacking& packing, int k);

/// The vertex chosen at one level of the triangle-free FAS recursion together
/// with its induced 3-path counts.
struct PivotChoice {
    Vertex pivot;
    long long first;   // induced 3-vertex paths starting at pivot
    long long second;  // induced 3-vertex paths with pivot in the middle
};

/// Feedback arc set of size at most lambda_count(d) for a triangle-free
/// oriented digraph, built by the pivot recursion: strip vertices with no
/// in- or out-neighbours, pick a pivot u with first(u) <= second(u), recurse
/// on D[N-(u) + non-neighbours of u] and D[N+(u)], and add every arc from
/// N+(u) into the non-neighbours. `trace`, when given, receives one entry per
/// recursion level. Throws TriangleFound on a triangle.
FasCertificate fas_triangle_free(const Digraph& d, std::vector<PivotChoice>* trace = nullptr);

/// Maximal set of arc-disjoint triangles, scanning vertex triples
/// lexicographically. Each triangle is listed smallest vertex first.
CyclePacking greedy_triangle_packing(const Tournament& t);

/// k arc-disjoint triangles, or a feedback arc set of size at most 6(k-1).
/// The triangle side carries the whole greedy packing (at least k triangles).
PackingOrFas triangles_or_fas(const Tournament& t, int k);

/// k arc-disjoint cycles of length at most 2k+1, or a feedback arc set of
/// size at most (2k+1)(k-1) formed by the arcs of a maximal packing of such
/// cycles.
PackingOrFas packing_or_fas_quadratic(const Tournament& t, int k);

}  // namespace tourpack

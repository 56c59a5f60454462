#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tourpack/graph.hpp"
#include "tourpack/verify.hpp"

namespace tourpack {

/// Vertex sequence s = v0, v1, ..., vq = t; a single vertex is the empty path.
using Path = std::vector<Vertex>;

/// Arc-disjoint paths instance on an acyclic digraph. A pair with s == t is
/// satisfied by the empty path.
struct AdpInstance {
    Digraph dag;
    std::vector<std::pair<Vertex, Vertex>> pairs;
};

/// Throws InputError unless the digraph is acyclic and every terminal is in
/// range.
void validate(const AdpInstance& inst);

/// paths[i] runs from pairs[i].first to pairs[i].second in the dag, and no
/// arc appears in two paths.
Check verify_paths(const AdpInstance& inst, const std::vector<Path>& paths);

/// Exact solver. Arc-disjointness becomes vertex-disjointness on the line
/// digraph (one node per arc plus a private source and sink per pair), which
/// is then decided by the pebble game over tuples of positions: always
/// advance the pebble standing earliest in topological order, never onto an
/// occupied node. Visited tuples are memoized.
std::optional<std::vector<Path>> solve_adp_dag(const AdpInstance& inst);

/// One guessed cycle structure: groups[i] lists the feedback arcs the i-th
/// cycle passes through, in the cyclic order it meets them.
struct BackArcGuess {
    std::vector<std::vector<Arc>> groups;

    std::size_t arc_count() const;
};

/// Throws InputError if a group is empty or an arc repeats.
void validate(const BackArcGuess& guess);

/// For every group and every consecutive pair of its arcs (cyclically),
/// the terminal pair (head of the current arc, tail of the next).
AdpInstance build_adp_instance(const Digraph& dag, const BackArcGuess& guess);

}  // namespace tourpack

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tourpack/graph.hpp"

namespace tourpack {

/// Either a topological order (all arcs forward) or a cycle proving there is
/// none.
using OrderOrCycle = std::variant<std::vector<Vertex>, Cycle>;

/// Kahn's algorithm, always taking the smallest available source, so a
/// transitive tournament yields the identity order. On a cyclic input the
/// witness is found by depth-first search from the smallest leftover vertex.
OrderOrCycle topological_order(const Digraph& d);
OrderOrCycle topological_order(const Tournament& t);

bool is_acyclic(const Digraph& d);

/// Strongly connected component id per vertex; ids follow the order in which
/// Tarjan's algorithm closes components.
std::vector<int> strongly_connected_components(const Digraph& d);

/// Some directed triangle (smallest vertex first), scanning triples
/// lexicographically.
std::optional<Cycle> find_triangle(const Digraph& d);

/// position[v] = index of v in `order`; throws InputError unless `order` is a
/// permutation of 0..n-1.
std::vector<int> order_positions(const std::vector<Vertex>& order, int n);

}  // namespace tourpack

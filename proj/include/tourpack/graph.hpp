#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tourpack {

using Vertex = int;

/// Directed arc tail -> head. (u,v) and (v,u) are distinct arcs.
struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

class Digraph;

/// Orientation of every pair of distinct vertices, stored as a strict upper
/// triangular bit matrix: bit (i,j) with i<j is set iff the arc is i->j.
/// A freshly constructed tournament is transitive (all arcs go from smaller
/// to larger label).
class Tournament {
public:
    Tournament() = default;
    explicit Tournament(int n);

    int size() const noexcept { return n_; }

    bool has_arc(Vertex u, Vertex v) const;
    /// Orients the pair {u,v} as u->v.
    void orient(Vertex u, Vertex v);
    void reverse(Vertex u, Vertex v) { orient(v, u); }

    std::vector<Vertex> out_neighbors(Vertex v) const;
    std::vector<Vertex> in_neighbors(Vertex v) const;
    int out_degree(Vertex v) const;

    /// All n(n-1)/2 arcs in lexicographic (tail, head) order.
    std::vector<Arc> arcs() const;
    Digraph to_digraph() const;

    friend bool operator==(const Tournament&, const Tournament&) = default;

private:
    std::size_t pair_index(Vertex lo, Vertex hi) const;
    void check_pair(Vertex u, Vertex v) const;

    int n_ = 0;
    std::vector<bool> forward_;
};

/// Oriented simple digraph: no loops and never both (u,v) and (v,u).
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    Digraph(int n, std::span<const Arc> arcs);

    int size() const noexcept { return n_; }

    bool has_arc(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }
    /// Throws InputError on loops, out-of-range ids, or when (v,u) is present.
    void add_arc(Vertex u, Vertex v);
    void remove_arc(Vertex u, Vertex v);

    std::vector<Vertex> out_neighbors(Vertex v) const;
    std::vector<Vertex> in_neighbors(Vertex v) const;

    /// Arcs in lexicographic (tail, head) order.
    std::vector<Arc> arcs() const;
    std::size_t arc_count() const noexcept { return arc_count_; }

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::size_t arc_count_ = 0;
    std::vector<std::uint8_t> adj_;
};

/// Sequence (v1,...,vq) of distinct vertices; arcs are consecutive pairs plus
/// the closing arc (vq,v1).
struct Cycle {
    std::vector<Vertex> vertices;

    std::size_t size() const noexcept { return vertices.size(); }
    std::vector<Arc> arcs() const;
    /// Same cycle rotated so its smallest vertex comes first.
    Cycle canonical() const;

    friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

struct CyclePacking {
    std::vector<Cycle> cycles;

    std::size_t size() const noexcept { return cycles.size(); }
    bool empty() const noexcept { return cycles.empty(); }
    std::vector<Arc> arcs() const;

    friend bool operator==(const CyclePacking&, const CyclePacking&) = default;
};

/// Arc set whose removal leaves every remaining arc going forward in `order`.
struct FasCertificate {
    std::vector<Arc> arcs;
    std::vector<Vertex> order;

    std::size_t size() const noexcept { return arcs.size(); }
};

template <class Graph>
struct Induced {
    Graph graph;
    /// origin[i] is the label of new vertex i in the parent graph.
    std::vector<Vertex> origin;
};

/// Subtournament on `vertices` (any order, no duplicates); new labels follow
/// the ascending order of the original labels.
Induced<Tournament> induced_subtournament(const Tournament& t, std::span<const Vertex> vertices);
Induced<Digraph> induced_subgraph(const Digraph& d, std::span<const Vertex> vertices);

/// T minus a set of arcs, as a digraph on the same vertex set.
Digraph remove_arcs(const Tournament& t, std::span<const Arc> arcs);

}  // namespace tourpack

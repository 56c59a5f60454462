#include "tourpack/graph.hpp"

#include <algorithm>
#include <string>

#include "tourpack/errors.hpp"

namespace tourpack {

namespace {

std::vector<Vertex> sorted_unique_subset(std::span<const Vertex> vertices, int n) {
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("vertex set contains duplicates");
    }
    for (Vertex v : sorted) {
        if (v < 0 || v >= n) {
            throw InputError("vertex " + std::to_string(v) + " out of range");
        }
    }
    return sorted;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tournament

Tournament::Tournament(int n) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    forward_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2,
                    true);
}

std::size_t Tournament::pair_index(Vertex lo, Vertex hi) const {
    const auto i = static_cast<std::size_t>(lo);
    const auto n = static_cast<std::size_t>(n_);
    return i * n - i * (i + 1) / 2 + static_cast<std::size_t>(hi - lo - 1);
}

void Tournament::check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw InputError("vertex out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
}

bool Tournament::has_arc(Vertex u, Vertex v) const {
    if (u == v) return false;
    check_pair(u, v);
    return u < v ? forward_[pair_index(u, v)] : !forward_[pair_index(v, u)];
}

void Tournament::orient(Vertex u, Vertex v) {
    check_pair(u, v);
    if (u < v) {
        forward_[pair_index(u, v)] = true;
    } else {
        forward_[pair_index(v, u)] = false;
    }
}

std::vector<Vertex> Tournament::out_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n_; ++u) {
        if (u != v && has_arc(v, u)) out.push_back(u);
    }
    return out;
}

std::vector<Vertex> Tournament::in_neighbors(Vertex v) const {
    std::vector<Vertex> in;
    for (Vertex u = 0; u < n_; ++u) {
        if (u != v && has_arc(u, v)) in.push_back(u);
    }
    return in;
}

int Tournament::out_degree(Vertex v) const {
    int d = 0;
    for (Vertex u = 0; u < n_; ++u) d += (u != v && has_arc(v, u)) ? 1 : 0;
    return d;
}

std::vector<Arc> Tournament::arcs() const {
    std::vector<Arc> out;
    out.reserve(forward_.size());
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = 0; v < n_; ++v) {
            if (u != v && has_arc(u, v)) out.push_back({u, v});
        }
    }
    return out;
}

Digraph Tournament::to_digraph() const {
    const auto a = arcs();
    return Digraph(n_, a);
}

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(int n) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
    for (const Arc& a : arcs) add_arc(a.tail, a.head);
}

void Digraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw InputError("vertex " + std::to_string(v) + " out of range");
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

void Digraph::add_arc(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (has_arc(v, u)) {
        throw InputError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                         ") would make the digraph non-oriented");
    }
    auto& cell = adj_[static_cast<std::size_t>(u) * n_ + v];
    if (!cell) {
        cell = 1;
        ++arc_count_;
    }
}

void Digraph::remove_arc(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    auto& cell = adj_[static_cast<std::size_t>(u) * n_ + v];
    if (cell) {
        cell = 0;
        --arc_count_;
    }
}

std::vector<Vertex> Digraph::out_neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    const std::size_t row = static_cast<std::size_t>(v) * n_;
    for (Vertex u = 0; u < n_; ++u) {
        if (adj_[row + u]) out.push_back(u);
    }
    return out;
}

std::vector<Vertex> Digraph::in_neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> in;
    for (Vertex u = 0; u < n_; ++u) {
        if (adj_[static_cast<std::size_t>(u) * n_ + v]) in.push_back(u);
    }
    return in;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = 0; v < n_; ++v) {
            if (adj_[static_cast<std::size_t>(u) * n_ + v]) out.push_back({u, v});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cycles

std::vector<Arc> Cycle::arcs() const {
    std::vector<Arc> out;
    const std::size_t q = vertices.size();
    out.reserve(q);
    for (std::size_t i = 0; i < q; ++i) out.push_back({vertices[i], vertices[(i + 1) % q]});
    return out;
}

Cycle Cycle::canonical() const {
    Cycle c = *this;
    if (!c.vertices.empty()) {
        auto smallest = std::min_element(c.vertices.begin(), c.vertices.end());
        std::rotate(c.vertices.begin(), smallest, c.vertices.end());
    }
    return c;
}

std::vector<Arc> CyclePacking::arcs() const {
    std::vector<Arc> out;
    for (const Cycle& c : cycles) {
        auto a = c.arcs();
        out.insert(out.end(), a.begin(), a.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Induced structures

Induced<Tournament> induced_subtournament(const Tournament& t, std::span<const Vertex> vertices) {
    auto origin = sorted_unique_subset(vertices, t.size());
    const int m = static_cast<int>(origin.size());
    Tournament sub(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (!t.has_arc(origin[i], origin[j])) sub.orient(j, i);
        }
    }
    return {std::move(sub), std::move(origin)};
}

Induced<Digraph> induced_subgraph(const Digraph& d, std::span<const Vertex> vertices) {
    auto origin = sorted_unique_subset(vertices, d.size());
    const int m = static_cast<int>(origin.size());
    Digraph sub(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i != j && d.has_arc(origin[i], origin[j])) sub.add_arc(i, j);
        }
    }
    return {std::move(sub), std::move(origin)};
}

Digraph remove_arcs(const Tournament& t, std::span<const Arc> arcs) {
    Digraph d = t.to_digraph();
    for (const Arc& a : arcs) {
        if (!t.has_arc(a.tail, a.head)) {
            throw InputError("(" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                             ") is not an arc of the tournament");
        }
        d.remove_arc(a.tail, a.head);
    }
    return d;
}

}  // namespace tourpack

#include "tourpack/order.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "tourpack/errors.hpp"

namespace tourpack {

namespace {

// Iterative DFS over the vertices still marked `alive`; returns the first
// cycle closed by an arc into the current stack.
Cycle find_cycle_among(const Digraph& d, const std::vector<bool>& alive) {
    const int n = d.size();
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::vector<Vertex>> succ(n);
    for (Vertex v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        for (Vertex w : d.out_neighbors(v)) {
            if (alive[w]) succ[v].push_back(w);
        }
    }
    for (Vertex root = 0; root < n; ++root) {
        if (!alive[root] || state[root] != 0) continue;
        std::vector<Vertex> stack{root};
        std::vector<std::size_t> next{0};
        state[root] = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            if (next.back() < succ[v].size()) {
                const Vertex w = succ[v][next.back()++];
                if (state[w] == 1) {
                    auto from = std::find(stack.begin(), stack.end(), w);
                    return Cycle{std::vector<Vertex>(from, stack.end())};
                }
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back(w);
                    next.push_back(0);
                }
            } else {
                state[v] = 2;
                stack.pop_back();
                next.pop_back();
            }
        }
    }
    throw std::logic_error("find_cycle_among: no cycle among leftover vertices");
}

}  // namespace

OrderOrCycle topological_order(const Digraph& d) {
    const int n = d.size();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<Vertex>> succ(n);
    for (const Arc& a : d.arcs()) {
        succ[a.tail].push_back(a.head);
        ++indeg[a.head];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v) {
        if (indeg[v] == 0) ready.push(v);
    }
    std::vector<Vertex> order;
    order.reserve(n);
    while (!ready.empty()) {
        const Vertex v = ready.top();
        ready.pop();
        order.push_back(v);
        for (Vertex w : succ[v]) {
            if (--indeg[w] == 0) ready.push(w);
        }
    }
    if (static_cast<int>(order.size()) == n) return order;

    std::vector<bool> alive(n, true);
    for (Vertex v : order) alive[v] = false;
    return find_cycle_among(d, alive);
}

OrderOrCycle topological_order(const Tournament& t) { return topological_order(t.to_digraph()); }

bool is_acyclic(const Digraph& d) {
    return std::holds_alternative<std::vector<Vertex>>(topological_order(d));
}

std::vector<int> strongly_connected_components(const Digraph& d) {
    const int n = d.size();
    std::vector<std::vector<Vertex>> succ(n);
    for (const Arc& a : d.arcs()) succ[a.tail].push_back(a.head);

    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> tarjan_stack;
    int counter = 0;
    int components = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<std::pair<Vertex, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        tarjan_stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i < succ[v].size()) {
                const Vertex w = succ[v][i++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    tarjan_stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const Vertex done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                Vertex w;
                do {
                    w = tarjan_stack.back();
                    tarjan_stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = components;
                } while (w != done);
                ++components;
            }
        }
    }
    return comp;
}

std::optional<Cycle> find_triangle(const Digraph& d) {
    const int n = d.size();
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            for (Vertex c = b + 1; c < n; ++c) {
                if (d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, a)) return Cycle{{a, b, c}};
                if (d.has_arc(a, c) && d.has_arc(c, b) && d.has_arc(b, a)) return Cycle{{a, c, b}};
            }
        }
    }
    return std::nullopt;
}

std::vector<int> order_positions(const std::vector<Vertex>& order, int n) {
    if (static_cast<int>(order.size()) != n) {
        throw InputError("order has " + std::to_string(order.size()) + " entries, expected " +
                         std::to_string(n));
    }
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        const Vertex v = order[i];
        if (v < 0 || v >= n || pos[v] != -1) throw InputError("order is not a permutation");
        pos[v] = i;
    }
    return pos;
}

}  // namespace tourpack

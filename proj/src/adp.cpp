#include "tourpack/adp.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "tourpack/errors.hpp"
#include "tourpack/order.hpp"

namespace tourpack {

void validate(const AdpInstance& inst) {
    const int n = inst.dag.size();
    for (const auto& [s, t] : inst.pairs) {
        if (s < 0 || s >= n || t < 0 || t >= n) {
            throw InputError("terminal pair (" + std::to_string(s) + "," + std::to_string(t) +
                             ") out of range");
        }
    }
    auto order = topological_order(inst.dag);
    if (auto* cycle = std::get_if<Cycle>(&order)) {
        throw InputError("arc-disjoint paths instance is cyclic: " + to_string(*cycle));
    }
}

Check verify_paths(const AdpInstance& inst, const std::vector<Path>& paths) {
    if (paths.size() != inst.pairs.size()) return Check::fail("path count differs from pair count");
    std::set<Arc> used;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const Path& p = paths[i];
        const auto [s, t] = inst.pairs[i];
        if (p.empty() || p.front() != s || p.back() != t) {
            return Check::fail("path " + std::to_string(i) + " does not join its terminals");
        }
        std::vector<Vertex> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            return Check::fail("path " + std::to_string(i) + " repeats a vertex");
        }
        for (std::size_t j = 0; j + 1 < p.size(); ++j) {
            const Arc a{p[j], p[j + 1]};
            if (a.tail < 0 || a.tail >= inst.dag.size() || a.head < 0 || a.head >= inst.dag.size() ||
                !inst.dag.has_arc(a.tail, a.head)) {
                return Check::fail("path " + std::to_string(i) + " uses missing arc " + to_string(a));
            }
            if (!used.insert(a).second) return Check::fail("arc " + to_string(a) + " used twice");
        }
    }
    return Check::pass();
}

// ---------------------------------------------------------------------------
// Pebble game on the line digraph

namespace {

class PebbleGame {
public:
    explicit PebbleGame(const AdpInstance& inst) : inst_(inst) {
        const int n = inst.dag.size();
        const auto order = std::get<std::vector<Vertex>>(topological_order(inst.dag));
        const auto pos = order_positions(order, n);

        arcs_ = inst.dag.arcs();
        std::sort(arcs_.begin(), arcs_.end(), [&](const Arc& a, const Arc& b) {
            return std::pair{pos[a.tail], pos[a.head]} < std::pair{pos[b.tail], pos[b.head]};
        });
        for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
            if (inst.pairs[i].first != inst.pairs[i].second) active_.push_back(i);
        }

        // Node ids: [0, m) arcs in topological rank order, then one source per
        // active pair, then one sink per active pair. Rank: sources, arcs, sinks.
        const int m = static_cast<int>(arcs_.size());
        const int r = static_cast<int>(active_.size());
        node_count_ = m + 2 * r;
        rank_.resize(node_count_);
        for (int a = 0; a < m; ++a) rank_[a] = r + a;
        for (int j = 0; j < r; ++j) {
            rank_[source(j)] = j;
            rank_[sink(j)] = r + m + j;
        }

        succ_.assign(node_count_, {});
        std::vector<std::vector<int>> arcs_from(n), arcs_into(n);
        for (int a = 0; a < m; ++a) {
            arcs_from[arcs_[a].tail].push_back(a);
            arcs_into[arcs_[a].head].push_back(a);
        }
        for (int a = 0; a < m; ++a) {
            for (int b : arcs_from[arcs_[a].head]) succ_[a].push_back(b);
        }
        for (int j = 0; j < r; ++j) {
            const auto [s, t] = inst.pairs[active_[j]];
            for (int a : arcs_from[s]) succ_[source(j)].push_back(a);
            for (int a : arcs_into[t]) succ_[a].push_back(sink(j));
        }

        // reaches_[j][x]: node x can still reach pebble j's sink.
        reaches_.assign(r, std::vector<bool>(node_count_, false));
        std::vector<std::vector<int>> pred(node_count_);
        for (int x = 0; x < node_count_; ++x) {
            for (int y : succ_[x]) pred[y].push_back(x);
        }
        for (int j = 0; j < r; ++j) {
            std::vector<int> stack{sink(j)};
            reaches_[j][sink(j)] = true;
            while (!stack.empty()) {
                const int y = stack.back();
                stack.pop_back();
                for (int x : pred[y]) {
                    if (!reaches_[j][x]) {
                        reaches_[j][x] = true;
                        stack.push_back(x);
                    }
                }
            }
        }
    }

    std::optional<std::vector<Path>> solve() {
        const int r = static_cast<int>(active_.size());
        positions_.resize(r);
        for (int j = 0; j < r; ++j) {
            if (!reaches_[j][source(j)]) return std::nullopt;
            positions_[j] = source(j);
        }
        occupied_.assign(node_count_, false);
        for (int x : positions_) occupied_[x] = true;
        if (!search()) return std::nullopt;

        std::vector<Path> paths;
        for (const auto& [s, t] : inst_.pairs) paths.push_back(Path{s});
        for (const auto& [j, node] : moves_) {
            if (node < static_cast<int>(arcs_.size())) paths[active_[j]].push_back(arcs_[node].head);
        }
        return paths;
    }

private:
    int source(int j) const { return static_cast<int>(arcs_.size()) + j; }
    int sink(int j) const { return static_cast<int>(arcs_.size() + active_.size()) + j; }

    std::string key() const {
        std::string k;
        k.reserve(positions_.size() * 4);
        for (int x : positions_) {
            for (int b = 0; b < 4; ++b) k.push_back(static_cast<char>((x >> (8 * b)) & 0xFF));
        }
        return k;
    }

    bool search() {
        int mover = -1;
        for (int j = 0; j < static_cast<int>(positions_.size()); ++j) {
            if (positions_[j] == sink(j)) continue;
            if (mover == -1 || rank_[positions_[j]] < rank_[positions_[mover]]) mover = j;
        }
        if (mover == -1) return true;
        if (!seen_.insert(key()).second) return false;

        const int from = positions_[mover];
        for (int to : succ_[from]) {
            if (occupied_[to] || !reaches_[mover][to]) continue;
            if (to >= static_cast<int>(arcs_.size()) && to != sink(mover)) continue;
            occupied_[from] = false;
            occupied_[to] = true;
            positions_[mover] = to;
            moves_.emplace_back(mover, to);
            if (search()) return true;
            moves_.pop_back();
            positions_[mover] = from;
            occupied_[to] = false;
            occupied_[from] = true;
        }
        return false;
    }

    const AdpInstance& inst_;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> active_;
    int node_count_ = 0;
    std::vector<int> rank_;
    std::vector<std::vector<int>> succ_;
    std::vector<std::vector<bool>> reaches_;

    std::vector<int> positions_;
    std::vector<bool> occupied_;
    std::vector<std::pair<int, int>> moves_;
    std::unordered_set<std::string> seen_;
};

}  // namespace

std::optional<std::vector<Path>> solve_adp_dag(const AdpInstance& inst) {
    validate(inst);
    PebbleGame game(inst);
    auto paths = game.solve();
    if (paths) {
        if (auto check = verify_paths(inst, *paths); !check) {
            throw std::logic_error("solve_adp_dag produced invalid paths: " + check.detail);
        }
    }
    return paths;
}

// ---------------------------------------------------------------------------
// Guess to instance

std::size_t BackArcGuess::arc_count() const {
    std::size_t count = 0;
    for (const auto& g : groups) count += g.size();
    return count;
}

void validate(const BackArcGuess& guess) {
    std::set<Arc> seen;
    for (const auto& group : guess.groups) {
        if (group.empty()) throw InputError("guess has an empty group");
        for (const Arc& a : group) {
            if (!seen.insert(a).second) throw InputError("guess repeats arc " + to_string(a));
        }
    }
}

AdpInstance build_adp_instance(const Digraph& dag, const BackArcGuess& guess) {
    validate(guess);
    AdpInstance inst{dag, {}};
    inst.pairs.reserve(guess.arc_count());
    for (const auto& group : guess.groups) {
        for (std::size_t j = 0; j < group.size(); ++j) {
            inst.pairs.emplace_back(group[j].head, group[(j + 1) % group.size()].tail);
        }
    }
    return inst;
}

}  // namespace tourpack

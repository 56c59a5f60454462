#include "tourpack/act.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "tourpack/ep_engine.hpp"
#include "tourpack/errors.hpp"

namespace tourpack {

namespace {

// Cyclic orders of every group, smallest arc first, consecutive arcs joinable.
class OrderEnumerator {
public:
    OrderEnumerator(const std::vector<std::vector<Arc>>& blocks,
                    const std::function<bool(Vertex, Vertex)>& joinable,
                    const std::function<bool(const BackArcGuess&)>& visit)
        : blocks_(blocks), joinable_(joinable), visit_(visit) {
        guess_.groups.resize(blocks.size());
    }

    bool run() { return block(0); }

private:
    bool block(std::size_t b) {
        if (b == blocks_.size()) return visit_(guess_);
        const auto& arcs = blocks_[b];
        auto& seq = guess_.groups[b];
        seq.assign(1, arcs.front());
        std::vector<bool> placed(arcs.size(), false);
        placed[0] = true;
        return extend(b, placed);
    }

    bool extend(std::size_t b, std::vector<bool>& placed) {
        const auto& arcs = blocks_[b];
        auto& seq = guess_.groups[b];
        if (seq.size() == arcs.size()) {
            if (!joinable_(seq.back().head, seq.front().tail)) return false;
            return block(b + 1);
        }
        for (std::size_t i = 1; i < arcs.size(); ++i) {
            if (placed[i] || !joinable_(seq.back().head, arcs[i].tail)) continue;
            placed[i] = true;
            seq.push_back(arcs[i]);
            if (extend(b, placed)) return true;
            seq.pop_back();
            placed[i] = false;
        }
        return false;
    }

    const std::vector<std::vector<Arc>>& blocks_;
    const std::function<bool(Vertex, Vertex)>& joinable_;
    const std::function<bool(const BackArcGuess&)>& visit_;
    BackArcGuess guess_;
};

// Set partitions of `subset` into exactly `groups` blocks, as restricted
// growth strings in lexicographic order.
bool partitions_of(const std::vector<Arc>& subset, int groups,
                   const std::function<bool(Vertex, Vertex)>& joinable,
                   const std::function<bool(const BackArcGuess&)>& visit) {
    const int m = static_cast<int>(subset.size());
    std::vector<int> label(m, 0);
    const auto assign = [&](auto&& self, int i, int used) -> bool {
        if (m - i < groups - used) return false;
        if (i == m) {
            std::vector<std::vector<Arc>> blocks(groups);
            for (int j = 0; j < m; ++j) blocks[label[j]].push_back(subset[j]);
            OrderEnumerator orders(blocks, joinable, visit);
            return orders.run();
        }
        const int top = std::min(used, groups - 1);
        for (int l = 0; l <= top; ++l) {
            label[i] = l;
            if (self(self, i + 1, std::max(used, l + 1))) return true;
        }
        return false;
    };
    return assign(assign, 0, 0);
}

// Hands out subsets of {0..m-1} with at least `min_size` elements, by size
// then lexicographically. Thread-safe.
class SubsetCursor {
public:
    SubsetCursor(int m, int min_size) : m_(m), size_(min_size) {
        if (size_ <= m_) reset_level();
    }

    std::optional<std::vector<int>> next() {
        std::lock_guard lock(mutex_);
        if (size_ > m_) return std::nullopt;
        auto out = current_;
        advance();
        return out;
    }

private:
    void reset_level() {
        current_.resize(size_);
        for (int i = 0; i < size_; ++i) current_[i] = i;
    }

    void advance() {
        int i = size_ - 1;
        while (i >= 0 && current_[i] == m_ - size_ + i) --i;
        if (i < 0) {
            if (++size_ <= m_) reset_level();
            return;
        }
        ++current_[i];
        for (int j = i + 1; j < size_; ++j) current_[j] = current_[j - 1] + 1;
    }

    std::mutex mutex_;
    int m_;
    int size_;
    std::vector<int> current_;
};

std::vector<std::vector<bool>> reachability(const Digraph& d) {
    const int n = d.size();
    std::vector<std::vector<Vertex>> succ(n);
    for (const Arc& a : d.arcs()) succ[a.tail].push_back(a.head);
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> stack{s};
        reach[s][s] = true;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : succ[v]) {
                if (!reach[s][w]) {
                    reach[s][w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return reach;
}

Cycle first_simple_cycle(const std::vector<Vertex>& walk) {
    std::unordered_map<Vertex, std::size_t> seen;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        auto [it, fresh] = seen.emplace(walk[i], i);
        if (!fresh) {
            return Cycle{std::vector<Vertex>(walk.begin() + static_cast<std::ptrdiff_t>(it->second),
                                             walk.begin() + static_cast<std::ptrdiff_t>(i))};
        }
    }
    return Cycle{walk};
}

}  // namespace

bool enumerate_guesses(const std::vector<Arc>& fas, int groups,
                       const std::function<bool(Vertex, Vertex)>& joinable,
                       const std::function<bool(const BackArcGuess&)>& visit) {
    const int m = static_cast<int>(fas.size());
    if (groups < 1 || m < groups) return false;
    SubsetCursor cursor(m, groups);
    while (auto subset = cursor.next()) {
        std::vector<Arc> arcs;
        for (int i : *subset) arcs.push_back(fas[i]);
        if (partitions_of(arcs, groups, joinable, visit)) return true;
    }
    return false;
}

CyclePacking stitch_cycles(const BackArcGuess& guess, const std::vector<Path>& paths) {
    if (paths.size() != guess.arc_count()) throw InputError("one path per guessed arc expected");
    CyclePacking packing;
    std::size_t next_path = 0;
    for (const auto& group : guess.groups) {
        std::vector<Vertex> walk;
        for (const Arc& a : group) {
            const Path& p = paths[next_path++];
            if (p.empty() || p.front() != a.head) throw InputError("path does not start at the arc head");
            walk.push_back(a.tail);
            walk.insert(walk.end(), p.begin(), p.end() - 1);
        }
        packing.cycles.push_back(first_simple_cycle(walk));
    }
    return packing;
}

ActResult solve_act(const Instance& inst, const ActOptions& options) {
    ActResult result;
    if (inst.k <= 0) {
        result.yes = true;
        result.certified_instance = inst;
        return result;
    }

    result.kernel = linear_kernel(inst);
    const auto accept_triangles = [&](const Instance& where, const CyclePacking& triangles) {
        result.yes = true;
        result.certified_instance = where;
        result.certificate.cycles.assign(triangles.cycles.begin(),
                                         triangles.cycles.begin() + std::max(0, where.k));
    };
    if (result.kernel.trivial_yes) {
        if (result.kernel.yes_stage) {
            accept_triangles(*result.kernel.yes_stage, result.kernel.yes_witness);
        } else {
            const Instance sentinel = trivial_yes_instance();
            accept_triangles(sentinel, CyclePacking{{Cycle{{0, 1, 2}}}});
        }
        return result;
    }

    const Instance& kernel = result.kernel.kernel;
    const Tournament& t = kernel.tournament;
    const int k = kernel.k;
    auto split = triangles_or_fas(t, k);
    if (auto* triangles = std::get_if<CyclePacking>(&split)) {
        accept_triangles(kernel, *triangles);
        return result;
    }
    const auto& fas = std::get<FasCertificate>(split).arcs;
    result.fas_size = fas.size();
    result.certified_instance = kernel;
    if (fas.size() < static_cast<std::size_t>(k)) return result;

    const Digraph dag = remove_arcs(t, fas);
    const auto reach = reachability(dag);
    const std::function<bool(Vertex, Vertex)> joinable = [&](Vertex from, Vertex to) { return reach[from][to]; };

    std::mutex found_mutex;
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> tried{0};
    const std::function<bool(const BackArcGuess&)> visit = [&](const BackArcGuess& guess) {
        if (stop.load()) return true;
        tried.fetch_add(1);
        const AdpInstance adp = build_adp_instance(dag, guess);
        auto paths = solve_adp_dag(adp);
        if (!paths) return false;
        CyclePacking packing = stitch_cycles(guess, *paths);
        if (auto check = verify_packing(t, packing); !check || packing.size() != static_cast<std::size_t>(k)) {
            throw std::logic_error("solve_act: stitched cycles failed verification: " + check.detail);
        }
        std::lock_guard lock(found_mutex);
        if (!stop.exchange(true)) {
            result.yes = true;
            result.certificate = std::move(packing);
        }
        return true;
    };

    const int workers = options.deterministic ? 1 : std::max(1, options.jobs);
    if (workers == 1) {
        enumerate_guesses(fas, k, joinable, visit);
    } else {
        SubsetCursor cursor(static_cast<int>(fas.size()), k);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                while (!stop.load()) {
                    auto subset = cursor.next();
                    if (!subset) break;
                    std::vector<Arc> arcs;
                    for (int i : *subset) arcs.push_back(fas[i]);
                    if (partitions_of(arcs, k, joinable, visit)) break;
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    result.guesses_tried = tried.load();
    return result;
}

}  // namespace tourpack

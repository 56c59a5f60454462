#include "tourpack/oracle.hpp"

#include <algorithm>
#include <bitset>
#include <string>

#include "tourpack/errors.hpp"
#include "tourpack/verify.hpp"

namespace tourpack {

WorkBudget::WorkBudget(std::uint64_t max_nodes, std::optional<std::chrono::milliseconds> wall)
    : max_nodes_(max_nodes) {
    if (wall) deadline_ = std::chrono::steady_clock::now() + *wall;
}

void WorkBudget::tick() {
    if (++used_ > max_nodes_) {
        throw BudgetExceeded("work budget of " + std::to_string(max_nodes_) + " nodes exhausted");
    }
    if (deadline_ && (used_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > *deadline_) {
        throw BudgetExceeded("wall-clock budget exhausted");
    }
}

// ---------------------------------------------------------------------------
// Cycle enumeration

namespace {

constexpr std::size_t kMaxStoredCycles = 2'000'000;

template <class Graph>
std::vector<Cycle> cycles_up_to(const Graph& g, int max_len, WorkBudget& budget) {
    if (max_len < 3) throw InputError("enumerate_cycles needs max_len >= 3");
    const int n = g.size();
    std::vector<std::vector<Vertex>> succ(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u != v && g.has_arc(u, v)) succ[u].push_back(v);
        }
    }

    std::vector<Cycle> out;
    std::vector<Vertex> path;
    std::vector<bool> on_path(n, false);
    for (Vertex start = 0; start < n; ++start) {
        // Depth-first over simple paths from `start` through larger labels.
        const auto extend = [&](auto&& self, Vertex v) -> void {
            budget.tick();
            for (Vertex w : succ[v]) {
                if (w == start) {
                    if (path.size() >= 3) out.push_back(Cycle{path});
                    if (out.size() > kMaxStoredCycles) {
                        throw BudgetExceeded("more than " + std::to_string(kMaxStoredCycles) + " cycles");
                    }
                    continue;
                }
                if (w < start || on_path[w] || static_cast<int>(path.size()) >= max_len) continue;
                path.push_back(w);
                on_path[w] = true;
                self(self, w);
                on_path[w] = false;
                path.pop_back();
            }
        };
        path.assign(1, start);
        on_path[start] = true;
        extend(extend, start);
        on_path[start] = false;
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.vertices < b.vertices;
    });
    return out;
}

constexpr int kMaxPackingVertices = 22;
using ArcMask = std::bitset<256>;

std::size_t pair_slot(Vertex u, Vertex v, int n) {
    const auto lo = static_cast<std::size_t>(std::min(u, v));
    const auto hi = static_cast<std::size_t>(std::max(u, v));
    return lo * n - lo * (lo + 1) / 2 + (hi - lo - 1);
}

PackingDecision decide_packing(const Tournament& t, int k, const std::vector<Cycle>& cycles,
                               WorkBudget& budget) {
    PackingDecision decision;
    if (k <= 0) {
        decision.yes = true;
        return decision;
    }
    const int n = t.size();
    std::vector<ArcMask> masks;
    masks.reserve(cycles.size());
    for (const Cycle& c : cycles) {
        ArcMask m;
        for (const Arc& a : c.arcs()) m.set(pair_slot(a.tail, a.head, n));
        masks.push_back(m);
    }
    const std::size_t total_arcs = static_cast<std::size_t>(n) * (n - 1) / 2;

    std::vector<std::size_t> chosen;
    const auto search = [&](auto&& self, std::size_t from, const ArcMask& used) -> bool {
        budget.tick();
        const std::size_t need = static_cast<std::size_t>(k) - chosen.size();
        if (need == 0) return true;
        if ((total_arcs - used.count()) / 3 < need) return false;
        for (std::size_t i = from; i + need <= cycles.size(); ++i) {
            if ((masks[i] & used).any()) continue;
            chosen.push_back(i);
            if (self(self, i + 1, used | masks[i])) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (search(search, 0, ArcMask{})) {
        decision.yes = true;
        for (std::size_t i : chosen) decision.witness.cycles.push_back(cycles[i]);
    }
    return decision;
}

void check_packing_size(const Tournament& t) {
    if (t.size() > kMaxPackingVertices) {
        throw BudgetExceeded("exhaustive packing search supports at most " +
                             std::to_string(kMaxPackingVertices) + " vertices");
    }
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Tournament& t, int max_len, WorkBudget& budget) {
    return cycles_up_to(t, max_len, budget);
}
std::vector<Cycle> enumerate_cycles(const Digraph& d, int max_len, WorkBudget& budget) {
    return cycles_up_to(d, max_len, budget);
}
std::vector<Cycle> enumerate_cycles(const Tournament& t, int max_len) {
    WorkBudget budget;
    return cycles_up_to(t, max_len, budget);
}
std::vector<Cycle> enumerate_cycles(const Digraph& d, int max_len) {
    WorkBudget budget;
    return cycles_up_to(d, max_len, budget);
}

PackingDecision max_packing_bruteforce(const Tournament& t, int k, WorkBudget& budget) {
    check_packing_size(t);
    if (k <= 0) return decide_packing(t, k, {}, budget);
    const int cap = std::max(3, std::min(2 * k + 1, t.size()));
    return decide_packing(t, k, enumerate_cycles(t, cap, budget), budget);
}

PackingDecision max_packing_bruteforce(const Tournament& t, int k) {
    WorkBudget budget;
    return max_packing_bruteforce(t, k, budget);
}

PackingDecision packing_uncapped(const Tournament& t, int k, WorkBudget& budget) {
    check_packing_size(t);
    if (k <= 0) return decide_packing(t, k, {}, budget);
    return decide_packing(t, k, enumerate_cycles(t, std::max(3, t.size()), budget), budget);
}

// ---------------------------------------------------------------------------
// Minimum feedback arc set

FasCertificate min_fas_exact(const Digraph& d) {
    constexpr int kMaxVertices = 20;
    const int n = d.size();
    if (n > kMaxVertices) {
        throw BudgetExceeded("min_fas_exact supports at most " + std::to_string(kMaxVertices) +
                             " vertices");
    }
    std::vector<std::uint32_t> out_mask(n, 0);
    for (const Arc& a : d.arcs()) out_mask[a.tail] |= 1U << a.head;

    // best[S]: fewest back arcs over orderings of S; last[S]: its final vertex.
    const std::uint32_t full = (1U << n) - 1;
    std::vector<std::uint16_t> best(static_cast<std::size_t>(full) + 1, 0);
    std::vector<std::uint8_t> last(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::uint16_t top = UINT16_MAX;
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            const int v = __builtin_ctz(rest);
            const std::uint32_t prefix = s & ~(1U << v);
            const auto cost = static_cast<std::uint16_t>(best[prefix] + __builtin_popcount(out_mask[v] & prefix));
            if (cost < top) {
                top = cost;
                last[s] = static_cast<std::uint8_t>(v);
            }
        }
        best[s] = top;
    }

    FasCertificate cert;
    cert.order.resize(n);
    std::uint32_t s = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        cert.order[pos] = last[s];
        s &= ~(1U << last[s]);
    }
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[cert.order[i]] = i;
    for (const Arc& a : d.arcs()) {
        if (position[a.tail] > position[a.head]) cert.arcs.push_back(a);
    }
    if (n > 0 && cert.arcs.size() != best[full]) {
        throw std::logic_error("min_fas_exact: reconstruction mismatch");
    }
    return cert;
}

FasCertificate min_fas_exact(const Tournament& t) { return min_fas_exact(t.to_digraph()); }

OracleReport oracle_report(const Tournament& t, WorkBudget& budget) {
    OracleReport report;
    for (int k = 1;; ++k) {
        auto decision = max_packing_bruteforce(t, k, budget);
        if (!decision.yes) break;
        report.packing_number = k;
        report.max_packing = std::move(decision.witness);
    }
    report.min_fas_size = static_cast<int>(min_fas_exact(t).size());
    return report;
}

// ---------------------------------------------------------------------------
// Exhaustive arc-disjoint paths

namespace {

class WordMask {
public:
    explicit WordMask(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool intersects(const WordMask& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & o.words_[i]) return true;
        }
        return false;
    }
    void merge(const WordMask& o, bool add) {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] = add ? (words_[i] | o.words_[i]) : (words_[i] & ~o.words_[i]);
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

}  // namespace

std::optional<std::vector<Path>> adp_bruteforce(const AdpInstance& inst, WorkBudget& budget) {
    validate(inst);
    const int n = inst.dag.size();
    const std::size_t bits = static_cast<std::size_t>(n) * n;
    std::vector<std::vector<Vertex>> succ(n);
    for (const Arc& a : inst.dag.arcs()) succ[a.tail].push_back(a.head);

    struct Candidate {
        Path path;
        WordMask arcs;
    };
    std::vector<std::vector<Candidate>> options(inst.pairs.size());
    for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
        const auto [s, t] = inst.pairs[i];
        if (s == t) {
            options[i].push_back({Path{s}, WordMask(bits)});
            continue;
        }
        Path path{s};
        const auto walk = [&](auto&& self, Vertex v) -> void {
            budget.tick();
            if (v == t) {
                Candidate c{path, WordMask(bits)};
                for (std::size_t j = 0; j + 1 < path.size(); ++j) {
                    c.arcs.set(static_cast<std::size_t>(path[j]) * n + path[j + 1]);
                }
                options[i].push_back(std::move(c));
                return;
            }
            for (Vertex w : succ[v]) {
                // Acyclic input: paths are automatically simple.
                path.push_back(w);
                self(self, w);
                path.pop_back();
            }
        };
        walk(walk, s);
        if (options[i].empty()) return std::nullopt;
    }

    std::vector<std::size_t> pick(inst.pairs.size(), 0);
    WordMask used(bits);
    const auto choose = [&](auto&& self, std::size_t i) -> bool {
        budget.tick();
        if (i == inst.pairs.size()) return true;
        for (std::size_t j = 0; j < options[i].size(); ++j) {
            if (options[i][j].arcs.intersects(used)) continue;
            used.merge(options[i][j].arcs, true);
            pick[i] = j;
            if (self(self, i + 1)) return true;
            used.merge(options[i][j].arcs, false);
        }
        return false;
    };
    if (!choose(choose, 0)) return std::nullopt;

    std::vector<Path> paths;
    for (std::size_t i = 0; i < inst.pairs.size(); ++i) paths.push_back(options[i][pick[i]].path);
    return paths;
}

std::optional<std::vector<Path>> adp_bruteforce(const AdpInstance& inst) {
    WorkBudget budget;
    return adp_bruteforce(inst, budget);
}

}  // namespace tourpack

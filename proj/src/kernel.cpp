#include "tourpack/kernel.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

#include "tourpack/ep_engine.hpp"
#include "tourpack/errors.hpp"
#include "tourpack/generators.hpp"
#include "tourpack/io.hpp"
#include "tourpack/order.hpp"

namespace tourpack {

Instance trivial_yes_instance() { return {directed_triangle(), 1}; }

std::string serialize_instance(const Instance& inst) {
    return serialize_tournament(inst.tournament) + "k=" + std::to_string(inst.k) + "\n";
}

Instance parse_instance(std::string_view text) {
    if (text.empty() || text.back() != '\n') throw ParseError(1, 0, "missing trailing newline");
    const std::size_t cut = text.rfind('\n', text.size() - 2);
    if (cut == std::string_view::npos) throw ParseError(1, 0, "missing k=<int> trailer");
    const std::string_view trailer = text.substr(cut + 1, text.size() - cut - 2);
    const auto line = static_cast<std::size_t>(std::count(text.begin(), text.begin() + cut + 1, '\n')) + 1;
    if (trailer.substr(0, 2) != "k=") throw ParseError(line, 1, "expected k=<int>");
    const std::string_view digits = trailer.substr(2);
    int k = 0;
    const bool canonical = !digits.empty() && !(digits.size() > 1 && digits[0] == '0') &&
                           std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; });
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (!canonical || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw ParseError(line, 3, "invalid k");
    }
    return {parse_tournament(text.substr(0, cut + 1)), k};
}

Instance apply_rule1(const Instance& inst) {
    const Digraph d = inst.tournament.to_digraph();
    const auto comp = strongly_connected_components(d);
    std::vector<int> comp_size(d.size(), 0);
    for (int c : comp) ++comp_size[c];
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < d.size(); ++v) {
        if (comp_size[comp[v]] >= 2) keep.push_back(v);
    }
    if (static_cast<int>(keep.size()) == d.size()) return inst;
    return {induced_subtournament(inst.tournament, keep).graph, inst.k};
}

// ---------------------------------------------------------------------------
// Quadratic kernel

namespace {

KernelResult yes_result(std::optional<Instance> stage = std::nullopt, CyclePacking witness = {}) {
    KernelResult r;
    r.kernel = trivial_yes_instance();
    r.trivial_yes = true;
    r.yes_stage = std::move(stage);
    r.yes_witness = std::move(witness);
    return r;
}

}  // namespace

KernelResult quadratic_kernel(const Instance& inst) {
    if (inst.k <= 0) return yes_result();
    const Tournament& t = inst.tournament;
    auto split = triangles_or_fas(t, inst.k);
    if (auto* triangles = std::get_if<CyclePacking>(&split)) return yes_result(inst, std::move(*triangles));
    const auto& fas = std::get<FasCertificate>(split);

    std::vector<bool> in_fvs(t.size(), false);
    for (const Arc& a : fas.arcs) in_fvs[a.tail] = in_fvs[a.head] = true;

    // T - V(F) is transitive; fas.order restricted to it is its topological order.
    std::vector<bool> keep = in_fvs;
    const std::size_t reach = 2 * static_cast<std::size_t>(inst.k) + 1;
    for (Vertex v = 0; v < t.size(); ++v) {
        if (!in_fvs[v]) continue;
        std::size_t taken = 0;
        for (Vertex w : fas.order) {
            if (taken == reach) break;
            if (in_fvs[w] || !t.has_arc(v, w)) continue;
            keep[w] = true;
            ++taken;
        }
    }
    std::vector<Vertex> vertices;
    for (Vertex v = 0; v < t.size(); ++v) {
        if (keep[v]) vertices.push_back(v);
    }
    KernelResult r;
    r.kernel = {induced_subtournament(t, vertices).graph, inst.k};
    return r;
}

// ---------------------------------------------------------------------------
// Safe partitions

std::vector<int> IntervalPartition::interval_of_vertex() const {
    const int n = static_cast<int>(order.size());
    std::vector<int> interval(n, 0);
    std::size_t next_cut = 0;
    int current = 0;
    for (int p = 0; p < n; ++p) {
        while (next_cut < cuts.size() && cuts[next_cut] <= p) {
            ++current;
            ++next_cut;
        }
        interval[order[p]] = current;
    }
    return interval;
}

namespace {

void check_partition(const Tournament& t, const IntervalPartition& partition) {
    order_positions(partition.order, t.size());
    int previous = 0;
    for (int c : partition.cuts) {
        if (c <= previous || c >= t.size()) throw InputError("partition cuts must increase within 1..n-1");
        previous = c;
    }
}

std::vector<Arc> crossing_back_arcs(const Tournament& t, const std::vector<int>& pos,
                                    const std::vector<int>& interval) {
    std::vector<Arc> out;
    for (const Arc& a : t.arcs()) {
        if (pos[a.tail] > pos[a.head] && interval[a.tail] != interval[a.head]) out.push_back(a);
    }
    return out;
}

struct Certification {
    std::optional<Rule2Witness> witness;
    std::optional<Arc> culprit;  // a crossing back arc left without a cycle
};

// Builds one cycle per crossing back arc (u,v): first by searching for
// disjoint triangles v->w->u with w in a third interval, then, failing that,
// greedily closing each back arc with a shortest forward path of unused
// crossing arcs.
class WitnessBuilder {
public:
    WitnessBuilder(const Tournament& t, const std::vector<int>& pos, const std::vector<int>& interval)
        : t_(t), pos_(pos), interval_(interval), n_(t.size()) {}

    Certification run() {
        Certification result;
        const auto back = crossing_back_arcs(t_, pos_, interval_);
        if (back.empty()) {
            result.witness = Rule2Witness{};
            return result;
        }
        if (auto cycles = by_triangles(back)) {
            result.witness = Rule2Witness{back, std::move(*cycles)};
            return result;
        }
        auto greedy = by_paths(back);
        if (std::holds_alternative<CyclePacking>(greedy)) {
            result.witness = Rule2Witness{back, std::get<CyclePacking>(std::move(greedy))};
        } else {
            result.culprit = std::get<Arc>(greedy);
        }
        return result;
    }

private:
    bool crossing_forward(Vertex x, Vertex y) const {
        return interval_[x] != interval_[y] && pos_[x] < pos_[y] && t_.has_arc(x, y);
    }
    std::size_t slot(Vertex x, Vertex y) const { return static_cast<std::size_t>(x) * n_ + y; }

    std::vector<Vertex> middles(const Arc& back) const {
        std::vector<Vertex> out;
        for (Vertex w = 0; w < n_; ++w) {
            if (w == back.tail || w == back.head) continue;
            if (crossing_forward(back.head, w) && crossing_forward(w, back.tail)) out.push_back(w);
        }
        return out;
    }

    std::optional<CyclePacking> by_triangles(const std::vector<Arc>& back) {
        constexpr std::size_t kNodeLimit = 200'000;
        std::vector<std::vector<Vertex>> options(back.size());
        for (std::size_t i = 0; i < back.size(); ++i) {
            options[i] = middles(back[i]);
            if (options[i].empty()) return std::nullopt;
        }
        std::vector<std::size_t> ordering(back.size());
        for (std::size_t i = 0; i < ordering.size(); ++i) ordering[i] = i;
        std::stable_sort(ordering.begin(), ordering.end(),
                         [&](std::size_t a, std::size_t b) { return options[a].size() < options[b].size(); });

        std::vector<std::uint8_t> used(static_cast<std::size_t>(n_) * n_, 0);
        std::vector<Vertex> chosen(back.size(), -1);
        std::size_t nodes = 0;
        const auto assign = [&](auto&& self, std::size_t depth) -> bool {
            if (depth == ordering.size()) return true;
            if (++nodes > kNodeLimit) return false;
            const std::size_t i = ordering[depth];
            const Arc& b = back[i];
            for (Vertex w : options[i]) {
                const std::size_t in = slot(b.head, w);
                const std::size_t out = slot(w, b.tail);
                if (used[in] || used[out]) continue;
                used[in] = used[out] = 1;
                chosen[i] = w;
                if (self(self, depth + 1)) return true;
                used[in] = used[out] = 0;
            }
            return false;
        };
        if (!assign(assign, 0)) return std::nullopt;

        CyclePacking cycles;
        for (std::size_t i = 0; i < back.size(); ++i) {
            cycles.cycles.push_back(Cycle{{back[i].head, chosen[i], back[i].tail}});
        }
        return cycles;
    }

    std::variant<CyclePacking, Arc> by_paths(const std::vector<Arc>& back) {
        std::vector<std::uint8_t> used(static_cast<std::size_t>(n_) * n_, 0);
        std::vector<std::size_t> ordering(back.size());
        for (std::size_t i = 0; i < ordering.size(); ++i) ordering[i] = i;
        std::stable_sort(ordering.begin(), ordering.end(), [&](std::size_t a, std::size_t b) {
            return pos_[back[a].tail] - pos_[back[a].head] < pos_[back[b].tail] - pos_[back[b].head];
        });

        std::vector<Cycle> cycles(back.size());
        for (std::size_t i : ordering) {
            const Arc& b = back[i];
            std::vector<Vertex> parent(n_, -1);
            std::deque<Vertex> queue{b.head};
            parent[b.head] = b.head;
            while (!queue.empty() && parent[b.tail] == -1) {
                const Vertex x = queue.front();
                queue.pop_front();
                for (Vertex y = 0; y < n_; ++y) {
                    if (parent[y] != -1 || !crossing_forward(x, y) || used[slot(x, y)]) continue;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
            if (parent[b.tail] == -1) return b;
            std::vector<Vertex> path{b.tail};
            while (path.back() != b.head) path.push_back(parent[path.back()]);
            std::reverse(path.begin(), path.end());
            for (std::size_t j = 0; j + 1 < path.size(); ++j) used[slot(path[j], path[j + 1])] = 1;
            cycles[i] = Cycle{std::move(path)};
        }
        return CyclePacking{std::move(cycles)};
    }

    const Tournament& t_;
    const std::vector<int>& pos_;
    const std::vector<int>& interval_;
    int n_;
};

}  // namespace

Check verify_rule2_witness(const Tournament& t, const IntervalPartition& partition,
                           const Rule2Witness& witness) {
    try {
        check_partition(t, partition);
    } catch (const InputError& e) {
        return Check::fail(e.what());
    }
    const auto pos = order_positions(partition.order, t.size());
    const auto interval = partition.interval_of_vertex();
    const auto expected = crossing_back_arcs(t, pos, interval);
    if (expected.empty()) return Check::fail("no back arc crosses intervals");

    std::vector<Arc> listed = witness.crossing_back_arcs;
    std::sort(listed.begin(), listed.end());
    if (listed != expected) return Check::fail("listed crossing back arcs differ from the partition's");
    if (witness.certificate_cycles.size() != expected.size()) {
        return Check::fail("need one certificate cycle per crossing back arc");
    }
    if (auto check = verify_packing(t, witness.certificate_cycles); !check) return check;
    for (const Cycle& c : witness.certificate_cycles.cycles) {
        for (const Arc& a : c.arcs()) {
            if (interval[a.tail] == interval[a.head]) {
                return Check::fail("certificate arc " + to_string(a) + " stays inside an interval");
            }
        }
    }
    return Check::pass();
}

std::optional<SafePartition> find_safe_partition(const Tournament& t, const std::vector<Vertex>& order) {
    const int n = t.size();
    const auto pos = order_positions(order, n);
    std::size_t back_count = 0;
    for (const Arc& a : t.arcs()) back_count += pos[a.tail] > pos[a.head] ? 1 : 0;
    if (back_count == 0 || static_cast<std::size_t>(n) < 2 * back_count + 1) return std::nullopt;

    // Start from singleton intervals and sweep: whenever the crossing back
    // arcs cannot all be certified, merge the span of the back arc that failed
    // into one interval and try again.
    std::vector<bool> cut_at(n, true);
    cut_at[0] = false;
    while (true) {
        IntervalPartition partition{order, {}};
        for (int p = 1; p < n; ++p) {
            if (cut_at[p]) partition.cuts.push_back(p);
        }
        const auto interval = partition.interval_of_vertex();
        WitnessBuilder builder(t, pos, interval);
        auto cert = builder.run();
        if (cert.witness) {
            if (cert.witness->crossing_back_arcs.empty()) return std::nullopt;
            SafePartition safe{std::move(partition), std::move(*cert.witness)};
            if (auto check = verify_rule2_witness(t, safe.partition, safe.witness); !check) {
                throw std::logic_error("find_safe_partition: witness failed verification: " + check.detail);
            }
            return safe;
        }
        const Arc culprit = *cert.culprit;
        for (int p = pos[culprit.head] + 1; p <= pos[culprit.tail]; ++p) cut_at[p] = false;
    }
}

Instance apply_rule2(const Instance& inst, const IntervalPartition& partition, const Rule2Witness& witness) {
    if (auto check = verify_rule2_witness(inst.tournament, partition, witness); !check) {
        throw InputError("rule 2 witness rejected: " + check.detail);
    }
    Instance out = inst;
    for (const Arc& a : witness.crossing_back_arcs) out.tournament.reverse(a.tail, a.head);
    out.k -= static_cast<int>(witness.crossing_back_arcs.size());
    return out;
}

// ---------------------------------------------------------------------------
// Linear kernel

KernelResult linear_kernel(const Instance& inst) {
    Instance current = inst;
    int applications = 0;
    while (true) {
        current = apply_rule1(current);
        if (current.k <= 0) {
            auto r = yes_result();
            r.rule2_applications = applications;
            return r;
        }
        auto split = triangles_or_fas(current.tournament, current.k);
        if (auto* triangles = std::get_if<CyclePacking>(&split)) {
            auto r = yes_result(current, std::move(*triangles));
            r.rule2_applications = applications;
            return r;
        }
        const auto& fas = std::get<FasCertificate>(split);
        if (current.tournament.size() >= 12 * current.k - 11) {
            auto safe = find_safe_partition(current.tournament, fas.order);
            if (!safe) {
                auto r = quadratic_kernel(current);
                r.fallback = true;
                r.rule2_applications = applications;
                return r;
            }
            current = apply_rule2(current, safe->partition, safe->witness);
            ++applications;
            continue;
        }
        KernelResult r;
        r.kernel = std::move(current);
        r.rule2_applications = applications;
        return r;
    }
}

}  // namespace tourpack

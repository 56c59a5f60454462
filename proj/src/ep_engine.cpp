#include "tourpack/ep_engine.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "tourpack/order.hpp"
#include "tourpack/verify.hpp"

namespace tourpack {

TriangleFound::TriangleFound(Cycle triangle)
    : InputError("digraph contains triangle " + to_string(triangle)), triangle_(std::move(triangle)) {}

NonAdjacencyCount lambda_count(const Digraph& d) {
    long long count = 0;
    for (Vertex u = 0; u < d.size(); ++u) {
        for (Vertex v = u + 1; v < d.size(); ++v) count += d.adjacent(u, v) ? 0 : 1;
    }
    return {count};
}

// ---------------------------------------------------------------------------
// Cycle shortening

namespace {

class ArcUse {
public:
    explicit ArcUse(int n) : n_(n), used_(static_cast<std::size_t>(n) * n, 0) {}

    bool test(const Arc& a) const { return used_[index(a)] != 0; }
    void set(const Arc& a, bool on) { used_[index(a)] = on ? 1 : 0; }
    void set(const Cycle& c, bool on) {
        for (const Arc& a : c.arcs()) set(a, on);
    }

private:
    std::size_t index(const Arc& a) const { return static_cast<std::size_t>(a.tail) * n_ + a.head; }

    int n_;
    std::vector<std::uint8_t> used_;
};

struct Shortcut {
    Arc chord;
    std::size_t reduction = 0;
    Cycle result;
};

bool better(const Shortcut& a, const Shortcut& b) {
    if (a.reduction != b.reduction) return a.reduction > b.reduction;
    const auto key = [](const Arc& x) {
        return std::pair{std::min(x.tail, x.head), std::max(x.tail, x.head)};
    };
    return key(a.chord) < key(b.chord);
}

std::optional<Shortcut> best_shortcut(const Tournament& t, const Cycle& c, const ArcUse& used) {
    const auto& v = c.vertices;
    const std::size_t q = v.size();
    std::optional<Shortcut> best;
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = i + 2; j < q; ++j) {
            if (i == 0 && j == q - 1) continue;  // cyclically consecutive
            Shortcut s;
            if (t.has_arc(v[i], v[j])) {
                // v_i -> v_j skips v_{i+1..j-1}.
                s.chord = {v[i], v[j]};
                s.reduction = j - i - 1;
                s.result.vertices.push_back(v[i]);
                for (std::size_t p = j; p < q; ++p) s.result.vertices.push_back(v[p]);
                for (std::size_t p = 0; p < i; ++p) s.result.vertices.push_back(v[p]);
            } else {
                // v_j -> v_i closes the segment v_i..v_j.
                s.chord = {v[j], v[i]};
                s.reduction = q - (j - i + 1);
                s.result.vertices.assign(v.begin() + static_cast<std::ptrdiff_t>(i),
                                         v.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            }
            if (used.test(s.chord)) continue;
            if (!best || better(s, *best)) best = std::move(s);
        }
    }
    return best;
}

}  // namespace

CyclePacking shorten_packing(const Tournament& t, const CyclePacking& packing, int k) {
    if (k < 1) throw InputError("shorten_packing needs k >= 1");
    if (packing.size() > static_cast<std::size_t>(k)) {
        throw InputError("packing has more than k cycles");
    }
    if (auto check = verify_packing(t, packing); !check) {
        throw InputError("packing does not verify: " + check.detail);
    }

    const std::size_t limit = 2 * static_cast<std::size_t>(k) + 1;
    CyclePacking out = packing;
    ArcUse used(t.size());
    for (const Cycle& c : out.cycles) used.set(c, true);

    while (true) {
        auto longest = std::max_element(out.cycles.begin(), out.cycles.end(),
                                        [](const Cycle& a, const Cycle& b) { return a.size() < b.size(); });
        if (longest == out.cycles.end() || longest->size() <= limit) break;

        // A cycle longer than 2k+1 has more chords than the other r-1 <= k-1
        // cycles (each no longer than it) can occupy.
        auto shortcut = best_shortcut(t, *longest, used);
        if (!shortcut) throw std::logic_error("shorten_packing: no free chord on an overlong cycle");

        used.set(*longest, false);
        *longest = std::move(shortcut->result);
        used.set(*longest, true);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Triangle-free feedback arc sets

namespace {

class PivotRecursion {
public:
    PivotRecursion(const Digraph& d, std::vector<PivotChoice>* trace)
        : d_(d), trace_(trace), member_(d.size(), 0) {}

    void run(std::vector<Vertex> part) {
        strip_sources_and_sinks(part);
        if (part.empty()) return;

        std::optional<PivotChoice> choice;
        for (Vertex v : part) {
            const auto [first, second] = path_counts(v, part);
            if (first <= second) {
                choice = PivotChoice{v, first, second};
                break;
            }
        }
        if (!choice) {
            throw std::logic_error("fas_triangle_free: no vertex with first <= second");
        }
        if (trace_) trace_->push_back(*choice);

        const Vertex u = choice->pivot;
        std::vector<Vertex> low;   // in-neighbours and non-neighbours of u (including u)
        std::vector<Vertex> high;  // out-neighbours of u
        for (Vertex v : part) {
            if (v != u && d_.has_arc(u, v)) {
                high.push_back(v);
            } else {
                low.push_back(v);
            }
        }
        for (Vertex x : high) {
            for (Vertex y : part) {
                if (y != u && !d_.adjacent(u, y) && d_.has_arc(x, y)) fas_.push_back({x, y});
            }
        }
        run(std::move(low));
        run(std::move(high));
    }

    std::vector<Arc> take() { return std::move(fas_); }

private:
    void strip_sources_and_sinks(std::vector<Vertex>& part) {
        bool changed = true;
        while (changed && !part.empty()) {
            changed = false;
            for (Vertex v : part) member_[v] = 1;
            std::vector<Vertex> keep;
            for (Vertex v : part) {
                bool has_in = false;
                bool has_out = false;
                for (Vertex w : part) {
                    if (!member_[w] || w == v) continue;
                    has_out = has_out || d_.has_arc(v, w);
                    has_in = has_in || d_.has_arc(w, v);
                }
                if (has_in && has_out) {
                    keep.push_back(v);
                } else {
                    member_[v] = 0;
                    changed = true;
                }
            }
            for (Vertex v : part) member_[v] = 0;
            part = std::move(keep);
        }
    }

    std::pair<long long, long long> path_counts(Vertex v, const std::vector<Vertex>& part) const {
        long long first = 0;
        long long second = 0;
        for (Vertex x : part) {
            if (x == v) continue;
            if (d_.has_arc(v, x)) {
                for (Vertex y : part) {
                    if (y != v && y != x && d_.has_arc(x, y) && !d_.adjacent(v, y)) ++first;
                }
            } else if (d_.has_arc(x, v)) {
                for (Vertex y : part) {
                    if (y != v && y != x && d_.has_arc(v, y) && !d_.adjacent(x, y)) ++second;
                }
            }
        }
        return {first, second};
    }

    const Digraph& d_;
    std::vector<PivotChoice>* trace_;
    std::vector<std::uint8_t> member_;
    std::vector<Arc> fas_;
};

}  // namespace

FasCertificate fas_triangle_free(const Digraph& d, std::vector<PivotChoice>* trace) {
    if (auto triangle = find_triangle(d)) throw TriangleFound(std::move(*triangle));

    std::vector<Vertex> all(d.size());
    for (Vertex v = 0; v < d.size(); ++v) all[v] = v;
    PivotRecursion recursion(d, trace);
    recursion.run(std::move(all));
    auto arcs = recursion.take();

    auto result = verify_fas(d, arcs);
    if (auto* cycle = std::get_if<Cycle>(&result)) {
        throw std::logic_error("fas_triangle_free: cycle " + to_string(*cycle) + " survived");
    }
    return std::get<FasCertificate>(std::move(result));
}

// ---------------------------------------------------------------------------
// Triangles or FAS

CyclePacking greedy_triangle_packing(const Tournament& t) {
    const int n = t.size();
    ArcUse used(n);
    CyclePacking packing;
    const auto try_take = [&](Vertex a, Vertex b, Vertex c) {
        const Cycle tri{{a, b, c}};
        for (const Arc& arc : tri.arcs()) {
            if (used.test(arc)) return;
        }
        used.set(tri, true);
        packing.cycles.push_back(tri);
    };
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            for (Vertex c = b + 1; c < n; ++c) {
                if (t.has_arc(a, b) && t.has_arc(b, c) && t.has_arc(c, a)) {
                    try_take(a, b, c);
                } else if (t.has_arc(a, c) && t.has_arc(c, b) && t.has_arc(b, a)) {
                    try_take(a, c, b);
                }
            }
        }
    }
    return packing;
}

PackingOrFas triangles_or_fas(const Tournament& t, int k) {
    if (k < 1) throw InputError("triangles_or_fas needs k >= 1");
    CyclePacking triangles = greedy_triangle_packing(t);
    if (triangles.size() >= static_cast<std::size_t>(k)) return triangles;

    const auto packed = triangles.arcs();
    const Digraph residue = remove_arcs(t, packed);
    FasCertificate residue_fas = fas_triangle_free(residue);

    std::vector<Arc> fas = residue_fas.arcs;
    fas.insert(fas.end(), packed.begin(), packed.end());
    auto result = verify_fas(t, fas);
    if (!std::holds_alternative<FasCertificate>(result)) {
        throw std::logic_error("triangles_or_fas: union is not a feedback arc set");
    }
    auto cert = std::get<FasCertificate>(std::move(result));
    if (cert.size() > 6 * static_cast<std::size_t>(k - 1)) {
        throw std::logic_error("triangles_or_fas: feedback arc set exceeds 6(k-1)");
    }
    return cert;
}

PackingOrFas packing_or_fas_quadratic(const Tournament& t, int k) {
    if (k < 1) throw InputError("packing_or_fas_quadratic needs k >= 1");
    CyclePacking packing;
    while (true) {
        const Digraph residue = remove_arcs(t, packing.arcs());
        auto order = topological_order(residue);
        if (auto* cycle = std::get_if<Cycle>(&order)) {
            packing.cycles.push_back(*cycle);
            // Shortening swaps arcs, so maximality is re-checked on the new residue.
            packing = shorten_packing(t, packing, k);
            if (packing.size() >= static_cast<std::size_t>(k)) return packing;
            continue;
        }
        std::vector<Arc> fas = packing.arcs();
        auto result = verify_fas(t, fas);
        auto cert = std::get<FasCertificate>(std::move(result));
        const std::size_t bound = (2 * static_cast<std::size_t>(k) + 1) * static_cast<std::size_t>(k - 1);
        if (cert.size() > bound) {
            throw std::logic_error("packing_or_fas_quadratic: feedback arc set exceeds (2k+1)(k-1)");
        }
        return cert;
    }
}

}  // namespace tourpack

#include "tourpack/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tourpack/errors.hpp"
#include "tourpack/order.hpp"

namespace tourpack {

namespace {

template <class Graph>
bool in_range(const Graph& g, Vertex v) {
    return v >= 0 && v < g.size();
}

template <class Graph>
Check cycle_check(const Graph& g, const Cycle& c) {
    if (c.size() < 3) return Check::fail("cycle " + to_string(c) + " has fewer than 3 vertices");
    std::vector<Vertex> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return Check::fail("cycle " + to_string(c) + " repeats a vertex");
    }
    for (Vertex v : c.vertices) {
        if (!in_range(g, v)) return Check::fail("cycle " + to_string(c) + " has out-of-range vertex");
    }
    for (const Arc& a : c.arcs()) {
        if (!g.has_arc(a.tail, a.head)) {
            return Check::fail("cycle " + to_string(c) + " uses missing arc " + to_string(a));
        }
    }
    return Check::pass();
}

template <class Graph>
Check packing_check(const Graph& g, const CyclePacking& p) {
    std::set<Arc> used;
    for (std::size_t i = 0; i < p.cycles.size(); ++i) {
        if (auto c = cycle_check(g, p.cycles[i]); !c) return c;
        for (const Arc& a : p.cycles[i].arcs()) {
            if (!used.insert(a).second) {
                return Check::fail("arc " + to_string(a) + " is used twice (cycle " + std::to_string(i) +
                                   ")");
            }
        }
    }
    return Check::pass();
}

template <class Graph>
std::variant<FasCertificate, Cycle> fas_check(const Graph& g, std::span<const Arc> fas) {
    Digraph rest(g.size());
    for (Vertex u = 0; u < g.size(); ++u) {
        for (Vertex v = 0; v < g.size(); ++v) {
            if (u != v && g.has_arc(u, v)) rest.add_arc(u, v);
        }
    }
    for (const Arc& a : fas) {
        if (!in_range(g, a.tail) || !in_range(g, a.head) || a.tail == a.head ||
            !g.has_arc(a.tail, a.head)) {
            throw InputError("feedback arc set contains non-arc " + to_string(a));
        }
        rest.remove_arc(a.tail, a.head);
    }
    auto result = topological_order(rest);
    if (auto* cycle = std::get_if<Cycle>(&result)) return *cycle;
    FasCertificate cert;
    cert.arcs.assign(fas.begin(), fas.end());
    std::sort(cert.arcs.begin(), cert.arcs.end());
    cert.arcs.erase(std::unique(cert.arcs.begin(), cert.arcs.end()), cert.arcs.end());
    cert.order = std::move(std::get<std::vector<Vertex>>(result));
    return cert;
}

template <class Graph>
Check certificate_check(const Graph& g, const FasCertificate& cert) {
    std::vector<int> pos;
    try {
        pos = order_positions(cert.order, g.size());
    } catch (const InputError& e) {
        return Check::fail(e.what());
    }
    std::set<Arc> removed(cert.arcs.begin(), cert.arcs.end());
    for (const Arc& a : cert.arcs) {
        if (!in_range(g, a.tail) || !in_range(g, a.head) || a.tail == a.head ||
            !g.has_arc(a.tail, a.head)) {
            return Check::fail("certificate lists non-arc " + to_string(a));
        }
    }
    for (Vertex u = 0; u < g.size(); ++u) {
        for (Vertex v = 0; v < g.size(); ++v) {
            if (u == v || !g.has_arc(u, v) || removed.count({u, v})) continue;
            if (pos[u] > pos[v]) return Check::fail("arc " + to_string({u, v}) + " goes backward");
        }
    }
    return Check::pass();
}

}  // namespace

Check verify_cycle(const Tournament& t, const Cycle& c) { return cycle_check(t, c); }
Check verify_cycle(const Digraph& d, const Cycle& c) { return cycle_check(d, c); }

Check verify_packing(const Tournament& t, const CyclePacking& p) { return packing_check(t, p); }
Check verify_packing(const Digraph& d, const CyclePacking& p) { return packing_check(d, p); }

std::variant<FasCertificate, Cycle> verify_fas(const Tournament& t, std::span<const Arc> fas) {
    return fas_check(t, fas);
}
std::variant<FasCertificate, Cycle> verify_fas(const Digraph& d, std::span<const Arc> fas) {
    return fas_check(d, fas);
}

Check check_fas_certificate(const Tournament& t, const FasCertificate& cert) {
    return certificate_check(t, cert);
}
Check check_fas_certificate(const Digraph& d, const FasCertificate& cert) {
    return certificate_check(d, cert);
}

std::string to_string(const Arc& a) {
    return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

std::string to_string(const Cycle& c) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < c.vertices.size(); ++i) out << (i ? "," : "") << c.vertices[i];
    out << ')';
    return out.str();
}

}  // namespace tourpack

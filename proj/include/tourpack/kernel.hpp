#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tourpack/graph.hpp"
#include "tourpack/verify.hpp"

namespace tourpack {

/// "Does `tournament` contain k arc-disjoint cycles?" Instances with k <= 0
/// are trivially yes.
struct Instance {
    Tournament tournament;
    int k = 0;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// The smallest verifiable yes-instance: the directed triangle with k = 1.
Instance trivial_yes_instance();

/// Tournament text followed by a "k=<int>" line.
std::string serialize_instance(const Instance& inst);
Instance parse_instance(std::string_view text);

/// Keeps only vertices lying on some cycle, i.e. in a strongly connected
/// component with at least two vertices. Idempotent.
Instance apply_rule1(const Instance& inst);

struct KernelResult {
    Instance kernel;
    /// kernel is trivial_yes_instance(): k reached zero or k triangles were found.
    bool trivial_yes = false;
    /// When k triangles triggered trivial_yes: the instance they were found
    /// in and the triangles themselves.
    std::optional<Instance> yes_stage;
    CyclePacking yes_witness;
    /// Linear mode could not certify a safe partition and returned the
    /// quadratic kernel of the current instance instead.
    bool fallback = false;
    int rule2_applications = 0;
};

/// Keeps the vertices of a feedback arc set of size <= 6(k-1) plus, for each
/// of them, its first 2k+1 out-neighbours in the topological order of the
/// acyclic remainder. At most 12k + 12k(2k+1) vertices.
KernelResult quadratic_kernel(const Instance& inst);

/// Consecutive intervals of an ordered vertex sequence. `cuts` holds the
/// strictly increasing positions (1..n-1) at which a new interval starts.
struct IntervalPartition {
    std::vector<Vertex> order;
    std::vector<int> cuts;

    std::size_t interval_count() const { return order.empty() ? 0 : cuts.size() + 1; }
    /// interval index of every vertex
    std::vector<int> interval_of_vertex() const;
};

/// The back arcs that cross intervals and as many arc-disjoint cycles made
/// only of crossing arcs.
struct Rule2Witness {
    std::vector<Arc> crossing_back_arcs;
    CyclePacking certificate_cycles;
};

struct SafePartition {
    IntervalPartition partition;
    Rule2Witness witness;
};

/// Checks the witness against the tournament and partition: the crossing
/// back arcs are exactly those listed (and there is at least one), and the
/// certificate cycles verify, are arc-disjoint, number as many as the
/// crossing back arcs, and use crossing arcs only.
Check verify_rule2_witness(const Tournament& t, const IntervalPartition& partition,
                           const Rule2Witness& witness);

/// Starts from singleton intervals and, while the crossing back arcs cannot
/// be certified by disjoint cycles of crossing arcs (triangles first, then
/// forward paths closing each back arc), merges the span of the first back
/// arc that failed. Returns nullopt when
/// n < 2|B|+1, when there are no back arcs, or when no certified partition
/// with a crossing back arc is found.
std::optional<SafePartition> find_safe_partition(const Tournament& t, const std::vector<Vertex>& order);

/// Reverses the crossing back arcs and lowers k by their number. Throws
/// InputError when the witness does not verify.
Instance apply_rule2(const Instance& inst, const IntervalPartition& partition, const Rule2Witness& witness);

/// Rule 1, then the triangles-or-FAS dichotomy, then Rule 2 along the FAS
/// order while the tournament has at least 12k-11 vertices; repeats until
/// neither rule applies. Without fallback the result has at most 12k vertices.
KernelResult linear_kernel(const Instance& inst);

}  // namespace tourpack

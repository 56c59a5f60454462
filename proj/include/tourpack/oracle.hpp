#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "tourpack/adp.hpp"
#include "tourpack/graph.hpp"

namespace tourpack {

/// Work limit for exhaustive searches: a node count and an optional wall
/// clock deadline. Exceeding either throws BudgetExceeded.
class WorkBudget {
public:
    WorkBudget() = default;
    explicit WorkBudget(std::uint64_t max_nodes,
                        std::optional<std::chrono::milliseconds> wall = std::nullopt);

    void tick();
    std::uint64_t used() const noexcept { return used_; }

private:
    std::uint64_t max_nodes_ = 200'000'000;
    std::uint64_t used_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

/// All simple cycles of length <= max_len, each once, smallest vertex first,
/// sorted by (length, vertex sequence). Search nodes are charged to the
/// budget, and more than two million cycles count as exhausting it.
std::vector<Cycle> enumerate_cycles(const Tournament& t, int max_len, WorkBudget& budget);
std::vector<Cycle> enumerate_cycles(const Digraph& d, int max_len, WorkBudget& budget);
std::vector<Cycle> enumerate_cycles(const Tournament& t, int max_len);
std::vector<Cycle> enumerate_cycles(const Digraph& d, int max_len);

struct PackingDecision {
    bool yes = false;
    CyclePacking witness;  // k cycles when yes
};

/// Exact decision for "k arc-disjoint cycles?" by branch and bound over the
/// cycles of length <= 2k+1. Supports n <= 22.
PackingDecision max_packing_bruteforce(const Tournament& t, int k, WorkBudget& budget);
PackingDecision max_packing_bruteforce(const Tournament& t, int k);

/// Same decision over cycles of every length. Used to audit the length cap.
PackingDecision packing_uncapped(const Tournament& t, int k, WorkBudget& budget);

/// Minimum feedback arc set by dynamic programming over vertex subsets
/// (cheapest ordering of each prefix set). Supports n <= 20.
FasCertificate min_fas_exact(const Digraph& d);
FasCertificate min_fas_exact(const Tournament& t);

struct OracleReport {
    CyclePacking max_packing;
    int packing_number = 0;
    int min_fas_size = 0;
};

OracleReport oracle_report(const Tournament& t, WorkBudget& budget);

/// Exhaustive arc-disjoint paths: lists every simple path per pair and
/// backtracks over arc-disjoint selections.
std::optional<std::vector<Path>> adp_bruteforce(const AdpInstance& inst, WorkBudget& budget);
std::optional<std::vector<Path>> adp_bruteforce(const AdpInstance& inst);

}  // namespace tourpack

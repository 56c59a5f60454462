#pragma once

#include <cstdint>
#include <functional>

#include "tourpack/adp.hpp"
#include "tourpack/kernel.hpp"

namespace tourpack {

struct ActOptions {
    /// Deterministic mode reports the first successful guess in enumeration
    /// order. Otherwise up to `jobs` workers race over guesses and the first
    /// verified success wins.
    bool deterministic = true;
    int jobs = 1;
};

struct ActResult {
    bool yes = false;
    /// The instance `certificate` lives in: the kernel, or the intermediate
    /// instance in which k triangles were found.
    Instance certified_instance;
    /// certified_instance.k arc-disjoint cycles of certified_instance when yes.
    CyclePacking certificate;
    KernelResult kernel;
    std::size_t fas_size = 0;
    std::uint64_t guesses_tried = 0;
};

/// Calls `visit` for every guess over `fas` with exactly `groups` nonempty
/// groups: growing subsets, then set partitions in restricted-growth order,
/// then cyclic orders of each group with its smallest arc first. Orders
/// whose consecutive arcs cannot be joined (per `joinable(head, tail)`) are
/// skipped. Stops early when `visit` returns true; returns that result.
bool enumerate_guesses(const std::vector<Arc>& fas, int groups,
                       const std::function<bool(Vertex, Vertex)>& joinable,
                       const std::function<bool(const BackArcGuess&)>& visit);

/// Closes each group of the guess with its paths (paths are listed in the
/// order of build_adp_instance's pairs) and extracts a simple cycle from every
/// resulting closed walk.
CyclePacking stitch_cycles(const BackArcGuess& guess, const std::vector<Path>& paths);

/// Exact decision for "k arc-disjoint cycles?".
ActResult solve_act(const Instance& inst, const ActOptions& options = {});

}  // namespace tourpack

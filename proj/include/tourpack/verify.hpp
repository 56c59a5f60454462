#pragma once

#include <span>
#include <string>
#include <variant>

#include "tourpack/graph.hpp"

namespace tourpack {

/// Outcome of a certificate check; `detail` explains a failure.
struct Check {
    bool ok = true;
    std::string detail;

    explicit operator bool() const noexcept { return ok; }
    static Check pass() { return {}; }
    static Check fail(std::string why) { return {false, std::move(why)}; }
};

Check verify_cycle(const Tournament& t, const Cycle& c);
Check verify_cycle(const Digraph& d, const Cycle& c);

/// Every cycle exists in the host graph and no ordered arc is used twice.
Check verify_packing(const Tournament& t, const CyclePacking& p);
Check verify_packing(const Digraph& d, const CyclePacking& p);

/// A certificate with the witnessing order, or a cycle surviving the removal
/// of `fas`. Throws InputError if `fas` contains a non-arc.
std::variant<FasCertificate, Cycle> verify_fas(const Tournament& t, std::span<const Arc> fas);
std::variant<FasCertificate, Cycle> verify_fas(const Digraph& d, std::span<const Arc> fas);

/// Replays `cert.order` and checks every arc outside `cert.arcs` is forward.
Check check_fas_certificate(const Tournament& t, const FasCertificate& cert);
Check check_fas_certificate(const Digraph& d, const FasCertificate& cert);

std::string to_string(const Arc& a);
std::string to_string(const Cycle& c);

}  // namespace tourpack

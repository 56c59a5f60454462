#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "tourpack/graph.hpp"

namespace tourpack::bench {

enum class Family { random, transitive, rotational };

Family parse_family(std::string_view name);
std::string to_string(Family family);
Tournament generate(Family family, int n, std::uint64_t seed);

/// "1-5,8,10-12" -> 1 2 3 4 5 8 10 11 12. Throws InputError on junk.
std::vector<long long> parse_range_list(std::string_view text);

/// Instances: family x sizes x seeds, each run for every k in ks.
struct CorpusSpec {
    Family family = Family::random;
    std::vector<int> sizes;
    std::vector<std::uint64_t> seeds;
    std::vector<int> ks;
};

struct CorpusInstance {
    std::string id;
    int n = 0;
    std::uint64_t seed = 0;
    Tournament tournament;
};

/// Expands the spec in (size, seed) order; invalid members of a family
/// (even n for rotational) are skipped. Seeds are ignored for the
/// deterministic families, which yield one instance per size.
std::vector<CorpusInstance> expand(const CorpusSpec& spec);

/// One solve or kernelize run. Empty optionals print as empty CSV cells.
struct ExperimentRow {
    std::string instance;
    int n = 0;
    int k = 0;
    std::optional<std::uint64_t> seed;
    std::string algorithm;
    std::string verdict;  // yes | no | resource-limit
    std::optional<std::size_t> certificate_size;
    std::optional<std::size_t> kernel_size;
    std::optional<bool> fallback;
    std::optional<double> wall_ms;
    std::optional<std::uint64_t> trials;
};

std::string experiment_header();
std::string to_csv(const ExperimentRow& row);

/// One triangles-or-FAS audit of a corpus instance.
struct AuditRow {
    std::string instance;
    int n = 0;
    std::uint64_t seed = 0;
    int k = 0;
    std::string branch;  // triangles | fas
    std::size_t size = 0;  // triangles returned, or FAS arcs
    std::size_t bound = 0;  // 6(k-1) on the FAS side, k on the triangle side
    bool verified = false;
    std::optional<int> min_fas;  // exact optimum when n <= 20
    std::optional<double> wall_ms;
};

std::string audit_header();
std::string to_csv(const AuditRow& row);

/// Runs and certifies triangles_or_fas on every corpus instance and k.
/// Rows are ordered by corpus position then k, whatever `jobs` is.
std::vector<AuditRow> run_epaudit(const CorpusSpec& spec, int jobs, bool timing);

struct OracleRow {
    std::string instance;
    int n = 0;
    std::optional<std::uint64_t> seed;
    std::string verdict;  // ok | resource-limit
    int packing_number = 0;
    int min_fas_size = 0;
    std::string max_packing;  // cycles joined by ';', vertices by ' '
};

std::string oracle_header();
std::string to_csv(const OracleRow& row);

OracleRow run_oracle(const std::string& id, const Tournament& t, std::optional<std::uint64_t> seed,
                     std::uint64_t max_nodes, std::optional<long long> budget_ms);

/// Evaluates fn(0..count-1) on up to `jobs` threads; results keep index order.
template <class Result>
std::vector<Result> parallel_map(std::size_t count, int jobs, const std::function<Result(std::size_t)>& fn) {
    std::vector<Result> out(count);
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(count, jobs < 1 ? 1 : jobs));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace tourpack::bench

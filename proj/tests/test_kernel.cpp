#include <doctest.h>

#include "support.hpp"
#include "tourpack/ep_engine.hpp"
#include "tourpack/errors.hpp"
#include "tourpack/generators.hpp"
#include "tourpack/io.hpp"
#include "tourpack/kernel.hpp"
#include "tourpack/oracle.hpp"
#include "tourpack/order.hpp"

using namespace tourpack;

namespace {

bool oracle_yes(const Instance& inst) {
    if (inst.k <= 0) return true;
    return max_packing_bruteforce(inst.tournament, inst.k).yes;
}

bool kernel_yes(const KernelResult& r) { return r.trivial_yes || oracle_yes(r.kernel); }

// Transitive order with the listed arcs pointing backwards.
Tournament with_back_arcs(int n, const std::vector<Arc>& back) {
    Tournament t = transitive_tournament(n);
    for (const Arc& a : back) t.orient(a.tail, a.head);
    return t;
}

std::vector<Vertex> identity(int n) {
    std::vector<Vertex> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

TEST_CASE("instance files round trip") {
    const Instance inst{random_tournament(7, 2), 3};
    const std::string text = serialize_instance(inst);
    CHECK(text.substr(text.size() - 4) == "k=3\n");
    CHECK(parse_instance(text) == inst);
    CHECK_THROWS_AS(parse_instance(serialize_tournament(inst.tournament)), ParseError);
    CHECK_THROWS_AS(parse_instance(serialize_tournament(inst.tournament) + "k=x\n"), ParseError);
    CHECK(trivial_yes_instance() == Instance{directed_triangle(), 1});
}

TEST_CASE("rule 1 examples") {
    const Instance empty = apply_rule1({transitive_tournament(6), 1});
    CHECK(empty.tournament.size() == 0);
    CHECK(empty.k == 1);
    CHECK(apply_rule1({directed_triangle(), 1}) == Instance{directed_triangle(), 1});

    Tournament sinked(4);
    sinked.orient(2, 0);
    CHECK(apply_rule1({sinked, 2}) == Instance{directed_triangle(), 2});
}

TEST_CASE("rule 1 is idempotent and keeps only cycle vertices") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Instance inst{random_tournament(3 + static_cast<int>(seed % 10), seed), 2};
        const Instance once = apply_rule1(inst);
        CHECK(apply_rule1(once) == once);
        const auto comps = strongly_connected_components(once.tournament.to_digraph());
        for (int v = 0; v < once.tournament.size(); ++v) {
            CHECK(std::count(comps.begin(), comps.end(), comps[v]) >= 2);
        }
    }
}

TEST_CASE("quadratic kernel examples") {
    const KernelResult yes = quadratic_kernel({rotational_tournament(7), 2});
    CHECK(yes.trivial_yes);
    CHECK(yes.kernel == trivial_yes_instance());
    REQUIRE(yes.yes_stage);
    CHECK(verify_packing(yes.yes_stage->tournament, yes.yes_witness).ok);
    CHECK(yes.yes_witness.size() >= 2);

    const KernelResult no = quadratic_kernel({transitive_tournament(100), 2});
    CHECK_FALSE(no.trivial_yes);
    CHECK(no.kernel.tournament.size() == 0);
    CHECK_FALSE(kernel_yes(no));

    CHECK(quadratic_kernel({random_tournament(5, 1), 0}).trivial_yes);
}

TEST_CASE("kernels preserve answers on every tournament with n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t code = 0; code < codes; ++code) {
            const Tournament t = tournament_from_code(n, code);
            for (int k = 1; k <= 2; ++k) {
                const Instance inst{t, k};
                const bool truth = oracle_yes(inst);
                const KernelResult q = quadratic_kernel(inst);
                const KernelResult l = linear_kernel(inst);
                if (kernel_yes(q) != truth || kernel_yes(l) != truth) {
                    FAIL("answer changed at n=" << n << " code=" << code << " k=" << k);
                }
                CHECK(q.kernel.tournament.size() <= 12 * k + 12 * k * (2 * k + 1));
                if (!l.fallback) CHECK(l.kernel.tournament.size() <= 12 * k);
            }
        }
    }
}

TEST_CASE("find_safe_partition preconditions") {
    // Two back arcs on four vertices: 4 < 2*2+1.
    const Tournament small = with_back_arcs(4, {{2, 0}, {3, 1}});
    CHECK_FALSE(find_safe_partition(small, identity(4)));
    CHECK_FALSE(find_safe_partition(transitive_tournament(9), identity(9)));
}

TEST_CASE("a single long back arc is certified") {
    for (int n = 3; n <= 15; ++n) {
        for (int v = 0; v + 2 < n; ++v) {
            for (int u = v + 2; u < n; ++u) {
                const Tournament t = with_back_arcs(n, {{u, v}});
                const auto safe = find_safe_partition(t, identity(n));
                REQUIRE(safe);
                CHECK(verify_rule2_witness(t, safe->partition, safe->witness).ok);
                REQUIRE(safe->witness.crossing_back_arcs.size() == 1);
                CHECK(safe->witness.crossing_back_arcs[0] == Arc{u, v});
                const auto where = safe->partition.interval_of_vertex();
                CHECK(where[u] != where[v]);
            }
        }
    }
}

TEST_CASE("rule 2 on a transitive tournament with one reversed arc") {
    const Tournament t = with_back_arcs(13, {{10, 2}});
    const auto safe = find_safe_partition(t, identity(13));
    REQUIRE(safe);
    const Instance before{t, 3};
    const Instance after = apply_rule2(before, safe->partition, safe->witness);
    CHECK(after.k == 2);
    CHECK(after.tournament == transitive_tournament(13));
    // No back arc crosses intervals afterwards.
    const auto where = safe->partition.interval_of_vertex();
    for (const Arc& a : after.tournament.arcs()) {
        if (a.tail > a.head) CHECK(where[a.tail] == where[a.head]);
    }

    Rule2Witness forged = safe->witness;
    forged.certificate_cycles.cycles.clear();
    CHECK_THROWS_AS(apply_rule2(before, safe->partition, forged), InputError);
    Rule2Witness wrong = safe->witness;
    wrong.crossing_back_arcs.push_back({12, 0});
    CHECK_THROWS_AS(apply_rule2(before, safe->partition, wrong), InputError);
}

TEST_CASE("rule 2 preserves answers on small instances") {
    int applied = 0;
    for (int n = 3; n <= 6; ++n) {
        const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t code = 0; code < codes; ++code) {
            const Tournament t = tournament_from_code(n, code);
            const auto order = min_fas_exact(t).order;
            const auto safe = find_safe_partition(t, order);
            if (!safe) continue;
            ++applied;
            for (int k = 1; k <= 3; ++k) {
                const Instance before{t, k};
                const Instance after = apply_rule2(before, safe->partition, safe->witness);
                CHECK(after.k == k - static_cast<int>(safe->witness.crossing_back_arcs.size()));
                CHECK(oracle_yes(before) == oracle_yes(after));
            }
        }
    }
    CHECK(applied > 0);
    MESSAGE("rule 2 applied on " << applied << " small tournaments");
}

TEST_CASE("linear kernel shrinks sparse back-arc instances") {
    int fallbacks = 0;
    int runs = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        SplitMix64 rng(seed);
        const int n = 20 + static_cast<int>(rng.uniform(40));
        std::vector<Arc> back;
        const int count = 1 + static_cast<int>(rng.uniform(5));
        for (int i = 0; i < count; ++i) {
            const int a = static_cast<int>(rng.uniform(n));
            const int b = static_cast<int>(rng.uniform(n));
            if (a > b + 1) back.push_back({a, b});
        }
        const Tournament t = with_back_arcs(n, back);
        for (int k = 1; k <= 4; ++k) {
            const KernelResult r = linear_kernel({t, k});
            ++runs;
            if (r.trivial_yes) {
                CHECK(r.kernel == trivial_yes_instance());
                continue;
            }
            fallbacks += r.fallback;
            if (!r.fallback) CHECK(r.kernel.tournament.size() <= 12 * r.kernel.k);
            CHECK(r.kernel.k <= k);
            CHECK(r.kernel.k >= 1);
            CHECK(r.kernel.tournament.size() <= 12 * k + 12 * k * (2 * k + 1));
        }
    }
    MESSAGE("linear kernel fallbacks: " << fallbacks << " of " << runs);
}

TEST_CASE("linear kernel sentinel when triangles abound") {
    const KernelResult r = linear_kernel({rotational_tournament(21), 5});
    CHECK(r.trivial_yes);
    CHECK(r.kernel == trivial_yes_instance());
    REQUIRE(r.yes_stage);
    CHECK(r.yes_witness.size() >= static_cast<std::size_t>(r.yes_stage->k));
    CHECK(verify_packing(r.yes_stage->tournament, r.yes_witness).ok);
}

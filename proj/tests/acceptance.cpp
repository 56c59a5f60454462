// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance <path-to-tourpack-cli>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "support.hpp"
#include "tourpack/act.hpp"
#include "tourpack/adp.hpp"
#include "tourpack/bench.hpp"
#include "tourpack/colorcode.hpp"
#include "tourpack/ep_engine.hpp"
#include "tourpack/generators.hpp"
#include "tourpack/io.hpp"
#include "tourpack/kernel.hpp"
#include "tourpack/oracle.hpp"
#include "tourpack/verify.hpp"

using namespace tourpack;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned thresholds.
constexpr int kAuditMinSize = 5;
constexpr int kAuditMaxSize = 40;
constexpr int kAuditSeeds = 28;  // 36 sizes x 28 seeds = 1008 tournaments
constexpr int kAuditMaxK = 5;
constexpr double kAuditSeconds = 30.0;
constexpr int kTriangleFreeCount = 250;
constexpr int kTriangleFreeMaxN = 15;
constexpr int kShortenCount = 250;
constexpr int kSampleSix = 600;
constexpr std::uint64_t kColorTrials = 50;
constexpr double kSolverSeconds = 300.0;
constexpr int kDagCount = 1000;
constexpr int kDagMaxN = 8;
constexpr int kDagMaxPairs = 3;
constexpr int kPerfInstances = 10;
constexpr double kPerfSeconds = 60.0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Tournament> small_corpus() {
    std::vector<Tournament> out;
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t code = 0; code < codes; ++code) out.push_back(tournament_from_code(n, code));
    }
    for (int i = 0; i < kSampleSix; ++i) out.push_back(random_tournament(6, derive_seed(606, i)));
    return out;
}

bool oracle_yes(const Tournament& t, int k) { return k <= 0 || max_packing_bruteforce(t, k).yes; }

Outcome criterion_minmax() {
    const auto start = Clock::now();
    bench::CorpusSpec spec;
    spec.family = bench::Family::random;
    for (int n = kAuditMinSize; n <= kAuditMaxSize; ++n) spec.sizes.push_back(n);
    for (int s = 1; s <= kAuditSeeds; ++s) spec.seeds.push_back(static_cast<std::uint64_t>(s));
    for (int k = 1; k <= kAuditMaxK; ++k) spec.ks.push_back(k);
    const auto rows = bench::run_epaudit(spec, 1, false);
    const double secs = seconds_since(start);

    std::size_t bad = 0;
    std::size_t fas_rows = 0;
    std::size_t over_bound = 0;
    double worst_ratio = 0;
    for (const auto& r : rows) {
        bad += !r.verified;
        if (r.branch == "fas") {
            ++fas_rows;
            over_bound += r.size > static_cast<std::size_t>(6 * (r.k - 1));
            if (r.min_fas && *r.min_fas > 0) worst_ratio = std::max(worst_ratio, double(r.size) / *r.min_fas);
        }
    }
    const std::size_t instances = rows.size() / kAuditMaxK;
    std::ostringstream os;
    os << instances << " tournaments, " << rows.size() << " rows, " << fas_rows << " FAS rows, " << bad
       << " unverified, " << over_bound << " over 6(k-1), worst FAS/min-FAS " << worst_ratio << ", " << secs << " s";
    return {instances >= 1000 && bad == 0 && over_bound == 0 && secs < kAuditSeconds, os.str()};
}

Outcome criterion_triangle_free() {
    SplitMix64 rng(4242);
    int violations = 0;
    long long slack = 0;
    for (int i = 0; i < kTriangleFreeCount; ++i) {
        const int n = 2 + static_cast<int>(rng.uniform(kTriangleFreeMaxN - 1));
        const Digraph d = testsupport::random_triangle_free(n, rng);
        const auto f = fas_triangle_free(d);
        const long long lambda = lambda_count(d).value;
        const std::size_t best = min_fas_exact(d).size();
        const bool ok = check_fas_certificate(d, f).ok && static_cast<long long>(f.size()) <= lambda &&
                        f.size() >= best;
        violations += !ok;
        slack += lambda - static_cast<long long>(f.size());
    }
    std::ostringstream os;
    os << kTriangleFreeCount << " triangle-free digraphs (n <= " << kTriangleFreeMaxN << "), " << violations
       << " violations, mean Lambda - |F| = " << double(slack) / kTriangleFreeCount;
    return {violations == 0, os.str()};
}

// Exhaustive search for k disjoint cycles trying longest cycles first, so
// the packing handed to the shortener is as long as the oracle can make it.
std::optional<CyclePacking> long_packing(const Tournament& t, int k) {
    auto cycles = enumerate_cycles(t, t.size());
    std::reverse(cycles.begin(), cycles.end());
    std::vector<std::vector<Arc>> arcs;
    for (const auto& c : cycles) arcs.push_back(c.arcs());
    std::set<Arc> used;
    CyclePacking chosen;
    std::uint64_t nodes = 0;
    const auto search = [&](auto&& self, std::size_t from) -> bool {
        if (++nodes > 2'000'000) return false;
        if (static_cast<int>(chosen.size()) == k) return true;
        for (std::size_t i = from; i < cycles.size(); ++i) {
            bool free = true;
            for (const Arc& a : arcs[i]) free = free && !used.count(a);
            if (!free) continue;
            for (const Arc& a : arcs[i]) used.insert(a);
            chosen.cycles.push_back(cycles[i]);
            if (self(self, i + 1)) return true;
            chosen.cycles.pop_back();
            for (const Arc& a : arcs[i]) used.erase(a);
        }
        return false;
    };
    if (search(search, 0)) return chosen;
    return std::nullopt;
}

Outcome criterion_shortening() {
    int instances = 0;
    int violations = 0;
    int needed_work = 0;
    for (std::uint64_t seed = 0; instances < kShortenCount && seed < 100000; ++seed) {
        SplitMix64 rng(seed);
        const int n = 6 + static_cast<int>(rng.uniform(4));
        const int k = 1 + static_cast<int>(rng.uniform(3));
        const Tournament t = random_tournament(n, derive_seed(77, seed));
        if (!max_packing_bruteforce(t, k).yes) continue;
        const auto packing = long_packing(t, k);
        if (!packing) continue;
        ++instances;
        bool long_input = false;
        for (const auto& c : packing->cycles) long_input = long_input || c.size() > static_cast<std::size_t>(2 * k + 1);
        needed_work += long_input;
        const auto out = shorten_packing(t, *packing, k);
        bool ok = out.size() == packing->size() && verify_packing(t, out).ok && testsupport::packing_ok(t, out);
        for (const auto& c : out.cycles) ok = ok && c.size() <= static_cast<std::size_t>(2 * k + 1);
        violations += !ok;
    }
    std::ostringstream os;
    os << instances << " yes-instances (" << needed_work << " with a cycle longer than 2k+1), " << violations
       << " violations";
    return {instances >= 200 && violations == 0, os.str()};
}

Outcome criterion_solvers() {
    const auto start = Clock::now();
    const auto corpus = small_corpus();
    int act_mismatch = 0;
    int color_false_yes = 0;
    int yes_total = 0;
    int color_found = 0;
    int checked = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Tournament& t = corpus[i];
        for (int k = 1; k <= 2; ++k) {
            ++checked;
            const bool truth = oracle_yes(t, k);
            const auto act = solve_act({t, k});
            bool act_ok = act.yes == truth;
            if (act.yes) {
                act_ok = act_ok && verify_packing(act.certified_instance.tournament, act.certificate).ok &&
                         act.certificate.size() == static_cast<std::size_t>(act.certified_instance.k);
            }
            act_mismatch += !act_ok;

            ColorCodingOptions opts;
            opts.trials = kColorTrials;
            opts.seed = derive_seed(9, i);
            const auto cc = solve_color_coding(t, k, opts);
            if (cc.packing) {
                color_false_yes += !truth || !verify_packing(t, *cc.packing).ok;
            }
            if (truth) {
                ++yes_total;
                color_found += cc.packing.has_value();
            }
        }
    }
    const double secs = seconds_since(start);
    std::ostringstream os;
    os << checked << " (tournament, k) pairs, solve_act mismatches " << act_mismatch << ", color-coding false yes "
       << color_false_yes << ", color-coding recall " << color_found << "/" << yes_total << " at " << kColorTrials
       << " trials, " << secs << " s";
    return {act_mismatch == 0 && color_false_yes == 0 && secs < kSolverSeconds, os.str()};
}

Outcome criterion_kernels() {
    const auto corpus = small_corpus();
    int wrong = 0;
    int too_big = 0;
    int fallbacks = 0;
    int cases = 0;
    for (const Tournament& t : corpus) {
        for (int k = 1; k <= 2; ++k) {
            ++cases;
            const bool truth = oracle_yes(t, k);
            const KernelResult q = quadratic_kernel({t, k});
            const KernelResult l = linear_kernel({t, k});
            const bool qy = q.trivial_yes || oracle_yes(q.kernel.tournament, q.kernel.k);
            const bool ly = l.trivial_yes || oracle_yes(l.kernel.tournament, l.kernel.k);
            wrong += (qy != truth) + (ly != truth);
            fallbacks += l.fallback;
            too_big += q.kernel.tournament.size() > 12 * k + 12 * k * (2 * k + 1);
            if (!l.fallback && !l.trivial_yes) too_big += l.kernel.tournament.size() > 12 * k;
        }
    }
    std::ostringstream os;
    os << cases << " instances, " << wrong << " verdict changes, " << too_big << " size-bound violations, "
       << fallbacks << " linear fallbacks";
    return {wrong == 0 && too_big == 0, os.str()};
}

Outcome criterion_adp() {
    SplitMix64 rng(8080);
    int disagree = 0;
    int yes = 0;
    for (int i = 0; i < kDagCount; ++i) {
        const int n = 1 + static_cast<int>(rng.uniform(kDagMaxN));
        const Digraph d = testsupport::random_dag(n, 20 + static_cast<int>(rng.uniform(70)), rng);
        AdpInstance inst{d, {}};
        const int pairs = 1 + static_cast<int>(rng.uniform(kDagMaxPairs));
        for (int p = 0; p < pairs; ++p) {
            inst.pairs.emplace_back(static_cast<Vertex>(rng.uniform(n)), static_cast<Vertex>(rng.uniform(n)));
        }
        const auto fast = solve_adp_dag(inst);
        const auto slow = adp_bruteforce(inst);
        bool ok = fast.has_value() == slow.has_value();
        if (fast) ok = ok && verify_paths(inst, *fast).ok;
        if (slow) ok = ok && verify_paths(inst, *slow).ok;
        disagree += !ok;
        yes += fast.has_value();
    }
    std::ostringstream os;
    os << kDagCount << " DAGs (n <= " << kDagMaxN << ", <= " << kDagMaxPairs << " pairs, " << yes
       << " solvable), " << disagree << " disagreements";
    return {disagree == 0, os.str()};
}

int run_cli(const std::string& cli, const std::string& args, const fs::path& out) {
    const std::string cmd = cli + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion_determinism(const std::string& cli) {
    if (cli.empty()) return {false, "no CLI path given"};
    const fs::path root = fs::temp_directory_path() / ("tourpack-accept-" + std::to_string(::getpid()));
    fs::remove_all(root);
    const auto session = [&](const fs::path& dir) {
        fs::create_directories(dir);
        const auto f = [&](const char* name) { return (dir / name).string(); };
        std::vector<int> codes;
        codes.push_back(run_cli(cli, "--seed 7 gen --n 25 --out " + f("t25.txt"), dir / "gen.log"));
        codes.push_back(run_cli(cli, "--seed 7 gen --n 8 --out " + f("t8.txt"), dir / "gen8.log"));
        write_file(dir / "sparse.txt", [] {
            Tournament t = transitive_tournament(30);
            t.orient(20, 3);
            t.orient(25, 9);
            t.orient(14, 1);
            return serialize_tournament(t);
        }());
        codes.push_back(run_cli(cli, "--jobs 4 solve --input " + f("t25.txt") + " --k 3 --algo adp --deterministic " +
                                         "--emit-certificate " + f("adp.cert"),
                                dir / "solve-adp.csv"));
        codes.push_back(run_cli(cli, "solve --input " + f("sparse.txt") + " --k 3 --algo adp " +
                                         "--emit-certificate " + f("sparse.cert"),
                                dir / "solve-sparse.csv"));
        codes.push_back(run_cli(cli, "--seed 3 solve --input " + f("t8.txt") + " --k 2 --algo colorcode " +
                                         "--trials 200 --emit-certificate " + f("cc.cert"),
                                dir / "solve-cc.csv"));
        codes.push_back(run_cli(cli, "solve --input " + f("t8.txt") + " --k 3 --algo oracle --emit-certificate " +
                                         f("oracle.cert"),
                                dir / "solve-oracle.csv"));
        codes.push_back(run_cli(cli, "kernelize --input " + f("sparse.txt") + " --k 2 --mode linear --kernel-out " +
                                         f("lin.kernel"),
                                dir / "kernel-linear.csv"));
        codes.push_back(run_cli(cli, "kernelize --input " + f("sparse.txt") + " --k 2 --mode quadratic " +
                                         "--kernel-out " + f("quad.kernel"),
                                dir / "kernel-quadratic.csv"));
        codes.push_back(run_cli(cli, "--jobs 4 epaudit --sizes 5-20 --seeds 1-5 --k 1-5 --out " + f("audit.csv"),
                                dir / "audit.log"));
        codes.push_back(run_cli(cli, "--jobs 4 oracle --sizes 6-8 --seeds 1-3 --out " + f("oracle.csv"),
                                dir / "oracle.log"));
        return codes;
    };
    const auto a = session(root / "run1");
    const auto b = session(root / "run2");

    std::size_t files = 0;
    std::vector<std::string> differ;
    for (const auto& entry : fs::directory_iterator(root / "run1")) {
        ++files;
        const fs::path other = root / "run2" / entry.path().filename();
        if (!fs::exists(other) || read_file(entry.path()) != read_file(other)) {
            differ.push_back(entry.path().filename().string());
        }
    }
    std::size_t other_files = 0;
    for ([[maybe_unused]] const auto& entry : fs::directory_iterator(root / "run2")) ++other_files;
    const bool produced = fs::exists(root / "run1" / "adp.cert") && fs::exists(root / "run1" / "audit.csv") &&
                          fs::exists(root / "run1" / "oracle.csv");
    bool codes_ok = a == b;
    for (int c : a) codes_ok = codes_ok && (c == 0 || c == 1);

    std::ostringstream os;
    os << files << " files per run, " << differ.size() << " differ";
    for (const auto& name : differ) os << " " << name;
    if (!codes_ok) os << ", unexpected exit codes";
    fs::remove_all(root);
    return {produced && codes_ok && differ.empty() && files == other_files, os.str()};
}

Outcome criterion_performance() {
    double worst = 0;
    int yes = 0;
    bool all_ok = true;
    for (int i = 0; i < kPerfInstances; ++i) {
        const Tournament t = random_tournament(40, derive_seed(4040, i));
        const auto start = Clock::now();
        const auto r = solve_act({t, 3});
        const double secs = seconds_since(start);
        worst = std::max(worst, secs);
        yes += r.yes;
        if (r.yes) all_ok = all_ok && verify_packing(r.certified_instance.tournament, r.certificate).ok;
        all_ok = all_ok && secs < kPerfSeconds;
    }
    std::ostringstream os;
    os << kPerfInstances << " random n=40, k=3 instances (" << yes << " yes), slowest " << worst << " s";
    return {all_ok, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 min-max audit", criterion_minmax},
        {"2 triangle-free FAS bound", criterion_triangle_free},
        {"3 cycle shortening", criterion_shortening},
        {"4 solver equivalence", criterion_solvers},
        {"5 kernel safety", criterion_kernels},
        {"6 ADP correctness", criterion_adp},
        {"7 determinism", [&] { return criterion_determinism(cli); }},
        {"8 performance smoke", criterion_performance},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << std::endl;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << (8 - failed) << "/8" << std::endl;
    return failed ? 1 : 0;
}

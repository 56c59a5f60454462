#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "tourpack/act.hpp"
#include "tourpack/bench.hpp"
#include "tourpack/colorcode.hpp"
#include "tourpack/errors.hpp"
#include "tourpack/io.hpp"
#include "tourpack/kernel.hpp"
#include "tourpack/oracle.hpp"
#include "tourpack/verify.hpp"

namespace {

using namespace tourpack;
namespace fs = std::filesystem;

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kResource = 3 };

struct Globals {
    std::uint64_t seed = 0;
    int jobs = 1;
    std::optional<long long> budget_ms;
    std::string format = "csv";
    bool timing = false;
};

void emit(const std::optional<std::string>& out, const std::string& text) {
    if (out) {
        write_file(*out, text);
    } else {
        std::cout << text << std::flush;
    }
}

std::string instance_id(const std::string& path) { return fs::path(path).stem().string(); }

std::vector<int> to_ints(const std::string& list) {
    std::vector<int> out;
    for (long long v : bench::parse_range_list(list)) out.push_back(static_cast<int>(v));
    return out;
}

std::vector<std::uint64_t> to_seeds(const std::string& list) {
    std::vector<std::uint64_t> out;
    for (long long v : bench::parse_range_list(list)) {
        if (v < 0) throw InputError("seeds must be non-negative");
        out.push_back(static_cast<std::uint64_t>(v));
    }
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string family = "random";
    int n = 0;
    std::optional<std::string> out;
};

int cmd_gen(const Globals& g, const GenArgs& a) {
    emit(a.out, serialize_tournament(bench::generate(bench::parse_family(a.family), a.n, g.seed)));
    return kYes;
}

struct SolveArgs {
    std::string input;
    int k = 0;
    std::string algo = "adp";
    bool deterministic = false;
    std::optional<std::string> certificate;
    std::optional<std::uint64_t> trials;
    std::optional<double> delta;
    bool allow_large_k = false;
    std::uint64_t max_nodes = 200'000'000;
    std::optional<std::string> out;
};

void write_certificate(const std::string& path, const Instance& where, const Tournament& input,
                       const CyclePacking& packing) {
    if (auto check = verify_packing(where.tournament, packing); !check) {
        throw std::logic_error("refusing to write an invalid certificate: " + check.detail);
    }
    write_file(path, serialize_packing(packing));
    // A kernel-level certificate is only meaningful next to its instance.
    const std::string side = path + ".instance";
    if (!(where.tournament == input)) {
        write_file(side, serialize_instance(where));
    } else if (fs::exists(side)) {
        fs::remove(side);
    }
}

int cmd_solve(const Globals& g, const SolveArgs& a) {
    const Tournament t = parse_tournament(read_file(a.input));
    const Instance input{t, a.k};
    bench::ExperimentRow row;
    row.instance = instance_id(a.input);
    row.n = t.size();
    row.k = a.k;
    row.algorithm = a.algo;
    const auto start = std::chrono::steady_clock::now();

    std::optional<CyclePacking> packing;
    Instance where = input;
    bool resource = false;

    if (a.k <= 0) {
        packing = CyclePacking{};
    } else if (a.algo == "adp") {
        ActOptions options;
        options.deterministic = a.deterministic;
        options.jobs = g.jobs;
        const ActResult r = solve_act(input, options);
        row.kernel_size = static_cast<std::size_t>(r.kernel.kernel.tournament.size());
        row.fallback = r.kernel.fallback;
        if (r.yes) {
            packing = r.certificate;
            where = r.certified_instance;
        }
    } else if (a.algo == "colorcode") {
        if (a.k >= 3 && !a.allow_large_k) {
            throw CLI::ValidationError("--algo colorcode with k >= 3 requires --allow-large-k");
        }
        ColorCodingOptions options;
        options.trials = a.trials;
        options.delta = a.delta;
        if (!options.trials && !options.delta) options.trials = 100;
        options.seed = g.seed;
        if (g.budget_ms) options.deadline = start + std::chrono::milliseconds(*g.budget_ms);
        row.seed = g.seed;
        try {
            const auto r = solve_color_coding(t, a.k, options);
            row.trials = r.trials_used;
            packing = r.packing;
        } catch (const BudgetExceeded&) {
            resource = true;
        }
    } else {
        std::optional<std::chrono::milliseconds> wall;
        if (g.budget_ms) wall = std::chrono::milliseconds(*g.budget_ms);
        WorkBudget budget(a.max_nodes, wall);
        try {
            auto d = max_packing_bruteforce(t, a.k, budget);
            if (d.yes) packing = std::move(d.witness);
        } catch (const BudgetExceeded&) {
            resource = true;
        }
    }

    int code = kNo;
    if (resource) {
        row.verdict = "resource-limit";
        code = kResource;
    } else if (packing) {
        row.verdict = "yes";
        row.certificate_size = packing->size();
        code = kYes;
        if (a.certificate) write_certificate(*a.certificate, where, t, *packing);
    } else {
        row.verdict = "no";
    }
    if (g.timing) row.wall_ms = elapsed_ms(start);
    emit(a.out, bench::experiment_header() + bench::to_csv(row));
    return code;
}

struct KernelArgs {
    std::string input;
    int k = 0;
    std::string mode = "linear";
    std::string kernel_out;
    std::optional<std::string> out;
};

int cmd_kernelize(const Globals& g, const KernelArgs& a) {
    const Tournament t = parse_tournament(read_file(a.input));
    const auto start = std::chrono::steady_clock::now();
    const Instance input{t, a.k};
    const KernelResult r = a.mode == "linear" ? linear_kernel(input) : quadratic_kernel(input);
    write_file(a.kernel_out, serialize_instance(r.kernel));

    bench::ExperimentRow row;
    row.instance = instance_id(a.input);
    row.n = t.size();
    row.k = a.k;
    row.algorithm = "kernel-" + a.mode;
    row.kernel_size = static_cast<std::size_t>(r.kernel.tournament.size());
    row.fallback = r.fallback;
    if (r.trivial_yes) {
        row.verdict = "yes";
    } else if (r.kernel.tournament.size() == 0) {
        row.verdict = "no";
    } else {
        row.verdict = "open";
    }
    if (g.timing) row.wall_ms = elapsed_ms(start);
    emit(a.out, bench::experiment_header() + bench::to_csv(row));
    return kYes;
}

struct CorpusArgs {
    std::string family = "random";
    std::string sizes;
    std::string seeds = "1";
    std::string ks = "1-5";
    std::optional<std::string> out;
};

int cmd_epaudit(const Globals& g, const CorpusArgs& a) {
    bench::CorpusSpec spec{bench::parse_family(a.family), to_ints(a.sizes), to_seeds(a.seeds), to_ints(a.ks)};
    auto rows = bench::run_epaudit(spec, g.jobs, g.timing);
    std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        return std::tie(x.instance, x.k) < std::tie(y.instance, y.k);
    });
    std::string text = bench::audit_header();
    bool all_ok = true;
    for (const auto& row : rows) {
        text += bench::to_csv(row);
        all_ok = all_ok && row.verified;
    }
    emit(a.out, text);
    return all_ok ? kYes : kNo;
}

struct OracleArgs {
    std::vector<std::string> inputs;
    CorpusArgs corpus;
    std::uint64_t max_nodes = 200'000'000;
};

int cmd_oracle(const Globals& g, const OracleArgs& a) {
    struct Job {
        std::string id;
        Tournament t;
        std::optional<std::uint64_t> seed;
    };
    std::vector<Job> jobs;
    for (const auto& path : a.inputs) jobs.push_back({instance_id(path), parse_tournament(read_file(path)), {}});
    if (!a.corpus.sizes.empty()) {
        bench::CorpusSpec spec{bench::parse_family(a.corpus.family), to_ints(a.corpus.sizes),
                               to_seeds(a.corpus.seeds), {}};
        for (auto& inst : bench::expand(spec)) {
            std::optional<std::uint64_t> seed;
            if (spec.family == bench::Family::random) seed = inst.seed;
            jobs.push_back({inst.id, std::move(inst.tournament), seed});
        }
    }
    if (jobs.empty()) throw CLI::ValidationError("oracle needs --input files or a --sizes corpus");
    const std::function<bench::OracleRow(std::size_t)> run = [&](std::size_t i) {
        return bench::run_oracle(jobs[i].id, jobs[i].t, jobs[i].seed, a.max_nodes, g.budget_ms);
    };
    auto rows = bench::parallel_map<bench::OracleRow>(jobs.size(), g.jobs, run);
    std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.instance < y.instance; });
    std::string text = bench::oracle_header();
    bool limited = false;
    for (const auto& row : rows) {
        text += bench::to_csv(row);
        limited = limited || row.verdict != "ok";
    }
    emit(a.corpus.out, text);
    return limited ? kResource : kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arc-disjoint cycle packing in tournaments"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Master seed");
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--budget-ms", g.budget_ms, "Wall-clock budget for oracle and colorcode")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"csv"}));
    app.add_flag("--timing", g.timing, "Fill the wall_ms column (makes output run-dependent)");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a tournament file");
    gen_cmd->add_option("--family", gen.family)->check(CLI::IsMember({"random", "transitive", "rotational"}));
    gen_cmd->add_option("--n", gen.n)->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Decide k arc-disjoint cycles");
    solve_cmd->add_option("--input", solve.input)->required();
    solve_cmd->add_option("--k", solve.k)->required();
    solve_cmd->add_option("--algo", solve.algo)->check(CLI::IsMember({"adp", "colorcode", "oracle"}));
    solve_cmd->add_flag("--deterministic", solve.deterministic, "Report the first certificate in guess order");
    solve_cmd->add_option("--emit-certificate", solve.certificate, "Write the verified packing here");
    auto* trials = solve_cmd->add_option("--trials", solve.trials, "Color-coding trials")->check(CLI::PositiveNumber);
    auto* delta = solve_cmd->add_option("--delta", solve.delta, "Color-coding failure probability")
                      ->check(CLI::Range(0.0, 1.0));
    trials->excludes(delta);
    solve_cmd->add_flag("--allow-large-k", solve.allow_large_k, "Permit colorcode with k >= 3");
    solve_cmd->add_option("--max-nodes", solve.max_nodes, "Oracle node budget");
    solve_cmd->add_option("--out", solve.out, "CSV output file (default stdout)");

    KernelArgs kern;
    auto* kern_cmd = app.add_subcommand("kernelize", "Write a kernel instance");
    kern_cmd->add_option("--input", kern.input)->required();
    kern_cmd->add_option("--k", kern.k)->required();
    kern_cmd->add_option("--mode", kern.mode)->check(CLI::IsMember({"quadratic", "linear"}));
    kern_cmd->add_option("--kernel-out", kern.kernel_out, "Kernel file")->required();
    kern_cmd->add_option("--out", kern.out, "CSV output file (default stdout)");

    CorpusArgs audit;
    auto* audit_cmd = app.add_subcommand("epaudit", "Audit triangles-or-FAS over a corpus");
    audit_cmd->add_option("--family", audit.family)->check(CLI::IsMember({"random", "transitive", "rotational"}));
    audit_cmd->add_option("--sizes", audit.sizes, "e.g. 5-40 or 5,10,20")->required();
    audit_cmd->add_option("--seeds", audit.seeds, "e.g. 1-20");
    audit_cmd->add_option("--k", audit.ks, "e.g. 1-5");
    audit_cmd->add_option("--out", audit.out, "CSV output file (default stdout)");

    OracleArgs orc;
    auto* orc_cmd = app.add_subcommand("oracle", "Exact packing number and minimum FAS");
    orc_cmd->add_option("--input", orc.inputs, "Tournament files");
    orc_cmd->add_option("--family", orc.corpus.family)->check(CLI::IsMember({"random", "transitive", "rotational"}));
    orc_cmd->add_option("--sizes", orc.corpus.sizes);
    orc_cmd->add_option("--seeds", orc.corpus.seeds);
    orc_cmd->add_option("--max-nodes", orc.max_nodes, "Search node budget");
    orc_cmd->add_option("--out", orc.corpus.out, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(g, gen);
        if (*solve_cmd) return cmd_solve(g, solve);
        if (*kern_cmd) return cmd_kernelize(g, kern);
        if (*audit_cmd) return cmd_epaudit(g, audit);
        if (*orc_cmd) return cmd_oracle(g, orc);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

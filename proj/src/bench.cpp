#include "tourpack/bench.hpp"

#include <charconv>
#include <chrono>
#include <sstream>

#include "tourpack/ep_engine.hpp"
#include "tourpack/errors.hpp"
#include "tourpack/generators.hpp"
#include "tourpack/oracle.hpp"
#include "tourpack/verify.hpp"

namespace tourpack::bench {

Family parse_family(std::string_view name) {
    if (name == "random") return Family::random;
    if (name == "transitive") return Family::transitive;
    if (name == "rotational") return Family::rotational;
    throw InputError("unknown family '" + std::string(name) + "' (random, transitive, rotational)");
}

std::string to_string(Family family) {
    switch (family) {
        case Family::random: return "random";
        case Family::transitive: return "transitive";
        case Family::rotational: return "rotational";
    }
    return "?";
}

Tournament generate(Family family, int n, std::uint64_t seed) {
    switch (family) {
        case Family::random: return random_tournament(n, seed);
        case Family::transitive: return transitive_tournament(n);
        case Family::rotational: return rotational_tournament(n);
    }
    throw InputError("unknown family");
}

namespace {

long long parse_integer(std::string_view s, std::string_view whole) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InputError("bad integer list '" + std::string(whole) + "'");
    }
    return v;
}

std::string cell(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : ""; }
std::string cell(const std::optional<std::size_t>& v, int) { return v ? std::to_string(*v) : ""; }
std::string cell(const std::optional<double>& v) {
    if (!v) return "";
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << *v;
    return os.str();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<long long> parse_range_list(std::string_view text) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view item = text.substr(pos, comma - pos);
        const std::size_t dash = item.find('-', 1);
        if (dash == std::string_view::npos) {
            out.push_back(parse_integer(item, text));
        } else {
            const long long lo = parse_integer(item.substr(0, dash), text);
            const long long hi = parse_integer(item.substr(dash + 1), text);
            if (hi < lo) throw InputError("empty range in '" + std::string(text) + "'");
            for (long long v = lo; v <= hi; ++v) out.push_back(v);
        }
        pos = comma + 1;
    }
    return out;
}

std::vector<CorpusInstance> expand(const CorpusSpec& spec) {
    std::vector<CorpusInstance> out;
    for (int n : spec.sizes) {
        if (n < 1) throw InputError("corpus sizes must be positive");
        if (spec.family == Family::rotational && n % 2 == 0) continue;
        if (spec.family == Family::random) {
            for (std::uint64_t seed : spec.seeds) {
                out.push_back({"random-n" + std::to_string(n) + "-s" + std::to_string(seed), n, seed,
                               random_tournament(n, seed)});
            }
        } else {
            out.push_back({to_string(spec.family) + "-n" + std::to_string(n), n, 0, generate(spec.family, n, 0)});
        }
    }
    return out;
}

std::string experiment_header() {
    return "instance,n,k,seed,algorithm,verdict,certificate_size,kernel_size,fallback,wall_ms,trials\n";
}

std::string to_csv(const ExperimentRow& r) {
    std::string fallback;
    if (r.fallback) fallback = *r.fallback ? "1" : "0";
    return r.instance + "," + std::to_string(r.n) + "," + std::to_string(r.k) + "," + cell(r.seed) + "," +
           r.algorithm + "," + r.verdict + "," + cell(r.certificate_size, 0) + "," + cell(r.kernel_size, 0) + "," +
           fallback + "," + cell(r.wall_ms) + "," + cell(r.trials) + "\n";
}

std::string audit_header() { return "instance,n,seed,k,branch,size,bound,verified,min_fas,ratio,wall_ms\n"; }

std::string to_csv(const AuditRow& r) {
    std::string min_fas;
    std::optional<double> ratio;
    if (r.min_fas) {
        min_fas = std::to_string(*r.min_fas);
        if (r.branch == "fas" && *r.min_fas > 0) ratio = static_cast<double>(r.size) / *r.min_fas;
        if (r.branch == "fas" && *r.min_fas == 0 && r.size == 0) ratio = 1.0;
    }
    return r.instance + "," + std::to_string(r.n) + "," + std::to_string(r.seed) + "," + std::to_string(r.k) + "," +
           r.branch + "," + std::to_string(r.size) + "," + std::to_string(r.bound) + "," +
           (r.verified ? "1" : "0") + "," + min_fas + "," + cell(ratio) + "," + cell(r.wall_ms) + "\n";
}

std::vector<AuditRow> run_epaudit(const CorpusSpec& spec, int jobs, bool timing) {
    const auto corpus = expand(spec);
    for (int k : spec.ks) {
        if (k < 1) throw InputError("audit k values must be positive");
    }
    const std::size_t per = spec.ks.size();
    const std::function<AuditRow(std::size_t)> run = [&](std::size_t index) {
        const CorpusInstance& inst = corpus[index / per];
        const int k = spec.ks[index % per];
        const auto start = std::chrono::steady_clock::now();
        AuditRow row;
        row.instance = inst.id;
        row.n = inst.n;
        row.seed = inst.seed;
        row.k = k;
        const auto split = triangles_or_fas(inst.tournament, k);
        if (const auto* packing = std::get_if<CyclePacking>(&split)) {
            row.branch = "triangles";
            row.size = packing->size();
            row.bound = static_cast<std::size_t>(k);
            bool triangles = true;
            for (const Cycle& c : packing->cycles) triangles = triangles && c.size() == 3;
            row.verified = triangles && row.size >= row.bound && verify_packing(inst.tournament, *packing).ok;
        } else {
            const auto& fas = std::get<FasCertificate>(split);
            row.branch = "fas";
            row.size = fas.size();
            row.bound = static_cast<std::size_t>(6 * (k - 1));
            row.verified = row.size <= row.bound && check_fas_certificate(inst.tournament, fas).ok;
            if (inst.n <= 20) row.min_fas = static_cast<int>(min_fas_exact(inst.tournament).size());
        }
        if (timing) row.wall_ms = elapsed_ms(start);
        return row;
    };
    return parallel_map<AuditRow>(corpus.size() * per, jobs, run);
}

std::string oracle_header() { return "instance,n,seed,verdict,packing_number,min_fas_size,max_packing\n"; }

std::string to_csv(const OracleRow& r) {
    return r.instance + "," + std::to_string(r.n) + "," + cell(r.seed) + "," + r.verdict + "," +
           (r.verdict == "ok" ? std::to_string(r.packing_number) + "," + std::to_string(r.min_fas_size) : ",") + "," +
           r.max_packing + "\n";
}

OracleRow run_oracle(const std::string& id, const Tournament& t, std::optional<std::uint64_t> seed,
                     std::uint64_t max_nodes, std::optional<long long> budget_ms) {
    OracleRow row;
    row.instance = id;
    row.n = t.size();
    row.seed = seed;
    std::optional<std::chrono::milliseconds> wall;
    if (budget_ms) wall = std::chrono::milliseconds(*budget_ms);
    WorkBudget budget(max_nodes, wall);
    try {
        const auto report = oracle_report(t, budget);
        row.verdict = "ok";
        row.packing_number = report.packing_number;
        row.min_fas_size = report.min_fas_size;
        for (std::size_t i = 0; i < report.max_packing.cycles.size(); ++i) {
            if (i) row.max_packing += ';';
            const auto& vs = report.max_packing.cycles[i].vertices;
            for (std::size_t j = 0; j < vs.size(); ++j) {
                if (j) row.max_packing += ' ';
                row.max_packing += std::to_string(vs[j]);
            }
        }
    } catch (const BudgetExceeded&) {
        row.verdict = "resource-limit";
    }
    return row;
}

}  // namespace tourpack::bench

#include "acyclic/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acyclic/colouring.hpp"
#include "acyclic/dimacs.hpp"
#include "acyclic/gadgets.hpp"
#include "acyclic/graph.hpp"
#include "acyclic/meta.hpp"
#include "acyclic/reductions.hpp"
#include "acyclic/solver.hpp"
#include "acyclic/suites.hpp"
#include "acyclic/symmetry.hpp"

namespace acyclic {

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;

void write_meta(const std::string& base, nlohmann::json meta, const Manifest& manifest) {
    meta["manifest"] = to_json(manifest);
    std::ofstream out(base + ".meta.json");
    if (!out) throw std::runtime_error("cannot open " + base + ".meta.json for writing");
    out << meta.dump(2) << '\n';
}

std::string join_args(const std::vector<std::string>& args) {
    std::string joined = "acyclic-lab";
    for (const std::string& a : args) joined += " " + a;
    return joined;
}

struct GenOptions {
    std::string family;
    std::string name = "q3";
    int d = 3;
    int k = 3;
    int t = 1;
    std::string out;
};

int cmd_gen(const GenOptions& opt, const std::string& command, std::ostream& out) {
    GadgetGraph gadget;
    nlohmann::json params;
    std::string base = opt.out;
    if (opt.family == "gd") {
        gadget = g_d(opt.d);
        params["d"] = opt.d;
        if (base.empty()) base = "gd_" + std::to_string(opt.d);
    } else if (opt.family == "chain") {
        gadget = chain_gadget(opt.k, opt.t);
        params["k"] = opt.k;
        params["t"] = opt.t;
        if (base.empty()) base = "chain_" + std::to_string(opt.k) + "_" + std::to_string(opt.t);
    } else if (opt.family == "filler") {
        gadget = filler_gadget(opt.d);
        params["d"] = opt.d;
        if (base.empty()) base = "filler_" + std::to_string(opt.d);
    } else {
        gadget = exception_graph(opt.name);
        params["name"] = opt.name;
        if (base.empty()) base = opt.name;
    }
    write_dimacs_file(gadget.graph, base + ".col");

    Manifest manifest;
    manifest.command = command;
    manifest.parameters = params;
    manifest.outcome = {{"n", gadget.graph.vertex_count()}, {"m", gadget.graph.edge_count()}};
    write_meta(base, gadget_meta(gadget), manifest);
    out << "wrote " << base << ".col (" << gadget.graph.vertex_count() << " vertices, "
        << gadget.graph.edge_count() << " edges) and " << base << ".meta.json\n";
    return kExitYes;
}

struct ReduceOptions {
    std::string construction;
    std::string in;
    int k = 3;
    int d = 3;
    int q = 1;
    std::string out;
};

int cmd_reduce(const ReduceOptions& opt, const std::string& command, std::ostream& out) {
    Graph g = read_dimacs_file(opt.in);
    std::string source_hash = hash_file(opt.in);
    ReductionOutput ro;
    nlohmann::json params;
    if (opt.construction == "cc") {
        ro = coleman_cai(g, opt.k);
        params["k"] = opt.k;
    } else if (opt.construction == "c2") {
        ro = construct_bipartite_delta_k_plus_1(g, opt.k);
        params["k"] = opt.k;
    } else if (opt.construction == "c3") {
        ro = construct_regular(g, opt.k, opt.d);
        params["k"] = opt.k;
        params["d"] = opt.d;
    } else if (opt.construction == "c4") {
        ro = construct_k23(g);
    } else if (opt.construction == "c5") {
        ro = construct_swap_auto(g);
    } else if (opt.construction == "c6") {
        ro = join_kq(g, opt.q);
        params["q"] = opt.q;
    } else {  // universal
        ro.graph = add_universal(g);
        for (int v = 0; v < g.vertex_count(); ++v)
            ro.provenance.push_back({Provenance::Kind::source_copy, v, -1, 0, 0, 0, 0});
        ro.provenance.push_back({Provenance::Kind::hub, -1, -1, 0, 0, 1, 0});
    }

    std::string base = opt.out.empty() ? opt.construction + "_out" : opt.out;
    write_dimacs_file(ro.graph, base + ".col");
    Manifest manifest;
    manifest.command = command;
    manifest.input_hashes[opt.in] = source_hash;
    manifest.parameters = params;
    std::vector<std::string> bad = failed_claims(ro);
    manifest.outcome = {{"n", ro.graph.vertex_count()},
                        {"m", ro.graph.edge_count()},
                        {"claims_verified", bad.empty()}};
    write_meta(base, reduction_meta(ro, source_hash), manifest);
    out << "wrote " << base << ".col (" << ro.graph.vertex_count() << " vertices, "
        << ro.graph.edge_count() << " edges) and " << base << ".meta.json\n";
    if (!bad.empty()) {
        for (const std::string& claim : bad) out << "claim FAILED: " << claim << '\n';
        return kExitNo;
    }
    return kExitYes;
}

struct SolveOptionsCli {
    std::string in;
    int k = 0;
    bool chromatic = false;  // plain proper colouring instead of acyclic
    bool number = false;
    double budget_seconds = 60.0;
    int workers = 1;
    std::string witness;
    bool json = false;
};

int cmd_solve(const SolveOptionsCli& opt, const std::string& command, std::ostream& out) {
    Graph g = read_dimacs_file(opt.in);
    SolveBudget budget;
    budget.wall_limit =
        std::chrono::milliseconds(static_cast<long long>(opt.budget_seconds * 1000));
    SolveOptions options;
    options.workers = opt.workers;

    Manifest manifest;
    manifest.command = command;
    manifest.input_hashes[opt.in] = hash_file(opt.in);
    manifest.parameters = {{"k", opt.k},
                           {"mode", opt.chromatic ? "proper" : "acyclic"},
                           {"number", opt.number},
                           {"budget_seconds", opt.budget_seconds}};

    int exit_code = kExitUnknown;
    if (opt.number) {
        NumberResult r = acyclic_chromatic_number(g, budget, options);
        if (r.value) {
            manifest.outcome = {{"acyclic_chromatic_number", *r.value}};
            out << "acyclic chromatic number: " << *r.value << '\n';
            exit_code = kExitYes;
        } else {
            manifest.outcome = {{"acyclic_chromatic_number", nullptr}};
            out << "unknown (budget exhausted)\n";
            exit_code = kExitUnknown;
        }
    } else {
        SolveResult r = opt.chromatic ? is_k_colourable(g, opt.k, budget, options)
                                      : is_k_acyclic_colourable(g, opt.k, budget, options);
        const char* verdict = r.outcome == Outcome::yes  ? "yes"
                              : r.outcome == Outcome::no ? "no"
                                                         : "unknown";
        manifest.outcome = {{"decision", verdict}, {"nodes", r.nodes}};
        out << verdict << '\n';
        if (r.outcome == Outcome::yes) {
            exit_code = kExitYes;
            if (!opt.witness.empty()) {
                write_colouring_file(*r.witness, opt.witness);
                out << "witness written to " << opt.witness << '\n';
            }
        } else {
            exit_code = r.outcome == Outcome::no ? kExitNo : kExitUnknown;
        }
    }
    if (opt.json) out << to_json(manifest).dump(2) << '\n';
    return exit_code;
}

struct CountOptions {
    std::string in;
    int k = 3;
    std::string relation = "swap";
    std::string kind = "acyclic";
    std::uint64_t cap = 1'000'000;
    std::uint64_t aut_cap = 1'000'000;
    bool json = false;
};

int cmd_count(const CountOptions& opt, const std::string& command, std::ostream& out) {
    Graph g = read_dimacs_file(opt.in);
    Relation relation = opt.relation == "swap" ? Relation::swap : Relation::swap_auto;
    ColouringKind kind = opt.kind == "proper" ? ColouringKind::proper : ColouringKind::acyclic;
    CountCaps caps;
    caps.colouring_cap = opt.cap;
    caps.automorphism_nodes = opt.aut_cap;
    ClassCountResult r = count_classes(g, opt.k, relation, kind, caps);

    Manifest manifest;
    manifest.command = command;
    manifest.input_hashes[opt.in] = hash_file(opt.in);
    manifest.parameters = {
        {"k", opt.k}, {"relation", opt.relation}, {"kind", opt.kind}, {"cap", opt.cap}};

    if (!r.ok()) {
        const char* what = r.status == CountStatus::colouring_overflow ? "colouring overflow"
                           : r.status == CountStatus::automorphism_overflow
                               ? "automorphism overflow"
                               : "budget exhausted";
        manifest.outcome = {{"overflow", what}};
        out << "overflow: " << what << '\n';
        if (opt.json) out << to_json(manifest).dump(2) << '\n';
        return kExitUnknown;
    }
    manifest.outcome = {{"classes", r.value.count}};
    out << "classes (" << opt.kind << ", up to " << opt.relation << ", k=" << opt.k
        << "): " << r.value.count << '\n';
    if (opt.json) out << to_json(manifest).dump(2) << '\n';
    return kExitYes;
}

struct VerifyOptions {
    std::string suite;
    double budget_seconds = 60.0;
    int workers = 0;
    bool json = false;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    SuiteBudget budget;
    budget.per_case =
        std::chrono::milliseconds(static_cast<long long>(opt.budget_seconds * 1000));
    budget.workers = opt.workers;
    SuiteReport report = run_suite(opt.suite, budget);
    if (opt.json) {
        nlohmann::json cases = nlohmann::json::array();
        for (const CaseResult& c : report.cases)
            cases.push_back({{"name", c.name},
                             {"verdict", c.verdict == Verdict::pass      ? "pass"
                                         : c.verdict == Verdict::skipped ? "skipped"
                                                                         : "fail"},
                             {"detail", c.detail},
                             {"millis", c.millis}});
        out << nlohmann::json{{"suite", report.suite},
                              {"cases", cases},
                              {"failed", report.failed()},
                              {"skipped", report.skipped()},
                              {"total_millis", report.total_millis}}
                   .dump(2)
            << '\n';
    } else {
        for (const CaseResult& c : report.cases) {
            const char* verdict = c.verdict == Verdict::pass      ? "pass"
                                  : c.verdict == Verdict::skipped ? "skip"
                                                                  : "FAIL";
            out << "[" << verdict << "] " << report.suite << "/" << c.name;
            if (!c.detail.empty()) out << " — " << c.detail;
            out << " (" << static_cast<long long>(c.millis) << " ms)\n";
        }
        out << report.suite << ": " << (report.all_ok() ? "ok" : "FAILED") << " ("
            << report.cases.size() << " cases, " << report.failed() << " failed, "
            << report.skipped() << " skipped)\n";
    }
    return report.all_ok() ? kExitYes : kExitNo;
}

struct BoundOptions {
    std::string in;
    bool mad = false;
    bool json = false;
};

int cmd_bound(const BoundOptions& opt, std::ostream& out) {
    Graph g = read_dimacs_file(opt.in);
    BoundReport report = bound_report(g, opt.mad);
    nlohmann::json j{{"density_bound", report.density_bound.to_string()}};
    out << "density bound: chi_a > " << report.density_bound.to_string() << '\n';
    if (report.regular_bound) {
        out << "regular bound: chi_a >= " << *report.regular_bound << '\n';
        j["regular_bound"] = *report.regular_bound;
    }
    if (report.mad_bound) {
        out << "mad bound: chi_a > " << report.mad_bound->to_string() << '\n';
        j["mad_bound"] = report.mad_bound->to_string();
    }
    if (opt.json) out << j.dump(2) << '\n';
    return kExitYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact solvers, gadget generators and hardness reductions for acyclic colouring"};
    app.name("acyclic-lab");
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a named graph family");
    gen_cmd->add_option("family", gen.family, "gd | chain | filler | exception")
        ->required()
        ->check(CLI::IsMember({"gd", "chain", "filler", "exception"}));
    gen_cmd->add_option("--d", gen.d, "degree parameter (gd, filler)");
    gen_cmd->add_option("--k", gen.k, "palette size (chain)");
    gen_cmd->add_option("--t", gen.t, "number of terminals (chain)");
    gen_cmd->add_option("--name", gen.name, "exception graph: k4 | q3 | dual-p4-k2");
    gen_cmd->add_option("--out", gen.out, "output basename");

    ReduceOptions reduce;
    CLI::App* reduce_cmd = app.add_subcommand("reduce", "apply a hardness construction");
    reduce_cmd->add_option("construction", reduce.construction,
                           "cc | c2 | c3 | c4 | c5 | c6 | universal")
        ->required()
        ->check(CLI::IsMember({"cc", "c2", "c3", "c4", "c5", "c6", "universal"}));
    reduce_cmd->add_option("--in", reduce.in, "input edge list")->required();
    reduce_cmd->add_option("--k", reduce.k, "palette size");
    reduce_cmd->add_option("--d", reduce.d, "target regularity (c3)");
    reduce_cmd->add_option("--q", reduce.q, "clique size (c6)");
    reduce_cmd->add_option("--out", reduce.out, "output basename");

    SolveOptionsCli solve;
    CLI::App* solve_cmd = app.add_subcommand("solve", "exact decision / chromatic number");
    solve_cmd->add_option("--in", solve.in, "input edge list")->required();
    solve_cmd->add_option("--k", solve.k, "palette size to decide");
    solve_cmd->add_flag("--acyclic", "acyclic colouring mode (default)");
    solve_cmd->add_flag("--chromatic", solve.chromatic, "plain proper colouring mode");
    solve_cmd->add_flag("--number", solve.number, "compute the acyclic chromatic number");
    solve_cmd->add_option("--budget", solve.budget_seconds, "wall budget in seconds");
    solve_cmd->add_option("--workers", solve.workers, "parallel root-split workers");
    solve_cmd->add_option("--witness", solve.witness, "write the witness colouring here");
    solve_cmd->add_flag("--json", solve.json, "emit the manifest as JSON");

    CountOptions count;
    CLI::App* count_cmd = app.add_subcommand("count", "count colouring classes up to symmetry");
    count_cmd->add_option("--in", count.in, "input edge list")->required();
    count_cmd->add_option("--k", count.k, "palette size")->required();
    count_cmd->add_option("--relation", count.relation, "swap | swap_auto")
        ->check(CLI::IsMember({"swap", "swap_auto"}));
    count_cmd->add_option("--kind", count.kind, "proper | acyclic")
        ->check(CLI::IsMember({"proper", "acyclic"}));
    count_cmd->add_option("--cap", count.cap, "colouring enumeration cap");
    count_cmd->add_option("--aut-cap", count.aut_cap, "automorphism search node cap");
    count_cmd->add_flag("--json", count.json, "emit the manifest as JSON");

    VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "replay a verification suite");
    verify_cmd->add_option("suite", verify.suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--budget", verify.budget_seconds, "per-case budget in seconds");
    verify_cmd->add_option("--workers", verify.workers, "parallel sweep workers");
    verify_cmd->add_flag("--json", verify.json, "emit the report as JSON");

    BoundOptions bound;
    CLI::App* bound_cmd = app.add_subcommand("bound", "exact lower-bound report");
    bound_cmd->add_option("--in", bound.in, "input edge list")->required();
    bound_cmd->add_flag("--mad", bound.mad, "include the maximum-average-degree bound (n <= 20)");
    bound_cmd->add_flag("--json", bound.json, "emit the report as JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    const std::string command = join_args(args);
    try {
        if (gen_cmd->parsed()) return cmd_gen(gen, command, out);
        if (reduce_cmd->parsed()) return cmd_reduce(reduce, command, out);
        if (solve_cmd->parsed()) {
            if (!solve.number && solve.k <= 0) {
                err << "usage error: --k or --number is required\n";
                return kExitUsage;
            }
            return cmd_solve(solve, command, out);
        }
        if (count_cmd->parsed()) return cmd_count(count, command, out);
        if (verify_cmd->parsed()) return cmd_verify(verify, out);
        if (bound_cmd->parsed()) return cmd_bound(bound, out);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "usage error: no subcommand\n";
    return kExitUsage;
}

}  // namespace acyclic

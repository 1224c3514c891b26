#include "acyclic/suites.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "acyclic/dimacs.hpp"
#include "acyclic/gadgets.hpp"
#include "acyclic/graph.hpp"
#include "acyclic/reductions.hpp"
#include "acyclic/solver.hpp"
#include "acyclic/symmetry.hpp"

namespace acyclic {

bool SuiteReport::all_ok() const { return failed() == 0; }

int SuiteReport::failed() const {
    int count = 0;
    for (const CaseResult& c : cases)
        if (c.verdict == Verdict::fail) ++count;
    return count;
}

int SuiteReport::skipped() const {
    int count = 0;
    for (const CaseResult& c : cases)
        if (c.verdict == Verdict::skipped) ++count;
    return count;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SuiteRunner {
    SuiteReport report;
    SuiteBudget budget;

    void add(const std::string& name, const std::function<void(CaseResult&)>& body) {
        CaseResult result;
        result.name = name;
        auto start = Clock::now();
        try {
            body(result);
        } catch (const std::exception& e) {
            result.verdict = Verdict::fail;
            result.detail = std::string("exception: ") + e.what();
        }
        result.millis =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        report.total_millis += result.millis;
        report.cases.push_back(std::move(result));
    }

    int workers() const {
        if (budget.workers > 0) return budget.workers;
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
};

std::string dump_graph(const Graph& g) {
    std::ostringstream ss;
    write_dimacs(g, ss);
    std::string s = ss.str();
    std::replace(s.begin(), s.end(), '\n', ';');
    return s;
}

void fail(CaseResult& out, const std::string& detail) {
    out.verdict = Verdict::fail;
    if (!out.detail.empty()) out.detail += " | ";
    out.detail += detail;
}

void skip(CaseResult& out, const std::string& reason) {
    if (out.verdict == Verdict::pass) {
        out.verdict = Verdict::skipped;
        out.detail = reason;
    }
}

// ---------------------------------------------------------------------------
// independent verifier oracle: enumerate every cycle explicitly

void all_cycles(const Graph& g, std::vector<std::vector<int>>& out) {
    const int n = g.vertex_count();
    std::vector<int> pathv;
    std::vector<bool> onpath(n, false);
    // Cycles rooted at their smallest vertex; second vertex below last to
    // list each cycle once per orientation class.
    std::function<void(int, int)> extend = [&](int root, int u) {
        for (int w : g.neighbours(u)) {
            if (w == root && pathv.size() >= 3) {
                if (pathv[1] < pathv.back()) out.push_back(pathv);
                continue;
            }
            if (w <= root || onpath[w]) continue;
            onpath[w] = true;
            pathv.push_back(w);
            extend(root, w);
            pathv.pop_back();
            onpath[w] = false;
        }
    };
    for (int root = 0; root < n; ++root) {
        pathv = {root};
        std::fill(onpath.begin(), onpath.end(), false);
        onpath[root] = true;
        extend(root, root);
    }
}

bool oracle_is_acyclic_colouring(const Graph& g, const Colouring& f,
                                 const std::vector<std::vector<int>>& cycles) {
    for (auto [u, v] : g.edges())
        if (f(u) == f(v)) return false;
    for (const auto& cycle : cycles) {
        std::vector<int> used;
        for (int v : cycle)
            if (std::find(used.begin(), used.end(), f(v)) == used.end()) used.push_back(f(v));
        if (used.size() == 2) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// labelled graph sweeps

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

bool mask_connected(int n, std::uint64_t mask) {
    std::array<std::uint32_t, 8> adj{};
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) {
                adj[u] |= 1u << v;
                adj[v] |= 1u << u;
            }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        std::uint32_t fresh = adj[v] & ~seen;
        seen |= fresh;
        frontier |= fresh;
    }
    return seen == (n >= 32 ? ~0u : (1u << n) - 1u);
}

/// Acyclic chromatic number by search from k = 1 with every bound-based
/// prune disabled, so bound suites never verify a theorem with itself.
int chromatic_no_prunes(const Graph& g) {
    SolveOptions opt;
    opt.density_prune = false;
    opt.regular_prune = false;
    for (int k = 1;; ++k) {
        if (is_k_acyclic_colourable(g, k, {}, opt).outcome == Outcome::yes) return k;
    }
}

// ---------------------------------------------------------------------------

void suite_verifier_oracle(SuiteRunner& r) {
    for (int n = 1; n <= 5; ++n) {
        r.add("all-graphs-n" + std::to_string(n) + "-all-3^n-assignments", [n](CaseResult& out) {
            const int bits = n * (n - 1) / 2;
            long long checked = 0;
            for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
                Graph g = graph_from_mask(n, mask);
                std::vector<std::vector<int>> cycles;
                all_cycles(g, cycles);
                std::vector<int> assign(n, 0);
                while (true) {
                    Colouring f{3, assign};
                    bool fast = is_acyclic_colouring(g, f);
                    bool slow = oracle_is_acyclic_colouring(g, f, cycles);
                    ++checked;
                    if (fast != slow) {
                        fail(out, "disagreement on " + dump_graph(g));
                        return;
                    }
                    int i = 0;
                    while (i < n && assign[i] == 2) assign[i++] = 0;
                    if (i == n) break;
                    ++assign[i];
                }
            }
            out.detail = std::to_string(checked) + " assignments";
        });
    }
}

void suite_lower_bounds(SuiteRunner& r) {
    for (int n = 1; n <= 7; ++n) {
        r.add("connected-n" + std::to_string(n), [n, &r](CaseResult& out) {
            const int bits = n * (n - 1) / 2;
            const std::uint64_t total = 1ull << bits;
            const int workers = std::max(1, std::min(r.workers(), 16));
            std::atomic<std::uint64_t> bad_mask{~0ull};
            std::atomic<long long> checked{0};
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&, w]() {
                    long long local = 0;
                    for (std::uint64_t mask = w; mask < total;
                         mask += static_cast<std::uint64_t>(workers)) {
                        if (!mask_connected(n, mask)) continue;
                        Graph g = graph_from_mask(n, mask);
                        ++local;
                        int chi = chromatic_no_prunes(g);
                        // strict: chi * n > n + m in exact integers
                        if (static_cast<long long>(chi) * n <= n + g.edge_count()) {
                            std::uint64_t expect = bad_mask.load();
                            while (mask < expect &&
                                   !bad_mask.compare_exchange_weak(expect, mask)) {
                            }
                        }
                    }
                    checked += local;
                });
            }
            for (auto& t : pool) t.join();
            if (bad_mask.load() != ~0ull) {
                Graph g = graph_from_mask(n, bad_mask.load());
                fail(out, "density bound violated by " + dump_graph(g));
                return;
            }
            out.detail = std::to_string(checked.load()) + " connected graphs";
        });
    }
}

void suite_gd_family(SuiteRunner& r) {
    for (int d = 1; d <= 6; ++d) {
        r.add("g" + std::to_string(d), [d](CaseResult& out) {
            GadgetGraph gd = g_d(d);
            const int target = (d + 4) / 2;  // ceil((d+3)/2)
            if (!is_d_regular(gd.graph, d)) fail(out, "not d-regular");
            if (!is_acyclic_colouring(gd.graph, *gd.canonical_colouring))
                fail(out, "canonical colouring rejected");
            if (gd.canonical_colouring->palette_size != target)
                fail(out, "canonical palette mismatch");
            NumberResult chi = acyclic_chromatic_number(gd.graph);
            if (!chi.value) {
                fail(out, "solver returned unknown");
            } else if (*chi.value != target) {
                fail(out, "chi_a = " + std::to_string(*chi.value) + ", expected " +
                              std::to_string(target));
            }
            // re-refute k-1 by pure search where affordable
            if (d <= 5 && target >= 2) {
                SolveOptions no_prunes;
                no_prunes.density_prune = false;
                no_prunes.regular_prune = false;
                SolveResult refute =
                    is_k_acyclic_colourable(gd.graph, target - 1, {}, no_prunes);
                if (refute.outcome != Outcome::no)
                    fail(out, "prune-free refutation of k-1 failed");
            }
            if (out.verdict == Verdict::pass)
                out.detail = "chi_a = " + std::to_string(target);
        });
    }
}

void suite_chain_lemma(SuiteRunner& r) {
    for (int k : {3, 4}) {
        for (int t : {1, 2}) {
            std::string name = "chain-k" + std::to_string(k) + "-t" + std::to_string(t);
            r.add(name, [k, t](CaseResult& out) {
                GadgetGraph chain = chain_gadget(k, t);
                const Graph& g = chain.graph;
                EnumerateResult all = enumerate_acyclic_colourings(g, k, 1'000'000);
                if (all.overflow) {
                    fail(out, "enumeration overflow");
                    return;
                }
                if (all.colourings.empty()) {
                    fail(out, "no acyclic colourings found");
                    return;
                }
                for (const Colouring& f : all.colourings) {
                    int c1 = f(chain.terminals.front());
                    for (int term : chain.terminals)
                        if (f(term) != c1) {
                            fail(out, "terminals not monochromatic");
                            return;
                        }
                    // bicoloured x,y-path for every other colour and pair
                    for (int c2 = 0; c2 < k; ++c2) {
                        if (c2 == c1) continue;
                        for (size_t a = 0; a < chain.terminals.size(); ++a) {
                            for (size_t b = a + 1; b < chain.terminals.size(); ++b) {
                                // BFS restricted to colours {c1, c2}
                                std::vector<bool> seen(g.vertex_count(), false);
                                std::vector<int> queue = {chain.terminals[a]};
                                seen[chain.terminals[a]] = true;
                                for (size_t head = 0; head < queue.size(); ++head) {
                                    for (int w : g.neighbours(queue[head])) {
                                        if (seen[w] || (f(w) != c1 && f(w) != c2)) continue;
                                        seen[w] = true;
                                        queue.push_back(w);
                                    }
                                }
                                if (!seen[chain.terminals[b]]) {
                                    fail(out, "no bicoloured path between terminals");
                                    return;
                                }
                            }
                        }
                    }
                }
                ClassCountResult classes =
                    count_classes(g, k, Relation::swap_auto, ColouringKind::acyclic);
                if (!classes.ok()) {
                    fail(out, "class counting overflow");
                    return;
                }
                if (classes.value.count != 1) {
                    fail(out, "swap+auto classes = " + std::to_string(classes.value.count));
                    return;
                }
                out.detail = std::to_string(all.colourings.size()) +
                             " colourings, one class up to swaps and automorphisms";
            });
        }
    }
}

void suite_c1(SuiteRunner& r) {
    for (int n = 1; n <= 4; ++n) {
        r.add("all-graphs-n" + std::to_string(n), [n](CaseResult& out) {
            const int bits = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
                Graph g = graph_from_mask(n, mask);
                ReductionOutput cc = coleman_cai(g, 3);
                for (const std::string& claim : failed_claims(cc))
                    fail(out, "claim failed: " + claim + " on " + dump_graph(g));
                bool colourable = is_k_colourable(g, 3).outcome == Outcome::yes;
                bool acyclic3 = is_k_acyclic_colourable(cc.graph, 3).outcome == Outcome::yes;
                if (colourable != acyclic3) {
                    fail(out, "guarantee broken on " + dump_graph(g));
                    return;
                }
            }
            out.detail = "iff verified on every labelled graph";
        });
    }
}

void suite_c2(SuiteRunner& r) {
    const int k = 3;
    std::vector<std::pair<std::string, Graph>> inputs = {
        {"K2", complete(2)}, {"P3", path(3)}, {"C5", cycle(5)}, {"K4", complete(4)}};
    for (auto& [name, g] : inputs) {
        r.add("c2-" + name, [&, k](CaseResult& out) {
            ReductionOutput ro = construct_bipartite_delta_k_plus_1(g, k);
            long long m = g.edge_count();
            long long expect = (2LL * k * k - k) * 2 * m + static_cast<long long>(k) * m;
            if (ro.graph.vertex_count() != expect)
                fail(out, "size formula: got " + std::to_string(ro.graph.vertex_count()) +
                              ", want " + std::to_string(expect));
            for (const std::string& claim : failed_claims(ro)) fail(out, "claim failed: " + claim);

            SolveResult input_solve = is_k_colourable(g, k);
            bool colourable = input_solve.outcome == Outcome::yes;
            if (colourable) {
                // constructive lift must certify the forward direction
                Colouring lifted = lift_colouring_c2(ro, g, *input_solve.witness);
                if (!is_acyclic_colouring(ro.graph, lifted)) fail(out, "lift rejected");
            }
            SolveBudget budget;
            budget.wall_limit = r.budget.per_case;
            SolveResult solved = is_k_acyclic_colourable(ro.graph, k, budget);
            if (solved.outcome == Outcome::unknown) {
                skip(out, "solver budget exhausted");
                return;
            }
            bool acyclic3 = solved.outcome == Outcome::yes;
            if (colourable != acyclic3)
                fail(out, std::string("guarantee broken: input ") +
                              (colourable ? "yes" : "no") + ", output " +
                              (acyclic3 ? "yes" : "no"));
            if (out.verdict == Verdict::pass)
                out.detail = std::to_string(ro.graph.vertex_count()) + " vertices, " +
                             (colourable ? "both yes" : "both no");
        });
    }
}

void suite_c3(SuiteRunner& r) {
    std::vector<std::pair<int, int>> params = {{3, 3}, {4, 4}};
    std::vector<std::pair<std::string, Graph>> inputs = {{"K2", complete(2)}, {"P3", path(3)}};
    for (auto [k, d] : params) {
        for (auto& [name, g] : inputs) {
            r.add("c3-k" + std::to_string(k) + "-d" + std::to_string(d) + "-" + name,
                  [&, k, d](CaseResult& out) {
                      ReductionOutput ro = construct_regular(g, k, d);
                      for (const std::string& claim : failed_claims(ro))
                          fail(out, "claim failed: " + claim);
                      if (is_k_acyclic_colourable(g, k).outcome != Outcome::yes) {
                          fail(out, "input unexpectedly not colourable");
                          return;
                      }
                      SolveBudget budget;
                      budget.wall_limit = r.budget.per_case;
                      SolveResult solved = is_k_acyclic_colourable(ro.graph, k, budget);
                      if (solved.outcome == Outcome::unknown) {
                          skip(out, "solver budget exhausted");
                          return;
                      }
                      if (solved.outcome != Outcome::yes) {
                          fail(out, "output not colourable although input is");
                          return;
                      }
                      // reverse direction: the witness restricted to copy 1
                      // must colour the input acyclically
                      Colouring restricted{k, std::vector<int>(g.vertex_count())};
                      for (int v = 0; v < ro.graph.vertex_count(); ++v) {
                          const Provenance& p = ro.provenance[v];
                          if (p.kind == Provenance::Kind::source_copy && p.copy == 1)
                              restricted.assignment[p.source_u] = (*solved.witness)(v);
                      }
                      if (!is_acyclic_colouring(g, restricted))
                          fail(out, "witness restriction is not an input witness");
                      if (out.verdict == Verdict::pass)
                          out.detail = std::to_string(ro.graph.vertex_count()) +
                                       " vertices, d-regular, both directions hold";
                  });
        }
    }
}

void suite_c4(SuiteRunner& r) {
    for (int n = 1; n <= 4; ++n) {
        r.add("all-graphs-n" + std::to_string(n), [n](CaseResult& out) {
            for (std::uint64_t mask = 0; mask < (1ull << (n * (n - 1) / 2)); ++mask) {
                Graph g = graph_from_mask(n, mask);
                ReductionOutput ro = construct_k23(g);
                for (const std::string& claim : failed_claims(ro))
                    fail(out, "claim failed: " + claim + " on " + dump_graph(g));
                ClassCountResult lhs =
                    count_classes(g, 3, Relation::swap, ColouringKind::proper);
                ClassCountResult rhs =
                    count_classes(ro.graph, 3, Relation::swap, ColouringKind::acyclic);
                if (!lhs.ok() || !rhs.ok()) {
                    fail(out, "count overflow on " + dump_graph(g));
                    return;
                }
                if (lhs.value.count != rhs.value.count) {
                    fail(out, "counts differ on " + dump_graph(g) + ": " +
                                  std::to_string(lhs.value.count) + " vs " +
                                  std::to_string(rhs.value.count));
                    return;
                }
            }
            out.detail = "swap-class counts equal on every labelled graph";
        });
    }
}

void suite_c5(SuiteRunner& r) {
    r.add("c5-K2-unique-swap-auto", [&r](CaseResult& out) {
        ReductionOutput ro = construct_swap_auto(complete(2));
        if (ro.graph.vertex_count() != 48)
            fail(out, "expected 48 vertices, got " + std::to_string(ro.graph.vertex_count()));
        for (const std::string& claim : failed_claims(ro)) fail(out, "claim failed: " + claim);
        CountCaps caps;
        caps.colouring_cap = 1'000'000;
        caps.automorphism_nodes = 10'000'000;
        caps.wall_limit = r.budget.per_case;
        ClassCountResult classes =
            count_classes(ro.graph, 3, Relation::swap_auto, ColouringKind::acyclic, caps);
        if (classes.status == CountStatus::budget) {
            skip(out, "enumeration budget exhausted");
            return;
        }
        if (!classes.ok()) {
            skip(out, "cap exceeded");
            return;
        }
        if (classes.value.count != 1)
            fail(out, "swap+auto classes = " + std::to_string(classes.value.count));
        else
            out.detail = "exactly one class up to swaps and automorphisms";
    });
}

void suite_c6(SuiteRunner& r) {
    std::vector<std::pair<std::string, Graph>> inputs = {
        {"C4", cycle(4)}, {"C5", cycle(5)}, {"P4", path(4)}};
    for (int q : {1, 2}) {
        for (auto& [name, g] : inputs) {
            r.add("c6-q" + std::to_string(q) + "-" + name, [&, q](CaseResult& out) {
                ReductionOutput ro = join_kq(g, q);
                NumberResult chi_in = acyclic_chromatic_number(g);
                NumberResult chi_out = acyclic_chromatic_number(ro.graph);
                if (!chi_in.value || !chi_out.value) {
                    fail(out, "solver returned unknown");
                    return;
                }
                if (*chi_out.value != q + *chi_in.value) {
                    fail(out, "join formula: chi_a = " + std::to_string(*chi_out.value) +
                                  ", expected " + std::to_string(q + *chi_in.value));
                    return;
                }
                Uniqueness lhs = is_unique(g, 3, Relation::swap_auto, ColouringKind::acyclic);
                Uniqueness rhs =
                    is_unique(ro.graph, 3 + q, Relation::swap_auto, ColouringKind::acyclic);
                if (lhs == Uniqueness::overflow || rhs == Uniqueness::overflow) {
                    skip(out, "uniqueness counting overflow");
                    return;
                }
                if (lhs != rhs) {
                    fail(out, "uniqueness status differs between input and join");
                    return;
                }
                out.detail = "chi_a " + std::to_string(*chi_in.value) + " -> " +
                             std::to_string(*chi_out.value) + ", status preserved";
            });
        }
    }
}

void suite_universal(SuiteRunner& r) {
    std::vector<std::pair<std::string, Graph>> inputs = {{"K23", complete_bipartite(2, 3)},
                                                         {"P4", path(4)}};
    for (auto& [name, g] : inputs) {
        r.add("universal-" + name, [&](CaseResult& out) {
            Graph plus = add_universal(g);
            ClassCountResult lhs = count_classes(g, 3, Relation::swap, ColouringKind::acyclic);
            ClassCountResult rhs =
                count_classes(plus, 4, Relation::swap, ColouringKind::acyclic);
            if (!lhs.ok() || !rhs.ok()) {
                fail(out, "count overflow");
                return;
            }
            if (lhs.value.count != rhs.value.count) {
                fail(out, "class counts differ: " + std::to_string(lhs.value.count) + " vs " +
                              std::to_string(rhs.value.count));
                return;
            }
            out.detail = std::to_string(lhs.value.count) + " classes preserved";
        });
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"lower-bounds", "gd-family", "chain-lemma", "c1", "c2",
            "c3",           "c4",        "c5",          "c6", "universal",
            "verifier-oracle"};
}

bool is_suite_name(const std::string& name) {
    auto names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, const SuiteBudget& budget) {
    SuiteRunner runner;
    runner.report.suite = name;
    runner.budget = budget;
    if (name == "lower-bounds")
        suite_lower_bounds(runner);
    else if (name == "gd-family")
        suite_gd_family(runner);
    else if (name == "chain-lemma")
        suite_chain_lemma(runner);
    else if (name == "c1")
        suite_c1(runner);
    else if (name == "c2")
        suite_c2(runner);
    else if (name == "c3")
        suite_c3(runner);
    else if (name == "c4")
        suite_c4(runner);
    else if (name == "c5")
        suite_c5(runner);
    else if (name == "c6")
        suite_c6(runner);
    else if (name == "universal")
        suite_universal(runner);
    else if (name == "verifier-oracle")
        suite_verifier_oracle(runner);
    else
        throw std::invalid_argument("unknown suite: " + name);
    return runner.report;
}

}  // namespace acyclic

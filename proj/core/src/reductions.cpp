#include "acyclic/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace acyclic {

std::string Provenance::to_string() const {
    switch (kind) {
        case Kind::source_copy:
            return "v" + std::to_string(source_u) + (copy ? "^(" + std::to_string(copy) + ")" : "");
        case Kind::chain:
            return "chain(" + std::to_string(source_u) + ")L" + std::to_string(level) + "." +
                   std::to_string(pos);
        case Kind::connector:
            return "e(" + std::to_string(source_u) + "," + std::to_string(source_v) + ")_" +
                   std::to_string(j);
        case Kind::filler_internal:
            return "filler(" + std::to_string(source_u) + ")#" + std::to_string(pos);
        case Kind::hub:
            return "u_" + std::to_string(pos);
    }
    return "?";
}

std::string Claim::to_string() const {
    switch (kind) {
        case Kind::bipartite:
            return "bipartite";
        case Kind::max_degree_le:
            return "max-degree<=" + std::to_string(value);
        case Kind::d_regular:
            return std::to_string(value) + "-regular";
        case Kind::two_degenerate:
            return "2-degenerate";
    }
    return "?";
}

std::vector<std::string> failed_claims(const ReductionOutput& out) {
    std::vector<std::string> failed;
    for (const Claim& c : out.claimed_properties) {
        bool ok = true;
        switch (c.kind) {
            case Claim::Kind::bipartite:
                ok = is_bipartite(out.graph).has_value();
                break;
            case Claim::Kind::max_degree_le:
                ok = max_degree(out.graph) <= c.value;
                break;
            case Claim::Kind::d_regular:
                ok = is_d_regular(out.graph, c.value);
                break;
            case Claim::Kind::two_degenerate:
                ok = is_k_degenerate(out.graph, 2).has_value();
                break;
        }
        if (!ok) failed.push_back(c.to_string());
    }
    return failed;
}

bool verify_claims(const ReductionOutput& out) { return failed_claims(out).empty(); }

ReductionOutput coleman_cai(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("coleman_cai requires k >= 3");
    const int n = g.vertex_count();
    ReductionOutput out;
    std::vector<Edge> edges;
    out.provenance.reserve(n + static_cast<size_t>(k) * g.edge_count());
    for (int v = 0; v < n; ++v)
        out.provenance.push_back({Provenance::Kind::source_copy, v, -1, 0, 0, 0, 0});
    int next = n;
    for (auto [u, v] : g.edges()) {
        for (int j = 1; j <= k; ++j) {
            edges.emplace_back(u, next);
            edges.emplace_back(v, next);
            out.provenance.push_back({Provenance::Kind::connector, u, v, 0, 0, 0, j});
            ++next;
        }
    }
    out.graph = Graph::from_edges(next, std::move(edges));
    out.claimed_properties = {{Claim::Kind::two_degenerate, 0}, {Claim::Kind::bipartite, 0}};
    return out;
}

namespace {

/// Chain layout shared by Constructions 2 and 5: per source vertex v a
/// chain gadget with t(v) even levels, the first wired_blocks(v)*k of its
/// terminals reserved k per neighbour in ascending neighbour order.
struct ChainPlan {
    int k = 0;
    std::vector<int> t;            // terminals (= even levels) per source vertex
    std::vector<int> chain_start;  // first output index of each chain
    int total = 0;                 // total vertex count including connectors
    int connectors = 0;            // k per source edge, indices 0..connectors-1

    // terminal j (1-based) of v's block for its b-th neighbour (0-based)
    int terminal(const Graph& g, int v, int b, int j) const {
        int i = b * k + j;  // 1-based even-level index of the terminal
        return chain_start[v] + (i - 1) * (2 * k - 1) + (2 * k - 2);
    }
};

ChainPlan plan_chains(const Graph& g, int k, const std::vector<int>& terminals_per_vertex) {
    ChainPlan plan;
    plan.k = k;
    plan.t = terminals_per_vertex;
    plan.connectors = k * g.edge_count();
    plan.chain_start.resize(g.vertex_count());
    int next = plan.connectors;
    for (int v = 0; v < g.vertex_count(); ++v) {
        plan.chain_start[v] = next;
        next += plan.t[v] * (2 * k - 1);
    }
    plan.total = next;
    return plan;
}

ReductionOutput build_chain_reduction(const Graph& g, const ChainPlan& plan) {
    const int k = plan.k;
    ReductionOutput out;
    out.provenance.assign(plan.total, {});
    std::vector<Edge> edges;

    const int block = 2 * k - 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (plan.t[v] == 0) continue;  // isolated source vertices leave no trace
        GadgetGraph chain = chain_gadget(k, plan.t[v]);
        const int base = plan.chain_start[v];
        for (Edge e : chain.graph.edges()) edges.emplace_back(base + e.first, base + e.second);
        for (int i = 1; i <= plan.t[v]; ++i) {
            for (int p = 1; p <= k - 1; ++p)
                out.provenance[base + (i - 1) * block + (p - 1)] =
                    {Provenance::Kind::chain, v, -1, 0, 2 * i - 1, p, 0};
            for (int p = 1; p <= k; ++p)
                out.provenance[base + (i - 1) * block + (k - 1) + (p - 1)] =
                    {Provenance::Kind::chain, v, -1, 0, 2 * i, p, 0};
        }
    }

    // Connectors: k per source edge, wired to the j-th reserved terminal of
    // each endpoint's block for the other endpoint.
    int edge_index = 0;
    for (auto [u, v] : g.edges()) {
        auto nb_u = g.neighbours(u);
        auto nb_v = g.neighbours(v);
        int bu = static_cast<int>(std::lower_bound(nb_u.begin(), nb_u.end(), v) - nb_u.begin());
        int bv = static_cast<int>(std::lower_bound(nb_v.begin(), nb_v.end(), u) - nb_v.begin());
        for (int j = 1; j <= k; ++j) {
            int connector = edge_index * k + (j - 1);
            edges.emplace_back(connector, plan.terminal(g, u, bu, j));
            edges.emplace_back(connector, plan.terminal(g, v, bv, j));
            out.provenance[connector] = {Provenance::Kind::connector, u, v, 0, 0, 0, j};
        }
        ++edge_index;
    }

    out.graph = Graph::from_edges(plan.total, std::move(edges));
    return out;
}

}  // namespace

ReductionOutput construct_bipartite_delta_k_plus_1(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("construction requires k >= 3");
    if (max_degree(g) > 2 * (k - 1))
        throw std::invalid_argument("input violates max degree <= 2(k-1) = " +
                                    std::to_string(2 * (k - 1)));
    std::vector<int> t(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) t[v] = k * g.degree(v);
    ReductionOutput out = build_chain_reduction(g, plan_chains(g, k, t));
    out.claimed_properties = {{Claim::Kind::bipartite, 0}, {Claim::Kind::max_degree_le, k + 1}};
    return out;
}

Colouring lift_colouring_c2(const ReductionOutput& out, const Graph& source, const Colouring& f) {
    if (!is_proper(source, f))
        throw std::invalid_argument("lift requires a proper colouring of the source");
    const int k = f.palette_size;
    Colouring lifted{k, std::vector<int>(out.graph.vertex_count(), -1)};
    for (int x = 0; x < out.graph.vertex_count(); ++x) {
        const Provenance& p = out.provenance[x];
        if (p.kind == Provenance::Kind::chain) {
            // canonical scheme with colour 0 swapped with f(v)
            int fv = f(p.source_u);
            int canonical = (p.level % 2 == 0) ? 0 : p.pos;
            int c = canonical == 0 ? fv : (canonical == fv ? 0 : canonical);
            lifted.assignment[x] = c;
        } else if (p.kind == Provenance::Kind::connector) {
            int c = 0;
            while (c == f(p.source_u) || c == f(p.source_v)) ++c;
            lifted.assignment[x] = c;
        } else {
            throw std::invalid_argument("output is not a chain reduction");
        }
    }
    return lifted;
}

ReductionOutput construct_regular(const Graph& g, int k, int d) {
    if (k < 3) throw std::invalid_argument("construction requires k >= 3");
    if (d > 2 * k - 3)
        throw std::invalid_argument("input violates d <= 2k-3 = " + std::to_string(2 * k - 3));
    if (max_degree(g) > d)
        throw std::invalid_argument("input violates max degree <= d = " + std::to_string(d));
    if (d < 2) throw std::invalid_argument("filler gadgets need d >= 2");

    const int n = g.vertex_count();
    GadgetGraph filler = filler_gadget(d);
    const int fn = filler.graph.vertex_count();  // includes the two pendant terminals

    // Assemble: copy 1 on 0..n-1, copy 2 on n..2n-1, then one filler block
    // per deficiency unit; afterwards identify each filler's terminals onto
    // the two copies of its vertex.
    Graph assembled = disjoint_union(g, g);
    std::vector<Provenance> prov;
    prov.reserve(2 * n);
    for (int v = 0; v < n; ++v) prov.push_back({Provenance::Kind::source_copy, v, -1, 1, 0, 0, 0});
    for (int v = 0; v < n; ++v) prov.push_back({Provenance::Kind::source_copy, v, -1, 2, 0, 0, 0});

    std::vector<std::vector<int>> groups(2 * n);
    for (int v = 0; v < n; ++v) {
        groups[v].push_back(v);
        groups[n + v].push_back(n + v);
    }
    int instance = 0;
    for (int v = 0; v < n; ++v) {
        for (int copy = 0; copy < d - g.degree(v); ++copy) {
            int base = assembled.vertex_count();
            assembled = disjoint_union(assembled, filler.graph);
            for (int x = 0; x < fn; ++x)
                prov.push_back({Provenance::Kind::filler_internal, v, -1, 0, 0, instance, x});
            groups[v].push_back(base + filler.terminals[0]);
            groups[n + v].push_back(base + filler.terminals[1]);
            ++instance;
        }
    }
    IdentifyResult identified = identify_vertices_mapped(assembled, groups);

    ReductionOutput out;
    out.graph = std::move(identified.graph);
    out.provenance.assign(out.graph.vertex_count(), {});
    std::vector<bool> claimed(out.graph.vertex_count(), false);
    // First-wins: source copies claim their slots before the filler
    // terminals that collapsed onto them.
    for (int old = 0; old < static_cast<int>(prov.size()); ++old) {
        int now = identified.vertex_map[old];
        if (claimed[now]) continue;
        claimed[now] = true;
        out.provenance[now] = prov[old];
    }
    out.claimed_properties = {{Claim::Kind::d_regular, d}};
    return out;
}

ReductionOutput construct_k23(const Graph& g) {
    if (max_degree(g) > 8) throw std::invalid_argument("input violates max degree <= 8");
    ReductionOutput out = coleman_cai(g, 3);
    out.claimed_properties = {{Claim::Kind::two_degenerate, 0},
                              {Claim::Kind::bipartite, 0},
                              {Claim::Kind::max_degree_le, 24}};
    return out;
}

ReductionOutput construct_swap_auto(const Graph& g) {
    if (max_degree(g) > 8) throw std::invalid_argument("input violates max degree <= 8");
    const int n = g.vertex_count();
    // lambda(v_i) = i along an ordering by ascending degree, ties by index
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    std::vector<int> lambda(n);
    for (int i = 0; i < n; ++i) lambda[order[i]] = i + 1;

    std::vector<int> t(n);
    for (int v = 0; v < n; ++v) t[v] = 3 * g.degree(v) + lambda[v];
    ReductionOutput out = build_chain_reduction(g, plan_chains(g, 3, t));
    out.claimed_properties = {{Claim::Kind::bipartite, 0}, {Claim::Kind::max_degree_le, 4}};
    return out;
}

ReductionOutput join_kq(const Graph& g, int q) {
    if (q < 1) throw std::invalid_argument("join_kq requires q >= 1");
    if (auto u = has_universal_vertex(g))
        throw std::invalid_argument("input has universal vertex " + std::to_string(*u));
    ReductionOutput out;
    out.graph = join(g, complete(q));
    for (int v = 0; v < g.vertex_count(); ++v)
        out.provenance.push_back({Provenance::Kind::source_copy, v, -1, 0, 0, 0, 0});
    for (int j = 1; j <= q; ++j)
        out.provenance.push_back({Provenance::Kind::hub, -1, -1, 0, 0, j, 0});
    return out;
}

Graph add_universal(const Graph& g) { return join(g, complete(1)); }

}  // namespace acyclic

#pragma once

// Brute-force oracles shared by the unit tests. Everything here recomputes
// the quantity under test by the most literal method available and stays
// independent of the implementation path it checks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "acyclic/colouring.hpp"
#include "acyclic/graph.hpp"

namespace testutil {

using acyclic::Colouring;
using acyclic::Edge;
using acyclic::Graph;

/// Graph from an edge bitmask over the C(n,2) pairs in (0,1),(0,2),...
/// order; the unit sweeps enumerate all labelled graphs this way.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

inline std::uint64_t mask_count(int n) { return 1ull << (n * (n - 1) / 2); }

/// Every simple cycle as a vertex list (no closure duplicate), rooted at
/// its smallest vertex, listed once.
inline std::vector<std::vector<int>> all_cycles(const Graph& g) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> pathv;
    std::vector<bool> onpath(g.vertex_count(), false);
    std::function<void(int, int)> extend = [&](int root, int u) {
        for (int w : g.neighbours(u)) {
            if (w == root && pathv.size() >= 3) {
                if (pathv[1] < pathv.back()) cycles.push_back(pathv);
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
    for (int root = 0; root < g.vertex_count(); ++root) {
        pathv = {root};
        std::fill(onpath.begin(), onpath.end(), false);
        onpath[root] = true;
        extend(root, root);
    }
    return cycles;
}

inline bool oracle_is_proper(const Graph& g, const Colouring& f) {
    for (auto [u, v] : g.edges())
        if (f(u) == f(v)) return false;
    return true;
}

/// Acyclic-colouring oracle by explicit cycle enumeration.
inline bool oracle_is_acyclic(const Graph& g, const Colouring& f) {
    if (!oracle_is_proper(g, f)) return false;
    for (const auto& cycle : all_cycles(g)) {
        std::vector<int> used;
        for (int v : cycle)
            if (std::find(used.begin(), used.end(), f(v)) == used.end()) used.push_back(f(v));
        if (used.size() == 2) return false;
    }
    return true;
}

/// All assignments in lexicographic order, filtered by the oracle.
inline std::vector<Colouring> oracle_enumerate(const Graph& g, int k, bool acyclic) {
    std::vector<Colouring> out;
    const int n = g.vertex_count();
    std::vector<int> assign(n, 0);
    if (n == 0) {
        out.push_back(Colouring{k, {}});
        return out;
    }
    if (k == 0) return out;
    while (true) {
        Colouring f{k, assign};
        if (acyclic ? oracle_is_acyclic(g, f) : oracle_is_proper(g, f)) out.push_back(f);
        int i = n - 1;
        while (i >= 0 && assign[i] == k - 1) assign[i--] = 0;
        if (i < 0) break;
        ++assign[i];
    }
    return out;
}

inline bool oracle_decide_acyclic(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    if (k == 0) return false;
    std::vector<int> assign(n, 0);
    while (true) {
        if (oracle_is_acyclic(g, Colouring{k, assign})) return true;
        int i = n - 1;
        while (i >= 0 && assign[i] == k - 1) assign[i--] = 0;
        if (i < 0) return false;
        ++assign[i];
    }
}

/// Degeneracy as max over subgraphs of min degree, by subset sweep (n <= 20).
inline int oracle_degeneracy(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int mindeg = n;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) mindeg = std::min(mindeg, std::popcount(adj[v] & mask));
        best = std::max(best, mindeg);
    }
    return best;
}

inline bool oracle_has_odd_cycle(const Graph& g) {
    for (const auto& cycle : all_cycles(g))
        if (cycle.size() % 2 == 1) return true;
    return false;
}

inline std::mt19937 seeded_rng() { return std::mt19937{0xacc01adeu}; }

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace testutil

#include "acyclic/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace acyclic {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.edges_ = std::move(edges);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

bool is_d_regular(const Graph& g, int d) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

std::vector<int> Bipartition::left() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(side.size()); ++v)
        if (side[v] == 0) out.push_back(v);
    return out;
}

std::vector<int> Bipartition::right() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(side.size()); ++v)
        if (side[v] == 1) out.push_back(v);
    return out;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    std::queue<int> queue;
    for (int start = 0; start < n; ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        queue.push(start);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w : g.neighbours(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    queue.push(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return Bipartition{std::move(side)};
}

std::optional<std::vector<int>> is_k_degenerate(const Graph& g, int k) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<bool> removed(n, false);
    std::vector<int> removal;
    removal.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (!removed[v] && deg[v] <= k) {
                pick = v;
                break;
            }
        }
        if (pick == -1) return std::nullopt;
        removed[pick] = true;
        removal.push_back(pick);
        for (int w : g.neighbours(pick))
            if (!removed[w]) --deg[w];
    }
    // Reversed removal sequence: each vertex has <= k neighbours to its left.
    std::reverse(removal.begin(), removal.end());
    return removal;
}

std::optional<int> has_universal_vertex(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1 && n > 1) return v;
    if (n == 1) return 0;  // single vertex is trivially universal
    return std::nullopt;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const int shift = a.vertex_count();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph::from_edges(shift + b.vertex_count(), std::move(edges));
}

Graph join(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const int shift = a.vertex_count();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int v = 0; v < b.vertex_count(); ++v) edges.emplace_back(u, v + shift);
    return Graph::from_edges(shift + b.vertex_count(), std::move(edges));
}

IdentifyResult identify_vertices_mapped(const Graph& g,
                                        const std::vector<std::vector<int>>& groups) {
    const int n = g.vertex_count();
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    std::vector<bool> grouped(n, false);
    for (const auto& group : groups) {
        if (group.empty()) continue;
        int r = *std::min_element(group.begin(), group.end());
        for (int v : group) {
            if (v < 0 || v >= n) throw std::invalid_argument("group vertex out of range");
            if (grouped[v] && rep[v] != r)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " appears in more than one group");
            grouped[v] = true;
            rep[v] = r;
        }
        for (size_t i = 0; i < group.size(); ++i)
            for (size_t j = i + 1; j < group.size(); ++j)
                if (g.has_edge(group[i], group[j]))
                    throw std::invalid_argument(
                        "identifying adjacent vertices " + std::to_string(group[i]) + " and " +
                        std::to_string(group[j]) + " would create a self-loop");
    }
    // Compact representatives in increasing order.
    std::vector<int> new_index(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (rep[v] == v) new_index[v] = next++;
    std::vector<int> vertex_map(n);
    for (int v = 0; v < n; ++v) vertex_map[v] = new_index[rep[v]];

    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        int a = vertex_map[u], b = vertex_map[v];
        if (a != b) edges.emplace_back(a, b);
    }
    return {Graph::from_edges(next, std::move(edges)), std::move(vertex_map)};
}

Graph identify_vertices(const Graph& g, const std::vector<std::vector<int>>& groups) {
    return identify_vertices_mapped(g, groups).graph;
}

Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

Graph complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph path(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("sides must be positive");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, std::move(edges));
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    return Graph::from_edges(10, std::move(edges));
}

}  // namespace acyclic

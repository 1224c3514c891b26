#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace acyclic {

/// Unordered edge, normalized so that first < second.
using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on dense vertex indices 0..n-1.
///
/// Invariants enforced at construction: no self-loops, no parallel edges,
/// adjacency lists sorted and symmetric. All composition operators return
/// fresh graphs, so instances can be shared freely across threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Edges may be given in any order
    /// and orientation; duplicates are merged. Throws std::invalid_argument
    /// on self-loops or endpoints outside [0, n).
    static Graph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edge list sorted lexicographically, each pair with first < second.
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const int> neighbours(int v) const {
        return {adj_[v].data(), adj_[v].size()};
    }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

int max_degree(const Graph& g);
bool is_d_regular(const Graph& g, int d);

/// Two-sided partition certificate: side[v] is 0 or 1 and no edge joins
/// equal sides.
struct Bipartition {
    std::vector<int> side;
    std::vector<int> left() const;
    std::vector<int> right() const;
};

/// BFS 2-colouring. Returns the certificate when the graph is bipartite.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// Returns an ordering where every vertex has at most k earlier neighbours,
/// or nullopt when no such ordering exists.
std::optional<std::vector<int>> is_k_degenerate(const Graph& g, int k);

/// Some vertex adjacent to all others, if present (smallest index).
std::optional<int> has_universal_vertex(const Graph& g);

/// Disjoint union; indices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Disjoint union plus all |a|*|b| cross edges.
Graph join(const Graph& a, const Graph& b);

struct IdentifyResult {
    Graph graph;
    std::vector<int> vertex_map;  // old index -> new index
};

/// Collapses each group to a single vertex, merging parallel edges.
/// Ungrouped vertices survive as singletons. New indices are assigned in
/// increasing order of each class's smallest old index. Throws
/// std::invalid_argument if a group contains two adjacent vertices (the
/// collapse would create a self-loop) or repeats a vertex across groups.
IdentifyResult identify_vertices_mapped(const Graph& g,
                                        const std::vector<std::vector<int>>& groups);
Graph identify_vertices(const Graph& g, const std::vector<std::vector<int>>& groups);

Graph empty_graph(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);

/// K_{a,b} with the a-side on indices 0..a-1 and the b-side after it.
Graph complete_bipartite(int a, int b);

Graph petersen();

}  // namespace acyclic

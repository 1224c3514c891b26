#pragma once

#include <string>
#include <vector>

#include "acyclic/colouring.hpp"
#include "acyclic/gadgets.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

/// Where an output vertex came from.
struct Provenance {
    enum class Kind { source_copy, chain, connector, filler_internal, hub };
    Kind kind = Kind::source_copy;
    int source_u = -1;  // source vertex, or edge endpoint u
    int source_v = -1;  // edge endpoint v (connectors only)
    int copy = 0;       // 1 or 2 for duplicated source copies
    int level = 0;      // chain level
    int pos = 0;        // position within a chain level, filler instance, or hub index
    int j = 0;          // connector index within its edge

    std::string to_string() const;
};

/// Declarative property the construction promises; verified after the fact
/// by graph-core predicates, never assumed.
struct Claim {
    enum class Kind { bipartite, max_degree_le, d_regular, two_degenerate };
    Kind kind;
    int value = 0;

    std::string to_string() const;
};

struct ReductionOutput {
    Graph graph;
    std::vector<Provenance> provenance;
    std::vector<Claim> claimed_properties;
};

/// True iff every claimed property passes its predicate.
bool verify_claims(const ReductionOutput& out);
std::vector<std::string> failed_claims(const ReductionOutput& out);

/// Replaces each edge uv by a K_{2,k} with parts {u,v} and k fresh
/// vertices. Output is 2-degenerate and bipartite; k-colourability of the
/// input is equivalent to k-acyclic colourability of the output. k >= 3.
ReductionOutput coleman_cai(const Graph& g, int k);

/// Replaces each vertex by a chain gadget with k*deg(v) terminals (k per
/// neighbour, ascending neighbour order) and wires k fresh connectors per
/// edge. Requires max_degree(g) <= 2(k-1); output is bipartite with
/// maximum degree at most k+1 and exactly (2k^2-k)*2m + k*m vertices.
/// Connectors occupy indices 0..km-1; chain vertices follow in source
/// vertex order.
ReductionOutput construct_bipartite_delta_k_plus_1(const Graph& g, int k);

/// The explicit acyclic colouring of construct_bipartite_delta_k_plus_1's
/// output induced by a proper k-colouring of the source: each chain gets
/// the canonical scheme with colour 0 swapped with f(v); each connector
/// takes the smallest colour outside {f(u), f(v)}.
Colouring lift_colouring_c2(const ReductionOutput& out, const Graph& source, const Colouring& f);

/// Two copies of g plus d-deg(v) filler gadgets per vertex, terminals
/// identified onto the two copies of v. Requires max_degree(g) <= d <=
/// 2k-3 and d >= 2; output is d-regular and preserves k-acyclic
/// colourability in both directions.
ReductionOutput construct_regular(const Graph& g, int k, int d);

/// coleman_cai with k = 3: preserves the number of 3-colourings up to
/// colour swaps as the number of 3-acyclic colourings up to colour swaps.
/// Requires max_degree(g) <= 8.
ReductionOutput construct_k23(const Graph& g);

/// Chain gadgets with 3*deg(v) + lambda(v) terminals, lambda(v_i) = i
/// after sorting vertices by ascending degree (ties by index), three
/// connectors per edge wired to the first three reserved terminals per
/// neighbour. Requires max_degree(g) <= 8; output bipartite, max degree 4.
ReductionOutput construct_swap_auto(const Graph& g);

/// Graph join of g with K_q; hub vertices carry provenance. Rejects
/// inputs with a universal vertex.
ReductionOutput join_kq(const Graph& g, int q);

/// join(g, K_1): the universal-vertex induction step.
Graph add_universal(const Graph& g);

}  // namespace acyclic

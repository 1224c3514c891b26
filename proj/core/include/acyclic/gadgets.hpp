#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acyclic/colouring.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

enum class Role { plain, terminal, connector, chain_level, copy_one, copy_two, filler_internal };

/// Metadata attached to each vertex of a generated gadget. `param` carries
/// the level for chain_level roles and is unused otherwise.
struct VertexTag {
    std::string label;
    Role role = Role::plain;
    int param = 0;
};

/// A graph together with the role metadata its generator promises:
/// designated terminals (the only vertices allowed outside neighbours),
/// per-vertex tags, and the generator's canonical colouring when one is
/// part of the construction.
struct GadgetGraph {
    Graph graph;
    std::vector<int> terminals;
    std::vector<VertexTag> tags;
    std::optional<Colouring> canonical_colouring;
};

/// (2p+1)-regular graph on pairs (i,j), 0 <= i,j <= p+1, i != j, with
/// (i,j) ~ (k,l) iff j == k or i == l. Vertices are indexed by
/// lexicographic pair order; the canonical colouring is f((i,j)) = i with
/// palette p+2.
GadgetGraph g_odd(int p);

/// g_odd(p) minus the perfect matching {(i,j),(j,i)}: 2p-regular, same
/// vertex set and canonical colouring. p >= 1.
GadgetGraph g_even(int p);

/// Dispatches to g_odd((d-1)/2) or g_even(d/2). d >= 1.
GadgetGraph g_d(int d);

/// 2t levels; odd level 2i-1 holds k-1 vertices, even level 2i holds k
/// vertices whose last is terminal v'_i; complete bipartite between levels
/// 2i-1 and 2i; position-j matching from each even level to the next odd
/// level (j <= k-1). Vertices are indexed level by level. The canonical
/// colouring puts 0 on even levels and 1..k-1 left to right on odd levels.
/// k >= 3, t >= 1.
GadgetGraph chain_gadget(int k, int t);

/// g_d(d) minus its lexicographically smallest edge xy, plus one pendant
/// terminal at x and one at y (indices n, n+1). Every non-terminal vertex
/// has degree d. d >= 2.
GadgetGraph filler_gadget(int d);

/// A k-acyclic colouring of filler_gadget(d) with colour c1 at x, c2 at y
/// and cv on both terminals, obtained from the canonical g_d colouring by
/// a colour permutation. Requires pairwise distinct c1, c2, cv below k and
/// k >= ceil((d+3)/2).
Colouring filler_colouring(int d, int k, int c1, int c2, int cv);

/// Named cubic test graphs: "k4", "q3" (the 3-cube) and "dual-p4-k2" (the
/// dual of the join of P_4 and K_2), the three cubic planar 3-connected
/// graphs conjectured to be the only ones needing four colours.
GadgetGraph exception_graph(const std::string& name);

}  // namespace acyclic

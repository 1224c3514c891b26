#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "acyclic/graph.hpp"

namespace acyclic {

/// Total assignment vertex -> colour in {0, ..., palette_size-1}.
struct Colouring {
    int palette_size = 0;
    std::vector<int> assignment;

    int operator()(int v) const { return assignment[v]; }
    bool operator==(const Colouring& other) const = default;
};

/// A cycle using exactly two colours. The vertex sequence is closed:
/// front() == back(), consecutive vertices adjacent, length >= 4 entries.
struct CycleWitness {
    std::vector<int> cycle;
    int colour_a = 0;
    int colour_b = 0;
};

/// Throws std::invalid_argument when f does not cover g or uses colours
/// outside the palette.
bool is_proper(const Graph& g, const Colouring& f);

/// Finds a cycle inside some G[V_i u V_j], or nullopt when every pair of
/// colour classes induces a forest. The witness is the first one met by a
/// fixed scan (colour pairs in increasing order, DFS from the smallest
/// vertex, neighbours ascending), so failures reproduce exactly.
/// Throws std::invalid_argument when f is improper: a monochromatic edge
/// makes "bicoloured" ambiguous.
std::optional<CycleWitness> find_bicoloured_cycle(const Graph& g, const Colouring& f);

/// Proper and no pair of colour classes induces a cycle. Improper
/// assignments simply return false.
bool is_acyclic_colouring(const Graph& g, const Colouring& f);

/// Text format: line `k <palette>`, then `<vertex> <colour>` pairs.
Colouring read_colouring(std::istream& in);
Colouring read_colouring_file(const std::string& path);
void write_colouring(const Colouring& f, std::ostream& out);
void write_colouring_file(const Colouring& f, const std::string& path);

}  // namespace acyclic

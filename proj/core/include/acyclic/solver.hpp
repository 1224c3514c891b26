#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "acyclic/colouring.hpp"
#include "acyclic/graph.hpp"
#include "acyclic/rational.hpp"

namespace acyclic {

/// Search limits. An exceeded budget yields `unknown`, never a wrong
/// yes/no.
struct SolveBudget {
    std::optional<std::uint64_t> node_limit;
    std::optional<std::chrono::milliseconds> wall_limit;
};

enum class Outcome { yes, no, unknown };

struct SolveOptions {
    bool density_prune = true;   // refuse k <= 1 + m/n outright (exact rationals)
    bool regular_prune = true;   // refuse k < ceil((d+3)/2) on d-regular inputs
    bool backjumping = true;     // conflict-directed backjumping; off = chronological
    int workers = 1;             // >1 splits the first branching vertex's colours
};

struct SolveResult {
    Outcome outcome = Outcome::unknown;
    std::optional<Colouring> witness;  // present iff outcome == yes
    std::uint64_t nodes = 0;
};

/// Exact decision: does g admit a k-acyclic colouring? A yes always carries
/// a witness that passes is_acyclic_colouring (asserted internally); a no
/// means the search space was exhausted.
SolveResult is_k_acyclic_colourable(const Graph& g, int k, const SolveBudget& budget = {},
                                    const SolveOptions& options = {});

/// Plain proper-colouring decision with witness.
SolveResult is_k_colourable(const Graph& g, int k, const SolveBudget& budget = {},
                            const SolveOptions& options = {});

struct NumberResult {
    std::optional<int> value;  // empty = unknown (budget exhausted)
    std::uint64_t nodes = 0;
};

/// Smallest k admitting an acyclic colouring. The search starts at the
/// strict ceiling of the density bound (and the regular bound when it
/// applies), so the first few refutations are free.
NumberResult acyclic_chromatic_number(const Graph& g, const SolveBudget& budget = {},
                                      const SolveOptions& options = {});

struct EnumerateResult {
    std::vector<Colouring> colourings;
    bool overflow = false;          // more than cap exist; list holds the first cap
    bool budget_exhausted = false;  // wall limit hit before the sweep finished
};

/// Every k-acyclic colouring exactly once, in lexicographic assignment
/// order.
EnumerateResult enumerate_acyclic_colourings(const Graph& g, int k, std::uint64_t cap,
                                             std::optional<std::chrono::milliseconds> wall = {});
EnumerateResult enumerate_proper_colourings(const Graph& g, int k, std::uint64_t cap,
                                            std::optional<std::chrono::milliseconds> wall = {});

/// Lower bounds on the acyclic chromatic number, all exact.
///   density_bound: 1 + m/n, a strict lower bound for non-empty graphs.
///   regular_bound: ceil((d+3)/2) for d-regular inputs, d >= 1.
///   mad_bound:     1 + mad/2, strict; brute-forced, so only for n <= 20.
struct BoundReport {
    Rational density_bound;
    std::optional<int> regular_bound;
    std::optional<Rational> mad_bound;
};

/// mad computation is refused (std::invalid_argument) when enable_mad is
/// set and the graph has more than 20 vertices.
BoundReport bound_report(const Graph& g, bool enable_mad);

/// Maximum average degree, exact, by sweep over vertex subsets. n <= 20.
Rational max_average_degree(const Graph& g);

/// d <= 0.38 * k^(3/4), decided in exact integer arithmetic
/// (d^4 * 100^4 <= 38^4 * k^3). In this regime every graph of maximum
/// degree d is k-acyclic colourable, so the decision problem is trivially
/// yes. Requires k >= 3.
bool trivial_yes_threshold(int k, int d);

/// k * (k - 1 + ceil(sqrt(k))): the maximum degree at which hardness of
/// k-acyclic colourability follows from plain k-colourability. k >= 3.
long long npc_degree_bound(int k);

enum class RegularRegime { always_no, open, candidate_npc };

/// Hardness map for k-acyclic colourability at degree d, k >= 3:
///   candidate_npc for k+1 <= d <= max(2k-3, k+1), the proven NP-complete
///     window (at k = 3 the window degenerates to the single point d = 4,
///     where only the maximum-degree variant is hard);
///   always_no for d >= 2k-2 otherwise: every d-regular graph needs more
///     than k colours, by the regular lower bound;
///   open below.
RegularRegime regular_regime(int k, int d);

}  // namespace acyclic

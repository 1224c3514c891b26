#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "acyclic/colouring.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

/// Relabels colours by order of first appearance along vertex index order.
/// Idempotent; two colourings have equal canonical forms iff they differ by
/// a colour permutation.
Colouring canonical_under_swaps(const Colouring& f);

/// Edge-preserving vertex bijection.
struct Automorphism {
    std::vector<int> perm;
    int operator()(int v) const { return perm[v]; }
    bool operator==(const Automorphism& other) const = default;
};

/// f composed with the inverse of psi: the colouring g with
/// g(psi(v)) = f(v).
Colouring apply_automorphism(const Colouring& f, const Automorphism& psi);

struct AutomorphismList {
    std::vector<Automorphism> items;
    bool overflow = false;
};

/// Complete automorphism list via backtracking over a degree/neighbourhood
/// refinement of the vertex set. Overflow (node cap exceeded) is reported,
/// never silently truncated output.
AutomorphismList automorphisms(const Graph& g, std::uint64_t node_cap = 1'000'000);

enum class Relation { swap, swap_auto };
enum class ColouringKind { proper, acyclic };

struct CountCaps {
    std::uint64_t colouring_cap = 1'000'000;
    std::uint64_t automorphism_nodes = 1'000'000;
    std::optional<std::chrono::milliseconds> wall_limit;
};

struct ClassCount {
    Relation relation;
    ColouringKind kind;
    int k = 0;
    std::uint64_t count = 0;
    std::optional<std::vector<Colouring>> representatives;
};

enum class CountStatus { ok, colouring_overflow, automorphism_overflow, budget };

struct ClassCountResult {
    CountStatus status = CountStatus::ok;
    ClassCount value;
    bool ok() const { return status == CountStatus::ok; }
};

/// Exact number of colourings of the given kind up to the given relation.
/// swap: distinct canonical forms. swap_auto: canonical forms additionally
/// merged when some automorphism maps one onto another (union-find over
/// forms). Representatives (lexicographically smallest form per class) are
/// attached when there are at most 64 classes.
ClassCountResult count_classes(const Graph& g, int k, Relation relation, ColouringKind kind,
                               const CountCaps& caps = {});

enum class AnotherStatus { found, none, overflow };

struct AnotherResult {
    AnotherStatus status = AnotherStatus::none;
    std::optional<Colouring> witness;
};

/// A colouring of the same kind not related to f, if one exists. Throws
/// std::invalid_argument when f is not a valid colouring of the stated
/// kind.
AnotherResult another_colouring(const Graph& g, const Colouring& f, Relation relation,
                                ColouringKind kind, const CountCaps& caps = {});

enum class Uniqueness { unique, not_unique, none_exist, overflow };

Uniqueness is_unique(const Graph& g, int k, Relation relation, ColouringKind kind,
                     const CountCaps& caps = {});

}  // namespace acyclic

#include "acyclic/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "acyclic/solver.hpp"

namespace acyclic {

Colouring canonical_under_swaps(const Colouring& f) {
    Colouring out{f.palette_size, std::vector<int>(f.assignment.size())};
    std::vector<int> relabel(f.palette_size, -1);
    int next = 0;
    for (size_t v = 0; v < f.assignment.size(); ++v) {
        int c = f.assignment[v];
        if (relabel[c] == -1) relabel[c] = next++;
        out.assignment[v] = relabel[c];
    }
    return out;
}

Colouring apply_automorphism(const Colouring& f, const Automorphism& psi) {
    Colouring out{f.palette_size, std::vector<int>(f.assignment.size())};
    for (size_t v = 0; v < f.assignment.size(); ++v) out.assignment[psi.perm[v]] = f.assignment[v];
    return out;
}

namespace {

/// Iterated degree refinement (1-WL): vertices can only map onto vertices
/// in the same stable class.
std::vector<int> refine_classes(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> cls(n);
    for (int v = 0; v < n; ++v) cls[v] = g.degree(v);
    // normalize
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            nb.reserve(g.degree(v));
            for (int w : g.neighbours(v)) nb.push_back(cls[w]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {cls[v], std::move(nb)};
        }
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            auto it = ids.find(sig[v]);
            if (it == ids.end()) it = ids.emplace(sig[v], static_cast<int>(ids.size())).first;
            next[v] = it->second;
        }
        if (next == cls) return cls;
        cls = std::move(next);
    }
}

struct AutSearch {
    const Graph& g;
    int n;
    std::uint64_t cap;
    std::uint64_t nodes = 0;
    bool overflow = false;
    std::vector<int> cls;
    std::vector<int> image;      // domain vertex -> image, -1 unset
    std::vector<bool> used;      // image vertex taken
    std::vector<Automorphism> found;

    void rec(int v) {
        if (overflow) return;
        if (v == n) {
            found.push_back(Automorphism{image});
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || cls[w] != cls[v]) continue;
            if (++nodes > cap) {
                overflow = true;
                return;
            }
            bool ok = true;
            // adjacency with every already-mapped vertex must be preserved
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) != g.has_edge(image[u], w)) ok = false;
            if (!ok) continue;
            image[v] = w;
            used[w] = true;
            rec(v + 1);
            used[w] = false;
            image[v] = -1;
            if (overflow) return;
        }
    }
};

}  // namespace

AutomorphismList automorphisms(const Graph& g, std::uint64_t node_cap) {
    const int n = g.vertex_count();
    AutSearch search{g, n, node_cap};
    search.cls = refine_classes(g);
    search.image.assign(n, -1);
    search.used.assign(n, false);
    search.rec(0);
    if (search.overflow) return {{}, true};
    return {std::move(search.found), false};
}

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

EnumerateResult enumerate_kind(const Graph& g, int k, ColouringKind kind, std::uint64_t cap,
                               std::optional<std::chrono::milliseconds> wall) {
    return kind == ColouringKind::acyclic ? enumerate_acyclic_colourings(g, k, cap, wall)
                                          : enumerate_proper_colourings(g, k, cap, wall);
}

}  // namespace

ClassCountResult count_classes(const Graph& g, int k, Relation relation, ColouringKind kind,
                               const CountCaps& caps) {
    ClassCountResult result;
    result.value.relation = relation;
    result.value.kind = kind;
    result.value.k = k;

    EnumerateResult all = enumerate_kind(g, k, kind, caps.colouring_cap, caps.wall_limit);
    if (all.budget_exhausted) {
        result.status = CountStatus::budget;
        return result;
    }
    if (all.overflow) {
        result.status = CountStatus::colouring_overflow;
        return result;
    }
    std::vector<std::vector<int>> forms;
    std::set<std::vector<int>> seen;
    for (const Colouring& f : all.colourings) {
        auto canon = canonical_under_swaps(f).assignment;
        if (seen.insert(canon).second) forms.push_back(std::move(canon));
    }
    std::sort(forms.begin(), forms.end());

    std::uint64_t classes = forms.size();
    std::vector<std::vector<int>> reps;
    if (relation == Relation::swap) {
        reps = forms;
    } else {
        AutomorphismList auts = automorphisms(g, caps.automorphism_nodes);
        if (auts.overflow) {
            result.status = CountStatus::automorphism_overflow;
            return result;
        }
        std::map<std::vector<int>, int> index;
        for (size_t i = 0; i < forms.size(); ++i) index[forms[i]] = static_cast<int>(i);
        DisjointSet ds(static_cast<int>(forms.size()));
        Colouring tmp{k, {}};
        for (size_t i = 0; i < forms.size(); ++i) {
            tmp.assignment = forms[i];
            for (const Automorphism& psi : auts.items) {
                auto moved = canonical_under_swaps(apply_automorphism(tmp, psi)).assignment;
                auto it = index.find(moved);
                // The image of a valid colouring under an automorphism is a
                // valid colouring of the same kind, so it must be present.
                if (it == index.end())
                    throw std::logic_error("automorphism image missing from enumeration");
                ds.unite(static_cast<int>(i), it->second);
            }
        }
        std::map<int, std::vector<int>> cls_min;
        for (size_t i = 0; i < forms.size(); ++i) {
            int root = ds.find(static_cast<int>(i));
            auto it = cls_min.find(root);
            if (it == cls_min.end() || forms[i] < it->second) cls_min[root] = forms[i];
        }
        classes = cls_min.size();
        for (auto& [root, form] : cls_min) reps.push_back(form);
        std::sort(reps.begin(), reps.end());
    }

    result.value.count = classes;
    if (classes <= 64) {
        std::vector<Colouring> rep_colourings;
        rep_colourings.reserve(reps.size());
        for (auto& form : reps) rep_colourings.push_back(Colouring{k, form});
        result.value.representatives = std::move(rep_colourings);
    }
    return result;
}

AnotherResult another_colouring(const Graph& g, const Colouring& f, Relation relation,
                                ColouringKind kind, const CountCaps& caps) {
    bool valid = kind == ColouringKind::acyclic ? is_acyclic_colouring(g, f) : is_proper(g, f);
    if (!valid) throw std::invalid_argument("input colouring is not of the stated kind");

    // Canonical forms equivalent to f under the relation.
    std::set<std::vector<int>> orbit;
    orbit.insert(canonical_under_swaps(f).assignment);
    if (relation == Relation::swap_auto) {
        AutomorphismList auts = automorphisms(g, caps.automorphism_nodes);
        if (auts.overflow) return {AnotherStatus::overflow, std::nullopt};
        for (const Automorphism& psi : auts.items)
            orbit.insert(canonical_under_swaps(apply_automorphism(f, psi)).assignment);
    }
    EnumerateResult all = enumerate_kind(g, f.palette_size, kind, caps.colouring_cap, caps.wall_limit);
    if (all.overflow || all.budget_exhausted) return {AnotherStatus::overflow, std::nullopt};
    for (const Colouring& candidate : all.colourings) {
        if (!orbit.count(canonical_under_swaps(candidate).assignment))
            return {AnotherStatus::found, candidate};
    }
    return {AnotherStatus::none, std::nullopt};
}

Uniqueness is_unique(const Graph& g, int k, Relation relation, ColouringKind kind,
                     const CountCaps& caps) {
    ClassCountResult r = count_classes(g, k, relation, kind, caps);
    if (!r.ok()) return Uniqueness::overflow;
    if (r.value.count == 0) return Uniqueness::none_exist;
    return r.value.count == 1 ? Uniqueness::unique : Uniqueness::not_unique;
}

}  // namespace acyclic

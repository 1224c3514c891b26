#include "acyclic/gadgets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace acyclic {

namespace {

std::string pair_label(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

GadgetGraph g_family(int p, bool odd) {
    if (p < 0 || (!odd && p < 1)) throw std::invalid_argument("bad family parameter");
    std::vector<std::pair<int, int>> labels;
    for (int i = 0; i <= p + 1; ++i)
        for (int j = 0; j <= p + 1; ++j)
            if (i != j) labels.emplace_back(i, j);
    const int n = static_cast<int>(labels.size());
    std::map<std::pair<int, int>, int> index;
    for (int v = 0; v < n; ++v) index[labels[v]] = v;

    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        auto [i, j] = labels[u];
        for (int v = u + 1; v < n; ++v) {
            auto [k, l] = labels[v];
            bool tail = (j == k), head = (i == l);
            bool adjacent = odd ? (tail || head) : (tail != head);
            if (adjacent) edges.emplace_back(u, v);
        }
    }
    GadgetGraph out;
    out.graph = Graph::from_edges(n, std::move(edges));
    out.tags.reserve(n);
    Colouring canonical{p + 2, std::vector<int>(n)};
    for (int v = 0; v < n; ++v) {
        out.tags.push_back({pair_label(labels[v].first, labels[v].second), Role::plain, 0});
        canonical.assignment[v] = labels[v].first;
    }
    out.canonical_colouring = std::move(canonical);
    return out;
}

}  // namespace

GadgetGraph g_odd(int p) { return g_family(p, true); }

GadgetGraph g_even(int p) { return g_family(p, false); }

GadgetGraph g_d(int d) {
    if (d < 1) throw std::invalid_argument("g_d requires d >= 1");
    return (d % 2 == 1) ? g_odd((d - 1) / 2) : g_even(d / 2);
}

GadgetGraph chain_gadget(int k, int t) {
    if (k < 3) throw std::invalid_argument("chain_gadget requires k >= 3");
    if (t < 1) throw std::invalid_argument("chain_gadget requires t >= 1");
    const int block = 2 * k - 1;  // one odd level plus one even level
    const int n = t * block;
    auto odd_vertex = [&](int i, int pos) {  // level 2i-1, pos in 1..k-1
        return (i - 1) * block + (pos - 1);
    };
    auto even_vertex = [&](int i, int pos) {  // level 2i, pos in 1..k
        return (i - 1) * block + (k - 1) + (pos - 1);
    };

    std::vector<Edge> edges;
    for (int i = 1; i <= t; ++i) {
        for (int a = 1; a <= k - 1; ++a)
            for (int b = 1; b <= k; ++b) edges.emplace_back(odd_vertex(i, a), even_vertex(i, b));
        if (i < t)
            for (int j = 1; j <= k - 1; ++j)
                edges.emplace_back(even_vertex(i, j), odd_vertex(i + 1, j));
    }

    GadgetGraph out;
    out.graph = Graph::from_edges(n, std::move(edges));
    out.tags.assign(n, {});
    Colouring canonical{k, std::vector<int>(n)};
    for (int i = 1; i <= t; ++i) {
        for (int pos = 1; pos <= k - 1; ++pos) {
            int v = odd_vertex(i, pos);
            out.tags[v] = {"L" + std::to_string(2 * i - 1) + "." + std::to_string(pos),
                           Role::chain_level, 2 * i - 1};
            canonical.assignment[v] = pos;
        }
        for (int pos = 1; pos <= k; ++pos) {
            int v = even_vertex(i, pos);
            bool is_terminal = (pos == k);
            out.tags[v] = {"L" + std::to_string(2 * i) + "." + std::to_string(pos),
                           is_terminal ? Role::terminal : Role::chain_level, 2 * i};
            canonical.assignment[v] = 0;
        }
        out.terminals.push_back(even_vertex(i, k));
    }
    out.canonical_colouring = std::move(canonical);
    return out;
}

GadgetGraph filler_gadget(int d) {
    if (d < 2) throw std::invalid_argument("filler_gadget requires d >= 2");
    GadgetGraph base = g_d(d);
    const int n = base.graph.vertex_count();
    Edge removed = base.graph.edges().front();  // lexicographically smallest

    std::vector<Edge> edges;
    for (Edge e : base.graph.edges())
        if (e != removed) edges.push_back(e);
    edges.emplace_back(removed.first, n);       // pendant terminal at x
    edges.emplace_back(removed.second, n + 1);  // pendant terminal at y

    GadgetGraph out;
    out.graph = Graph::from_edges(n + 2, std::move(edges));
    out.tags.reserve(n + 2);
    for (int v = 0; v < n; ++v) out.tags.push_back({base.tags[v].label, Role::filler_internal, 0});
    out.tags.push_back({"t(x)", Role::terminal, 0});
    out.tags.push_back({"t(y)", Role::terminal, 0});
    out.terminals = {n, n + 1};

    const Colouring& h = *base.canonical_colouring;
    Colouring canonical{h.palette_size, std::vector<int>(n + 2)};
    std::copy(h.assignment.begin(), h.assignment.end(), canonical.assignment.begin());
    // Pendants have degree one, so any colour differing from the attachment
    // point keeps the colouring acyclic.
    canonical.assignment[n] = h.assignment[removed.first] == 0 ? 1 : 0;
    canonical.assignment[n + 1] = h.assignment[removed.second] == 0 ? 1 : 0;
    out.canonical_colouring = std::move(canonical);
    return out;
}

Colouring filler_colouring(int d, int k, int c1, int c2, int cv) {
    if (c1 == c2 || c1 == cv || c2 == cv)
        throw std::invalid_argument("filler colours must be pairwise distinct");
    if (c1 < 0 || c2 < 0 || cv < 0 || c1 >= k || c2 >= k || cv >= k)
        throw std::invalid_argument("filler colours must lie below the palette");
    GadgetGraph base = g_d(d);
    const Colouring& h = *base.canonical_colouring;
    if (k < h.palette_size) throw std::invalid_argument("insufficient palette for the filler");

    Edge removed = base.graph.edges().front();
    int hx = h.assignment[removed.first];   // 0 under the canonical colouring
    int hy = h.assignment[removed.second];  // distinct from hx

    // Colour permutation sending the canonical colours of x, y to c1, c2;
    // remaining canonical colours take the smallest free colours.
    std::vector<int> sigma(h.palette_size, -1);
    sigma[hx] = c1;
    sigma[hy] = c2;
    int next = 0;
    for (int c = 0; c < h.palette_size; ++c) {
        if (sigma[c] != -1) continue;
        while (next == c1 || next == c2) ++next;
        sigma[c] = next++;
    }

    const int n = base.graph.vertex_count();
    Colouring out{k, std::vector<int>(n + 2)};
    for (int v = 0; v < n; ++v) out.assignment[v] = sigma[h.assignment[v]];
    out.assignment[n] = cv;
    out.assignment[n + 1] = cv;
    return out;
}

GadgetGraph exception_graph(const std::string& name) {
    GadgetGraph out;
    if (name == "k4") {
        out.graph = complete(4);
        for (int v = 0; v < 4; ++v) out.tags.push_back({"v" + std::to_string(v), Role::plain, 0});
        return out;
    }
    if (name == "q3") {
        std::vector<Edge> edges;
        for (int v = 0; v < 8; ++v)
            for (int bit = 0; bit < 3; ++bit) {
                int w = v ^ (1 << bit);
                if (v < w) edges.emplace_back(v, w);
            }
        out.graph = Graph::from_edges(8, std::move(edges));
        for (int v = 0; v < 8; ++v) {
            std::string label = {char('0' + ((v >> 2) & 1)), char('0' + ((v >> 1) & 1)),
                                 char('0' + (v & 1))};
            out.tags.push_back({label, Role::plain, 0});
        }
        return out;
    }
    if (name == "dual-p4-k2") {
        // Cubic planar 3-connected graph on 8 vertices: the planar dual of
        // the join of P_4 with K_2.
        out.graph = Graph::from_edges(8, {{0, 1},
                                          {0, 2},
                                          {0, 5},
                                          {1, 2},
                                          {1, 3},
                                          {2, 4},
                                          {3, 4},
                                          {3, 6},
                                          {4, 7},
                                          {5, 6},
                                          {5, 7},
                                          {6, 7}});
        for (int v = 0; v < 8; ++v) out.tags.push_back({"f" + std::to_string(v), Role::plain, 0});
        return out;
    }
    throw std::invalid_argument("unknown exception graph: " + name);
}

}  // namespace acyclic

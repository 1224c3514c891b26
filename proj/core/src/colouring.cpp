#include "acyclic/colouring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace acyclic {

namespace {

void check_cover(const Graph& g, const Colouring& f) {
    if (static_cast<int>(f.assignment.size()) != g.vertex_count())
        throw std::invalid_argument("colouring does not cover the vertex set");
    for (int c : f.assignment)
        if (c < 0 || c >= f.palette_size)
            throw std::invalid_argument("colour outside palette");
}

}  // namespace

bool is_proper(const Graph& g, const Colouring& f) {
    check_cover(g, f);
    for (auto [u, v] : g.edges())
        if (f(u) == f(v)) return false;
    return true;
}

std::optional<CycleWitness> find_bicoloured_cycle(const Graph& g, const Colouring& f) {
    if (!is_proper(g, f))
        throw std::invalid_argument("find_bicoloured_cycle requires a proper colouring");
    const int n = g.vertex_count();
    const int k = f.palette_size;

    // Per colour pair, DFS over the induced two-class subgraph; the first
    // non-tree edge to a visited non-parent vertex closes a cycle.
    std::vector<int> parent(n), state(n);
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            std::fill(state.begin(), state.end(), 0);  // 0 unseen, 1 on stack path
            for (int root = 0; root < n; ++root) {
                if (state[root] != 0 || (f(root) != a && f(root) != b)) continue;
                parent[root] = -1;
                state[root] = 1;
                std::vector<int> stack = {root};
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    for (int w : g.neighbours(u)) {
                        if (f(w) != a && f(w) != b) continue;
                        if (state[w] == 0) {
                            state[w] = 1;
                            parent[w] = u;
                            stack.push_back(w);
                        } else if (w != parent[u]) {
                            // Walk both branches up to a common ancestor.
                            std::vector<int> pu = {u}, pw = {w};
                            for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                            for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
                            pu.erase(pu.begin());
                            pw.erase(pw.begin());
                            // Trim to the paths from u and w to their lowest
                            // common ancestor in the DFS tree.
                            std::vector<int> cyc;
                            std::vector<bool> on_pu(n, false);
                            for (int x : pu) on_pu[x] = true;
                            int meet = -1;
                            for (int x : pw) {
                                if (on_pu[x]) {
                                    meet = x;
                                    break;
                                }
                            }
                            for (int x : pu) {
                                cyc.push_back(x);
                                if (x == meet) break;
                            }
                            std::vector<int> down;
                            for (int x : pw) {
                                if (x == meet) break;
                                down.push_back(x);
                            }
                            std::reverse(down.begin(), down.end());
                            for (int x : down) cyc.push_back(x);
                            cyc.push_back(u);
                            return CycleWitness{std::move(cyc), a, b};
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

bool is_acyclic_colouring(const Graph& g, const Colouring& f) {
    if (!is_proper(g, f)) return false;
    return !find_bicoloured_cycle(g, f).has_value();
}

Colouring read_colouring(std::istream& in) {
    std::string tag;
    Colouring f;
    if (!(in >> tag >> f.palette_size) || tag != "k")
        throw std::runtime_error("colouring: expected `k <palette>` header");
    std::vector<std::pair<int, int>> pairs;
    int v = 0, c = 0;
    int max_v = -1;
    while (in >> v >> c) {
        if (v < 0 || c < 0 || c >= f.palette_size)
            throw std::runtime_error("colouring: entry out of range");
        pairs.emplace_back(v, c);
        max_v = std::max(max_v, v);
    }
    f.assignment.assign(max_v + 1, -1);
    for (auto [vertex, colour] : pairs) f.assignment[vertex] = colour;
    for (int i = 0; i <= max_v; ++i)
        if (f.assignment[i] == -1)
            throw std::runtime_error("colouring: vertex " + std::to_string(i) + " unassigned");
    return f;
}

Colouring read_colouring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_colouring(in);
}

void write_colouring(const Colouring& f, std::ostream& out) {
    out << "k " << f.palette_size << '\n';
    for (int v = 0; v < static_cast<int>(f.assignment.size()); ++v)
        out << v << ' ' << f.assignment[v] << '\n';
}

void write_colouring_file(const Colouring& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_colouring(f, out);
}

}  // namespace acyclic

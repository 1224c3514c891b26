#include "acyclic/dimacs.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace acyclic {

Graph read_dimacs(std::istream& in) {
    bool got_header = false;
    int n = 0, m = 0;
    std::vector<Edge> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag == "p") {
            std::string format;
            iss >> format >> n >> m;
            if (!iss || (format != "edge" && format != "edges" && format != "col"))
                throw std::runtime_error("dimacs: bad header at line " + std::to_string(line_no));
            got_header = true;
        } else if (tag == "e") {
            if (!got_header)
                throw std::runtime_error("dimacs: edge before header at line " +
                                         std::to_string(line_no));
            int u = 0, v = 0;
            iss >> u >> v;
            if (!iss || u < 1 || v < 1 || u > n || v > n)
                throw std::runtime_error("dimacs: bad edge at line " + std::to_string(line_no));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw std::runtime_error("dimacs: unrecognized line " + std::to_string(line_no));
        }
    }
    if (!got_header) throw std::runtime_error("dimacs: missing header");
    return Graph::from_edges(n, std::move(edges));
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_dimacs(in);
}

void write_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_dimacs_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_dimacs(g, out);
}

}  // namespace acyclic

#include "thetak/dimacs.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace thetak {

Graph load_dimacs(const std::string& text, std::string id) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long long m = -1, seen = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> have;  // duplicate detection, upper-triangle index

    auto edge_slot = [&](int i, int j) -> char& {
        if (i > j) std::swap(i, j);
        return have[static_cast<std::size_t>(i) * n + j];
    };

    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n != -1)
                throw std::runtime_error("dimacs: duplicate problem line at line " +
                                         std::to_string(lineno));
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n <= 0 || m < 0)
                throw std::runtime_error("dimacs: malformed problem line at line " +
                                         std::to_string(lineno));
            have.assign(static_cast<std::size_t>(n) * n, 0);
            continue;
        }
        if (tag == "e") {
            if (n == -1)
                throw std::runtime_error("dimacs: edge before problem line at line " +
                                         std::to_string(lineno));
            int i = 0, j = 0;
            if (!(ls >> i >> j))
                throw std::runtime_error("dimacs: malformed edge at line " +
                                         std::to_string(lineno));
            if (i < 1 || i > n || j < 1 || j > n)
                throw std::runtime_error("dimacs: vertex index out of range at line " +
                                         std::to_string(lineno));
            if (i == j)
                throw std::runtime_error("dimacs: loop at line " + std::to_string(lineno));
            if (edge_slot(i - 1, j - 1))
                throw std::runtime_error("dimacs: duplicate edge at line " +
                                         std::to_string(lineno));
            edge_slot(i - 1, j - 1) = 1;
            edges.emplace_back(i - 1, j - 1);
            ++seen;
            continue;
        }
        throw std::runtime_error("dimacs: unknown line type '" + tag + "' at line " +
                                 std::to_string(lineno));
    }
    if (n == -1) throw std::runtime_error("dimacs: missing problem line");
    if (seen != m)
        throw std::runtime_error("dimacs: header declares " + std::to_string(m) +
                                 " edges but " + std::to_string(seen) + " found");
    if (id.empty())
        id = "dimacs:" + std::to_string(n) + "v" + std::to_string(seen) + "e";
    return Graph::from_edges(n, edges, std::move(id));
}

std::string save_dimacs(const Graph& g) {
    std::ostringstream os;
    auto edges = g.edges();  // already i < j, sorted lexicographically
    os << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (auto [i, j] : edges) os << "e " << i + 1 << ' ' << j + 1 << '\n';
    return os.str();
}

Graph load_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_dimacs(buf.str(), "file:" + path);
}

void save_dimacs_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << save_dimacs(g);
}

}  // namespace thetak

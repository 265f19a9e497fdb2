#pragma once
// Simple undirected graphs with canonical edge lists, plus the line-oriented
// text format shared by all tools ("v <n>" header, "e <u> <w>" per edge).

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crossnum {

using Vertex = int;
using EdgeId = int;
using VertexPair = std::pair<Vertex, Vertex>;

// Canonical form: every edge stored as (u, w) with u < w, edge list sorted
// lexicographically. Serialization is deterministic because of this.
struct Graph {
    int vertex_count = 0;
    std::vector<VertexPair> edges;
    std::vector<std::vector<Vertex>> adj;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }

    EdgeId edge_id(Vertex u, Vertex w) const {
        if (u > w) std::swap(u, w);
        auto it = std::lower_bound(edges.begin(), edges.end(), VertexPair{u, w});
        if (it == edges.end() || *it != VertexPair{u, w}) return -1;
        return static_cast<EdgeId>(it - edges.begin());
    }
    bool has_edge(Vertex u, Vertex w) const { return edge_id(u, w) >= 0; }

    // True when the two edges share an endpoint.
    bool edges_adjacent(EdgeId a, EdgeId b) const {
        const auto& [au, aw] = edges[a];
        const auto& [bu, bw] = edges[b];
        return au == bu || au == bw || aw == bu || aw == bw;
    }

    bool operator==(const Graph& o) const {
        return vertex_count == o.vertex_count && edges == o.edges;
    }
};

inline Graph make_graph(int n, std::vector<VertexPair> es) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, w] : es) {
        if (u == w) throw std::invalid_argument("loop edge");
        if (u < 0 || w < 0 || u >= n || w >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > w) std::swap(u, w);
    }
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
        throw std::invalid_argument("duplicate edge");
    Graph g;
    g.vertex_count = n;
    g.edges = std::move(es);
    g.adj.assign(n, {});
    for (auto [u, w] : g.edges) {
        g.adj[u].push_back(w);
        g.adj[w].push_back(u);
    }
    return g;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count == 0) return true;
    std::vector<char> seen(g.vertex_count, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.vertex_count;
}

// Component index per vertex, components numbered by smallest contained vertex.
inline std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(g.vertex_count, -1);
    int next = 0;
    for (Vertex s = 0; s < g.vertex_count; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.adj[v])
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

// ---------------------------------------------------------------- text format

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "v " << g.vertex_count << "\n";
    for (auto [u, w] : g.edges) out << "e " << u << " " << w << "\n";
    return out.str();
}

namespace detail {
inline bool format_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}
}  // namespace detail

inline Graph parse_graph(std::istream& in) {
    std::string line;
    if (!detail::format_line(in, line)) throw std::runtime_error("graph: empty input");
    std::istringstream head(line);
    std::string tag;
    int n = -1;
    if (!(head >> tag >> n) || tag != "v" || n < 0)
        throw std::runtime_error("graph: expected 'v <count>' header");
    std::string extra;
    if (head >> extra) throw std::runtime_error("graph: trailing tokens after header");
    std::vector<VertexPair> es;
    while (detail::format_line(in, line)) {
        std::istringstream ls(line);
        int u = -1, w = -1;
        if (!(ls >> tag >> u >> w) || tag != "e")
            throw std::runtime_error("graph: expected 'e <u> <w>' line, got: " + line);
        if (ls >> extra) throw std::runtime_error("graph: trailing tokens: " + line);
        if (u < 0 || w < 0 || u >= n || w >= n || u >= w)
            throw std::runtime_error("graph: bad edge (want 0 <= u < w < n): " + line);
        es.emplace_back(u, w);
    }
    try {
        return make_graph(n, std::move(es));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("graph: ") + e.what());
    }
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

}  // namespace crossnum

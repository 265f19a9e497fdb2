#pragma once
// Dart-based face tracing over rotation systems. Dart 2e is u->w and dart
// 2e+1 is w->u for edge e = (u,w), u < w. The successor of dart (u -> v) is
// the dart leaving v along the neighbor that follows u in v's rotation.

#include <stdexcept>
#include <vector>

#include "crossnum/graph.hpp"
#include "crossnum/planarity.hpp"

namespace crossnum {

struct FaceStructure {
    int face_count = 0;
    std::vector<int> face_of_dart;              // 2|E| entries
    std::vector<std::vector<int>> face_darts;   // darts per face in trace order
};

inline bool rotation_matches_graph(const Graph& g, const Rotation& rot) {
    if (static_cast<int>(rot.size()) != g.vertex_count) return false;
    for (Vertex v = 0; v < g.vertex_count; ++v) {
        auto sorted_rot = rot[v];
        auto sorted_adj = g.adj[v];
        std::sort(sorted_rot.begin(), sorted_rot.end());
        std::sort(sorted_adj.begin(), sorted_adj.end());
        if (sorted_rot != sorted_adj) return false;
    }
    return true;
}

inline int dart_id(const Graph& g, Vertex from, Vertex to) {
    EdgeId e = g.edge_id(from, to);
    if (e < 0) throw std::invalid_argument("dart_id: no such edge");
    return 2 * e + (from < to ? 0 : 1);
}

inline VertexPair dart_ends(const Graph& g, int dart) {
    auto [u, w] = g.edges[dart / 2];
    return dart % 2 == 0 ? VertexPair{u, w} : VertexPair{w, u};
}

inline FaceStructure trace_faces(const Graph& g, const Rotation& rot) {
    if (!rotation_matches_graph(g, rot))
        throw std::invalid_argument("trace_faces: rotation does not match graph");
    // neighbor -> position per vertex
    std::vector<std::vector<std::pair<Vertex, int>>> pos(g.vertex_count);
    for (Vertex v = 0; v < g.vertex_count; ++v)
        for (int i = 0; i < static_cast<int>(rot[v].size()); ++i)
            pos[v].emplace_back(rot[v][i], i);
    auto position = [&](Vertex v, Vertex nb) {
        for (auto [w, i] : pos[v])
            if (w == nb) return i;
        throw std::logic_error("trace_faces: neighbor not in rotation");
    };

    int darts = 2 * g.edge_count();
    FaceStructure fs;
    fs.face_of_dart.assign(darts, -1);
    for (int d0 = 0; d0 < darts; ++d0) {
        if (fs.face_of_dart[d0] >= 0) continue;
        int id = fs.face_count++;
        fs.face_darts.emplace_back();
        int d = d0;
        do {
            fs.face_of_dart[d] = id;
            fs.face_darts[id].push_back(d);
            auto [u, v] = dart_ends(g, d);
            int i = position(v, u);
            Vertex w = rot[v][(i + 1) % rot[v].size()];
            d = dart_id(g, v, w);
        } while (d != d0);
    }
    return fs;
}

// Euler check per connected component that carries at least one edge:
// V - E + F must equal 2.  Faces are assigned to the component of their darts.
inline bool euler_genus_zero(const Graph& g, const Rotation& rot) {
    FaceStructure fs = trace_faces(g, rot);
    auto comp = component_ids(g);
    int ncomp = 0;
    for (int c : comp) ncomp = std::max(ncomp, c + 1);
    std::vector<int> vcnt(ncomp, 0), ecnt(ncomp, 0), fcnt(ncomp, 0), has_edge(ncomp, 0);
    for (Vertex v = 0; v < g.vertex_count; ++v) ++vcnt[comp[v]];
    for (auto [u, w] : g.edges) {
        ++ecnt[comp[u]];
        has_edge[comp[u]] = 1;
    }
    std::vector<int> seen_face(fs.face_count, -1);
    for (int f = 0; f < fs.face_count; ++f) {
        auto [u, w] = dart_ends(g, fs.face_darts[f][0]);
        (void)w;
        ++fcnt[comp[u]];
    }
    for (int c = 0; c < ncomp; ++c)
        if (has_edge[c] && vcnt[c] - ecnt[c] + fcnt[c] != 2) return false;
    return true;
}

}  // namespace crossnum

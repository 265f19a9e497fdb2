#pragma once
// Regions of a subdrawing, computed combinatorially from a full drawing
// certificate: faces of the full planarization are glued across every dart
// whose underlying base edge is not kept. Foreign vertices are located by any
// incident dart (their anchor); vertices on the subdrawing have no region.

#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "crossnum/drawing.hpp"
#include "crossnum/faces.hpp"

namespace crossnum {

struct RegionStructure {
    Planarization plan;          // full planarization
    FaceStructure faces;         // faces of the full certificate
    std::vector<char> kept;      // per base edge
    std::vector<int> region_of_face;
    int region_count = 0;

    int region_of_dart(int dart) const { return region_of_face[faces.face_of_dart[dart]]; }
};

inline RegionStructure compute_regions(const DrawingCertificate& cert,
                                       const std::vector<EdgeId>& keep) {
    RegionStructure rs;
    rs.plan = planarize(cert.base, cert.config);
    rs.faces = trace_faces(rs.plan.graph, cert.rotation);
    rs.kept.assign(cert.base.edge_count(), 0);
    for (EdgeId e : keep) {
        if (e < 0 || e >= cert.base.edge_count())
            throw std::invalid_argument("compute_regions: unknown edge");
        rs.kept[e] = 1;
    }

    // union-find over faces
    std::vector<int> parent(rs.faces.face_count);
    for (int i = 0; i < rs.faces.face_count; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (EdgeId pe = 0; pe < rs.plan.graph.edge_count(); ++pe) {
        if (rs.kept[rs.plan.owner[pe]]) continue;
        int a = find(rs.faces.face_of_dart[2 * pe]);
        int b = find(rs.faces.face_of_dart[2 * pe + 1]);
        if (a != b) parent[a] = b;
    }
    rs.region_of_face.assign(rs.faces.face_count, -1);
    for (int f = 0; f < rs.faces.face_count; ++f) {
        int root = find(f);
        if (rs.region_of_face[root] == -1) rs.region_of_face[root] = rs.region_count++;
        rs.region_of_face[f] = rs.region_of_face[root];
    }
    return rs;
}

// Region hosting a base vertex that does not lie on the subdrawing.
inline int locate_vertex(const RegionStructure& rs, Vertex v) {
    int base_n = rs.plan.graph.vertex_count - static_cast<int>(rs.plan.crossings.size());
    if (v < 0 || v >= base_n) throw std::invalid_argument("locate_vertex: unknown vertex");
    const auto& nbrs = rs.plan.graph.adj[v];
    if (nbrs.empty()) throw std::invalid_argument("unanchorable vertex " + std::to_string(v));
    for (Vertex nb : nbrs) {
        EdgeId pe = rs.plan.graph.edge_id(v, nb);
        if (rs.kept[rs.plan.owner[pe]])
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " lies on the subdrawing");
    }
    return rs.region_of_dart(dart_id(rs.plan.graph, v, nbrs.front()));
}

struct RegionReport {
    int region_id = 0;
    std::vector<std::pair<Vertex, Vertex>> boundary;  // darts on kept edges
    std::vector<Vertex> v_in, v_out;
};

inline std::vector<RegionReport> regions(const DrawingCertificate& cert,
                                         const std::vector<EdgeId>& keep,
                                         const std::vector<Vertex>& locate) {
    RegionStructure rs = compute_regions(cert, keep);
    std::vector<RegionReport> out(rs.region_count);
    for (int r = 0; r < rs.region_count; ++r) out[r].region_id = r;
    for (int f = 0; f < rs.faces.face_count; ++f)
        for (int d : rs.faces.face_darts[f])
            if (rs.kept[rs.plan.owner[d / 2]])
                out[rs.region_of_face[f]].boundary.push_back(dart_ends(rs.plan.graph, d));
    for (Vertex v : locate) {
        int r = locate_vertex(rs, v);
        for (int q = 0; q < rs.region_count; ++q)
            (q == r ? out[q].v_in : out[q].v_out).push_back(v);
    }
    return out;
}

// Regions on the two sides of edge `through`'s strands at crossing index ci of
// the full certificate; `through` must not be kept. Used for boundary-crossing
// counts: the crossing lies on the subdrawing boundary iff the two sides
// differ or touch the queried region.
inline std::pair<int, int> strand_regions(const RegionStructure& rs, int ci, EdgeId through) {
    Vertex d = rs.plan.graph.vertex_count - static_cast<int>(rs.plan.crossings.size()) + ci;
    std::vector<int> sides;
    for (Vertex nb : rs.plan.graph.adj[d]) {
        EdgeId pe = rs.plan.graph.edge_id(d, nb);
        if (rs.plan.owner[pe] == through)
            sides.push_back(rs.region_of_dart(dart_id(rs.plan.graph, d, nb)));
    }
    if (sides.size() != 2)
        throw std::invalid_argument("strand_regions: edge not at this crossing");
    return {sides[0], sides[1]};
}

}  // namespace crossnum

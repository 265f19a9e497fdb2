#pragma once
// Generalized Petersen graphs P(n,k) and the fixed half/half decomposition of
// P(10,3) used by the audit machinery. Vertex labeling: x_i -> i for the outer
// cycle, y_i -> n+i for the inner vertices.

#include <map>
#include <set>
#include <stdexcept>

#include "crossnum/graph.hpp"

namespace crossnum {

struct GPParams {
    int n = 0;
    int k = 0;
};

inline void validate_gp(const GPParams& p) {
    if (p.n < 3) throw std::invalid_argument("gp: need n >= 3");
    if (p.k < 1 || p.k > p.n - 1) throw std::invalid_argument("gp: need 1 <= k <= n-1");
    if ((2 * p.k) % p.n == 0)
        throw std::invalid_argument("gp: degenerate parameters (2k = 0 mod n)");
}

inline Graph build_gp(const GPParams& p) {
    validate_gp(p);
    std::vector<VertexPair> es;
    es.reserve(3 * p.n);
    for (int i = 0; i < p.n; ++i) {
        es.emplace_back(i, (i + 1) % p.n);           // outer cycle x_i x_{i+1}
        es.emplace_back(i, p.n + i);                 // spoke x_i y_i
        es.emplace_back(p.n + i, p.n + (i + p.k) % p.n);  // inner y_i y_{i+k}
    }
    return make_graph(2 * p.n, std::move(es));
}

inline Graph build_gp(int n, int k) { return build_gp(GPParams{n, k}); }

// The half/half split of P(10,3). Edge classes are derived from the vertex
// sets; degrees of the subclasses are measured inside the induced halves.
struct Partition {
    std::vector<Vertex> v1, v2;
    std::vector<EdgeId> e1, e2, e12;
    std::vector<Vertex> v1_deg2, v1_deg3, v2_deg2, v2_deg3;

    bool in_v1(Vertex v) const { return side_of[v] == 1; }
    // 1 or 2 per vertex; 0 = e12, 1 = e1, 2 = e2 per edge
    std::vector<int> side_of;
    std::vector<int> edge_class;
};

inline const std::vector<Vertex>& p103_v1_labels() {
    static const std::vector<Vertex> v1{0, 1, 2, 3, 4, 10, 11, 17, 13, 14};
    return v1;
}

inline Partition p103_partition(const Graph& g) {
    Graph want = build_gp(10, 3);
    if (!(g == want))
        throw std::invalid_argument("p103_partition: graph is not P(10,3) under the canonical labeling");

    Partition p;
    p.side_of.assign(20, 2);
    for (Vertex v : p103_v1_labels()) p.side_of[v] = 1;
    for (Vertex v = 0; v < 20; ++v)
        (p.side_of[v] == 1 ? p.v1 : p.v2).push_back(v);

    p.edge_class.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, w] = g.edges[e];
        int su = p.side_of[u], sw = p.side_of[w];
        int cls = (su == sw) ? su : 0;
        p.edge_class[e] = cls;
        (cls == 1 ? p.e1 : cls == 2 ? p.e2 : p.e12).push_back(e);
    }

    // degree inside the induced half
    auto half_degree = [&](Vertex v) {
        int d = 0;
        for (Vertex w : g.adj[v])
            if (p.side_of[w] == p.side_of[v]) ++d;
        return d;
    };
    for (Vertex v = 0; v < 20; ++v) {
        int d = half_degree(v);
        if (d != 2 && d != 3)
            throw std::logic_error("p103_partition: unexpected half degree");
        auto& bucket = p.side_of[v] == 1 ? (d == 2 ? p.v1_deg2 : p.v1_deg3)
                                         : (d == 2 ? p.v2_deg2 : p.v2_deg3);
        bucket.push_back(v);
    }

    // Startup self-check for the x/y -> v labeling bridge: the sizes and one
    // named cycle of the decomposition must come out exactly right.
    if (p.e1.size() != 12 || p.e2.size() != 12 || p.e12.size() != 6 ||
        p.v1_deg2.size() != 6 || p.v1_deg3.size() != 4 ||
        p.v2_deg2.size() != 6 || p.v2_deg3.size() != 4)
        throw std::logic_error("p103_partition: class sizes violate the decomposition");
    const Vertex cyc[] = {10, 0, 1, 11, 14, 4, 3, 13, 10};
    for (int i = 0; i + 1 < 9; ++i) {
        EdgeId e = g.edge_id(cyc[i], cyc[i + 1]);
        if (e < 0 || p.edge_class[e] != 1)
            throw std::logic_error("p103_partition: labeling self-check cycle missing");
    }
    return p;
}

// For each degree-3 vertex v of one half there is exactly one degree-3 vertex
// u of the other half with N(N(v)) meeting the far side in exactly the far
// degree-2 class minus N(u). Returns the v -> u map over all 8 vertices.
inline std::map<Vertex, Vertex> check_observation1(const Partition& p, const Graph& g) {
    std::map<Vertex, Vertex> partner;
    for (int side = 1; side <= 2; ++side) {
        const auto& mine3 = side == 1 ? p.v1_deg3 : p.v2_deg3;
        const auto& other3 = side == 1 ? p.v2_deg3 : p.v1_deg3;
        const auto& other2 = side == 1 ? p.v2_deg2 : p.v1_deg2;
        int other_side = 3 - side;
        for (Vertex v : mine3) {
            std::set<Vertex> nn;
            for (Vertex a : g.adj[v])
                for (Vertex b : g.adj[a])
                    if (p.side_of[b] == other_side) nn.insert(b);
            int found = 0;
            Vertex hit = -1;
            for (Vertex u : other3) {
                std::set<Vertex> rhs(other2.begin(), other2.end());
                for (Vertex w : g.adj[u]) rhs.erase(w);
                if (nn == rhs) {
                    ++found;
                    hit = u;
                }
            }
            if (found != 1)
                throw std::logic_error("observation violated at vertex " + std::to_string(v));
            partner[v] = hit;
        }
    }
    return partner;
}

}  // namespace crossnum

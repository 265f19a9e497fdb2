#include <catch2/catch_amalgamated.hpp>
#include <queue>
#include <set>

#include "crossnum/petersen.hpp"

using namespace crossnum;

namespace {

int girth(const Graph& g) {
    int best = 1 << 20;
    for (Vertex s = 0; s < g.vertex_count; ++s) {
        std::vector<int> dist(g.vertex_count, -1), par(g.vertex_count, -1);
        std::queue<Vertex> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.adj[v]) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    par[w] = v;
                    q.push(w);
                } else if (w != par[v]) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("build_gp basic instances") {
    Graph g = build_gp(10, 3);
    REQUIRE(g.vertex_count == 20);
    REQUIRE(g.edge_count() == 30);
    for (Vertex v = 0; v < 20; ++v) REQUIRE(g.degree(v) == 3);

    Graph pet = build_gp(5, 2);
    REQUIRE(pet.vertex_count == 10);
    REQUIRE(pet.edge_count() == 15);
    REQUIRE(girth(pet) == 5);
}

TEST_CASE("build_gp rejects degenerate parameters") {
    REQUIRE_THROWS_AS(build_gp(10, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(build_gp(4, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(build_gp(2, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(build_gp(6, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(build_gp(6, 6), std::invalid_argument);
}

TEST_CASE("build_gp is 3-regular with 3n edges for all valid (n,k), n <= 20") {
    for (int n = 3; n <= 20; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            if ((2 * k) % n == 0) continue;
            Graph g = build_gp(n, k);
            REQUIRE(g.vertex_count == 2 * n);
            REQUIRE(g.edge_count() == 3 * n);
            for (Vertex v = 0; v < g.vertex_count; ++v) REQUIRE(g.degree(v) == 3);
        }
}

TEST_CASE("p103_partition reproduces the fixed decomposition") {
    Graph g = build_gp(10, 3);
    Partition p = p103_partition(g);

    REQUIRE(p.v1.size() == 10);
    REQUIRE(p.v2.size() == 10);
    REQUIRE(p.e1.size() == 12);
    REQUIRE(p.e2.size() == 12);
    REQUIRE(p.e12.size() == 6);
    REQUIRE(p.e1.size() + p.e2.size() + p.e12.size() == 30);

    std::set<VertexPair> e12;
    for (EdgeId e : p.e12) e12.insert(g.edges[e]);
    std::set<VertexPair> want{{2, 12}, {13, 16}, {7, 17}, {11, 18}, {4, 5}, {0, 9}};
    REQUIRE(e12 == want);

    REQUIRE(std::set<Vertex>(p.v1_deg2.begin(), p.v1_deg2.end()) ==
            std::set<Vertex>{0, 2, 4, 11, 13, 17});
    REQUIRE(p.v1_deg2.size() == 6);
    REQUIRE(p.v1_deg3.size() == 4);
    REQUIRE(p.v2_deg2.size() == 6);
    REQUIRE(p.v2_deg3.size() == 4);

    // every edge lands in exactly one class
    std::set<EdgeId> all;
    for (auto* cls : {&p.e1, &p.e2, &p.e12})
        for (EdgeId e : *cls) REQUIRE(all.insert(e).second);
    REQUIRE(all.size() == 30);
}

TEST_CASE("p103_partition rejects other graphs") {
    REQUIRE_THROWS_AS(p103_partition(build_gp(5, 2)), std::invalid_argument);
    REQUIRE_THROWS_AS(p103_partition(build_gp(10, 2)), std::invalid_argument);
}

TEST_CASE("observation 1 holds on P(10,3)") {
    Graph g = build_gp(10, 3);
    Partition p = p103_partition(g);
    auto partner = check_observation1(p, g);

    REQUIRE(partner.size() == 8);  // total map on all degree-3 vertices
    // each direction is a bijection between the two degree-3 classes
    std::set<Vertex> img1, img2;
    for (Vertex v : p.v1_deg3) {
        REQUIRE(partner.count(v));
        img1.insert(partner.at(v));
    }
    for (Vertex v : p.v2_deg3) {
        REQUIRE(partner.count(v));
        img2.insert(partner.at(v));
    }
    REQUIRE(img1 == std::set<Vertex>(p.v2_deg3.begin(), p.v2_deg3.end()));
    REQUIRE(img2 == std::set<Vertex>(p.v1_deg3.begin(), p.v1_deg3.end()));

    // brute-force the set equation over all (v,u) pairs: uniqueness
    for (int side : {1, 2}) {
        const auto& mine3 = side == 1 ? p.v1_deg3 : p.v2_deg3;
        const auto& other3 = side == 1 ? p.v2_deg3 : p.v1_deg3;
        const auto& other2 = side == 1 ? p.v2_deg2 : p.v1_deg2;
        for (Vertex v : mine3) {
            std::set<Vertex> nn;
            for (Vertex a : g.adj[v])
                for (Vertex b : g.adj[a])
                    if (p.side_of[b] == 3 - side) nn.insert(b);
            int hits = 0;
            for (Vertex u : other3) {
                std::set<Vertex> rhs(other2.begin(), other2.end());
                for (Vertex w : g.adj[u]) rhs.erase(w);
                if (rhs == nn) ++hits;
            }
            REQUIRE(hits == 1);
        }
    }
}

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "crossnum/faces.hpp"
#include "crossnum/petersen.hpp"
#include "crossnum/planarity.hpp"

using namespace crossnum;

namespace {

Graph complete(int n) {
    std::vector<VertexPair> es;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) es.emplace_back(u, w);
    return make_graph(n, es);
}

Graph complete_bipartite(int a, int b) {
    std::vector<VertexPair> es;
    for (int u = 0; u < a; ++u)
        for (int w = 0; w < b; ++w) es.emplace_back(u, a + w);
    return make_graph(a + b, es);
}

Graph grid(int rows, int cols) {
    auto id = [&](int r, int c) { return r * cols + c; };
    std::vector<VertexPair> es;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) es.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) es.emplace_back(id(r, c), id(r + 1, c));
        }
    return make_graph(rows * cols, es);
}

// exhaustive ground truth: a connected graph is planar iff some rotation
// system has V - E + F = 2
bool planar_by_rotation_enumeration(const Graph& g) {
    REQUIRE(is_connected(g));
    long long work = 1;
    for (Vertex v = 0; v < g.vertex_count; ++v) {
        for (int d = 2; d < g.degree(v); ++d) work *= d;
        REQUIRE(work <= 2'000'000);
    }
    Rotation rot(g.vertex_count);
    for (Vertex v = 0; v < g.vertex_count; ++v) {
        rot[v] = g.adj[v];
        std::sort(rot[v].begin(), rot[v].end());
    }
    auto recurse = [&](auto&& self, Vertex v) -> bool {
        if (v == g.vertex_count) {
            FaceStructure fs = trace_faces(g, rot);
            return g.vertex_count - g.edge_count() + fs.face_count == 2;
        }
        if (g.degree(v) <= 2) return self(self, v + 1);
        // all cyclic orders: fix the first element, permute the rest
        auto base = rot[v];
        std::vector<Vertex> rest(base.begin() + 1, base.end());
        std::sort(rest.begin(), rest.end());
        do {
            rot[v][0] = base[0];
            std::copy(rest.begin(), rest.end(), rot[v].begin() + 1);
            if (self(self, v + 1)) return true;
        } while (std::next_permutation(rest.begin(), rest.end()));
        rot[v] = base;
        return false;
    };
    return recurse(recurse, 0);
}

bool embedding_is_planar(const Graph& g) {
    PlanarityTester t;
    Rotation rot;
    if (!t.embed(g.vertex_count, g.edges, rot)) return false;
    REQUIRE(rotation_matches_graph(g, rot));
    REQUIRE(euler_genus_zero(g, rot));
    return true;
}

// suppress degree-2 vertices of a subgraph and report whether it is K5 or K33
bool is_kuratowski_subdivision(const Graph& g, const std::vector<EdgeId>& edge_ids) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (EdgeId e : edge_ids) {
        auto [u, w] = g.edges[e];
        adj[u].push_back(w);
        adj[w].push_back(u);
    }
    std::vector<Vertex> branch;
    for (auto& [v, nb] : adj) {
        if (nb.size() != 2 && nb.size() != 3 && nb.size() != 4) return false;
        if (nb.size() != 2) branch.push_back(v);
    }
    // walk paths between branch vertices
    std::set<Vertex> branch_set(branch.begin(), branch.end());
    std::map<Vertex, int> rank;
    for (size_t i = 0; i < branch.size(); ++i) rank[branch[i]] = static_cast<int>(i);
    std::vector<VertexPair> core_edges;
    std::set<std::pair<Vertex, Vertex>> used_darts;
    for (Vertex s : branch)
        for (Vertex first : adj[s]) {
            if (used_darts.count({s, first})) continue;
            Vertex prev = s, cur = first;
            used_darts.insert({s, first});
            while (!branch_set.count(cur)) {
                Vertex nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
            }
            used_darts.insert({cur, prev});
            int a = rank[s], b = rank[cur];
            if (a == b) return false;  // path returned to its start
            core_edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    std::sort(core_edges.begin(), core_edges.end());
    core_edges.erase(std::unique(core_edges.begin(), core_edges.end()), core_edges.end());
    Graph core = make_graph(static_cast<int>(branch.size()), core_edges);
    if (core.vertex_count == 5 && core.edge_count() == 10) return true;        // K5
    if (core.vertex_count == 6 && core.edge_count() == 9) {                    // K33?
        for (Vertex v = 0; v < 6; ++v)
            if (core.degree(v) != 3) return false;
        return true;
    }
    return false;
}

}  // namespace

TEST_CASE("known planar families") {
    REQUIRE(embedding_is_planar(complete(4)));
    REQUIRE(embedding_is_planar(grid(5, 5)));
    REQUIRE(embedding_is_planar(build_gp(6, 1)));    // hexagonal prism
    REQUIRE(embedding_is_planar(build_gp(10, 2)));   // dodecahedron
    REQUIRE(embedding_is_planar(make_graph(1, {})));
    REQUIRE(embedding_is_planar(make_graph(2, {{0, 1}})));
}

TEST_CASE("known non-planar graphs") {
    REQUIRE_FALSE(planar_decision(complete(5)));
    REQUIRE_FALSE(planar_decision(complete(6)));
    REQUIRE_FALSE(planar_decision(complete_bipartite(3, 3)));
    REQUIRE_FALSE(planar_decision(build_gp(5, 2)));
    REQUIRE_FALSE(planar_decision(build_gp(10, 3)));
}

TEST_CASE("decision matches rotation-system enumeration on small graphs") {
    std::mt19937 rng(101);
    int checked = 0;
    while (checked < 160) {
        int n = 4 + static_cast<int>(rng() % 4);  // 4..7
        std::vector<VertexPair> all;
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w) all.emplace_back(u, w);
        std::shuffle(all.begin(), all.end(), rng);
        int m = std::min<int>(static_cast<int>(all.size()), 5 + static_cast<int>(rng() % 6));
        Graph g = make_graph(n, {all.begin(), all.begin() + m});
        if (!is_connected(g)) continue;
        long long work = 1;
        bool feasible = true;
        for (Vertex v = 0; v < n; ++v) {
            for (int d = 2; d < g.degree(v); ++d) work *= d;
            if (work > 2'000'000) feasible = false;
        }
        if (!feasible) continue;
        ++checked;
        bool lr = planar_decision(g);
        bool truth = planar_by_rotation_enumeration(g);
        INFO(serialize_graph(g));
        REQUIRE(lr == truth);
        if (lr) REQUIRE(embedding_is_planar(g));
    }
}

TEST_CASE("embeddings satisfy Euler on random planar graphs") {
    std::mt19937 rng(202);
    int checked = 0;
    while (checked < 120) {
        int n = 6 + static_cast<int>(rng() % 18);
        std::vector<VertexPair> all;
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w) all.emplace_back(u, w);
        std::shuffle(all.begin(), all.end(), rng);
        int m = std::min<int>(static_cast<int>(all.size()), n + static_cast<int>(rng() % (2 * n)));
        Graph g = make_graph(n, {all.begin(), all.begin() + m});
        if (!planar_decision(g)) continue;
        ++checked;
        // embed() must agree with decide() and self-validate via Euler
        REQUIRE(embedding_is_planar(g));
    }
}

TEST_CASE("G1 half of P(10,3) is planar with exactly 4 faces") {
    Graph g = build_gp(10, 3);
    Partition p = p103_partition(g);
    std::vector<int> newid(20, -1);
    for (size_t i = 0; i < p.v1.size(); ++i) newid[p.v1[i]] = static_cast<int>(i);
    std::vector<VertexPair> es;
    for (auto [u, w] : g.edges)
        if (newid[u] >= 0 && newid[w] >= 0) es.emplace_back(newid[u], newid[w]);
    Graph g1 = make_graph(10, es);
    REQUIRE(g1.edge_count() == 12);

    PlanarityResult res = is_planar(g1);
    REQUIRE(res.planar);
    FaceStructure fs = trace_faces(g1, res.rotation);
    REQUIRE(fs.face_count == 4);
}

TEST_CASE("kuratowski witnesses are genuine subdivisions") {
    std::mt19937 rng(303);
    std::vector<Graph> cases{complete(5), complete_bipartite(3, 3), build_gp(5, 2),
                             build_gp(10, 3), complete(6)};
    int added = 0;
    while (added < 25) {
        int n = 6 + static_cast<int>(rng() % 6);
        std::vector<VertexPair> all;
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w) all.emplace_back(u, w);
        std::shuffle(all.begin(), all.end(), rng);
        int m = std::min<int>(static_cast<int>(all.size()), 2 * n + static_cast<int>(rng() % n));
        Graph g = make_graph(n, {all.begin(), all.begin() + m});
        if (planar_decision(g)) continue;
        cases.push_back(g);
        ++added;
    }
    PlanarityTester t;
    for (const auto& g : cases) {
        auto witness = kuratowski_subgraph(g);
        // non-planar itself
        std::vector<VertexPair> es;
        for (EdgeId e : witness) es.push_back(g.edges[e]);
        REQUIRE_FALSE(t.decide(g.vertex_count, es));
        // minimal: removing any single edge restores planarity
        for (size_t skip = 0; skip < witness.size(); ++skip) {
            std::vector<VertexPair> sub;
            for (size_t i = 0; i < witness.size(); ++i)
                if (i != skip) sub.push_back(g.edges[witness[i]]);
            REQUIRE(t.decide(g.vertex_count, sub));
        }
        REQUIRE(is_kuratowski_subdivision(g, witness));
    }
}

TEST_CASE("kuratowski_subgraph rejects planar input") {
    REQUIRE_THROWS_AS(kuratowski_subgraph(complete(4)), std::invalid_argument);
}

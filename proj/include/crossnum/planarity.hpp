#pragma once
// Left-right planarity test (de Fraysseix - Rosenstiehl, Brandes formulation)
// with combinatorial embedding output, plus Kuratowski subgraph extraction by
// greedy edge deletion. The embedding is a rotation system: for each vertex
// the cyclic order of neighbors; the face successor of dart (u -> v) is the
// dart leaving v along the neighbor that follows u in v's rotation.

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "crossnum/graph.hpp"

namespace crossnum {

using Rotation = std::vector<std::vector<Vertex>>;

// Reusable workspace; decide() is the hot path for the solver.
class PlanarityTester {
  public:
    bool decide(int n, const std::vector<VertexPair>& edges) {
        return run(n, edges, nullptr);
    }

    // On success fills a rotation system whose face tracing satisfies Euler's
    // formula on every connected component.
    bool embed(int n, const std::vector<VertexPair>& edges, Rotation& rotation) {
        return run(n, edges, &rotation);
    }

    long long calls() const { return calls_; }

  private:
    struct Interval {
        int lo = -1, hi = -1;
        bool empty() const { return lo == -1 && hi == -1; }
    };
    struct ConflictPair {
        Interval L, R;
    };

    int n_ = 0, m_ = 0;
    std::vector<std::vector<std::pair<Vertex, int>>> adj_;  // (neighbor, edge id)
    std::vector<int> height_, parent_edge_;
    std::vector<int> src_, dst_;
    std::vector<char> oriented_;
    std::vector<int> lowpt_, lowpt2_, nesting_, ref_, side_, lowpt_edge_, stack_bottom_;
    std::vector<std::vector<int>> ordered_;  // outgoing edge ids per vertex
    std::vector<ConflictPair> S_;
    std::vector<Vertex> roots_;
    long long calls_ = 0;

    bool conflicting(const Interval& i, int b) const {
        return !i.empty() && lowpt_[i.hi] > lowpt_[b];
    }
    int lowest(const ConflictPair& p) const {
        if (p.L.empty()) return lowpt_[p.R.lo];
        if (p.R.empty()) return lowpt_[p.L.lo];
        return std::min(lowpt_[p.L.lo], lowpt_[p.R.lo]);
    }

    bool run(int n, const std::vector<VertexPair>& edges, Rotation* rotation_out) {
        ++calls_;
        n_ = n;
        m_ = static_cast<int>(edges.size());
        if (n_ > 2 && m_ > 3 * n_ - 6) return false;

        adj_.assign(n_, {});
        for (int e = 0; e < m_; ++e) {
            auto [u, w] = edges[e];
            adj_[u].emplace_back(w, e);
            adj_[w].emplace_back(u, e);
        }
        height_.assign(n_, -1);
        parent_edge_.assign(n_, -1);
        src_.assign(m_, -1);
        dst_.assign(m_, -1);
        oriented_.assign(m_, 0);
        lowpt_.assign(m_, 0);
        lowpt2_.assign(m_, 0);
        nesting_.assign(m_, 0);
        ref_.assign(m_, -1);
        side_.assign(m_, 1);
        lowpt_edge_.assign(m_, -1);
        stack_bottom_.assign(m_, -1);
        S_.clear();
        roots_.clear();

        for (Vertex v = 0; v < n_; ++v)
            if (height_[v] == -1) {
                height_[v] = 0;
                roots_.push_back(v);
                dfs_orientation(v);
            }

        ordered_.assign(n_, {});
        for (Vertex v = 0; v < n_; ++v) {
            auto& out = ordered_[v];
            for (auto [w, e] : adj_[v])
                if (src_[e] == v) out.push_back(e);
            std::stable_sort(out.begin(), out.end(),
                             [&](int a, int b) { return nesting_[a] < nesting_[b]; });
        }
        for (Vertex v : roots_)
            if (!dfs_testing(v)) return false;
        if (rotation_out) build_embedding(*rotation_out);
        return true;
    }

    void dfs_orientation(Vertex v) {
        int e = parent_edge_[v];
        for (auto [w, ei] : adj_[v]) {
            if (oriented_[ei]) continue;
            oriented_[ei] = 1;
            src_[ei] = v;
            dst_[ei] = w;
            lowpt_[ei] = height_[v];
            lowpt2_[ei] = height_[v];
            if (height_[w] == -1) {  // tree edge
                parent_edge_[w] = ei;
                height_[w] = height_[v] + 1;
                dfs_orientation(w);
            } else {  // back edge
                lowpt_[ei] = height_[w];
            }
            nesting_[ei] = 2 * lowpt_[ei];
            if (lowpt2_[ei] < height_[v]) ++nesting_[ei];  // chordal
            if (e != -1) {                                 // update parent lowpoints
                if (lowpt_[ei] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[ei]);
                    lowpt_[e] = lowpt_[ei];
                } else if (lowpt_[ei] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[ei]);
                } else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[ei]);
                }
            }
        }
    }

    bool dfs_testing(Vertex v) {
        int e = parent_edge_[v];
        for (int ei : ordered_[v]) {
            Vertex w = dst_[ei];
            stack_bottom_[ei] = static_cast<int>(S_.size());
            if (ei == parent_edge_[w]) {  // tree edge
                if (!dfs_testing(w)) return false;
            } else {  // back edge
                lowpt_edge_[ei] = ei;
                S_.push_back(ConflictPair{{}, {ei, ei}});
            }
            if (lowpt_[ei] < height_[v]) {  // ei has a return edge
                if (ei == ordered_[v][0]) {
                    lowpt_edge_[e] = lowpt_edge_[ei];
                } else if (!add_constraints(ei, e)) {
                    return false;
                }
            }
        }
        if (e != -1) remove_back_edges(e);
        return true;
    }

    bool add_constraints(int ei, int e) {
        ConflictPair P;
        // merge return edges of ei into P.R
        while (true) {
            assert(!S_.empty());
            ConflictPair Q = S_.back();
            S_.pop_back();
            if (!Q.L.empty()) std::swap(Q.L, Q.R);
            if (!Q.L.empty()) return false;  // not planar
            if (lowpt_[Q.R.lo] > lowpt_[e]) {
                if (P.R.empty())
                    P.R = Q.R;
                else
                    ref_[P.R.lo] = Q.R.hi;
                P.R.lo = Q.R.lo;
            } else {  // align
                ref_[Q.R.lo] = lowpt_edge_[e];
            }
            if (static_cast<int>(S_.size()) == stack_bottom_[ei]) break;
        }
        // merge conflicting return edges of earlier siblings into P.L
        while (!S_.empty() &&
               (conflicting(S_.back().L, ei) || conflicting(S_.back().R, ei))) {
            ConflictPair Q = S_.back();
            S_.pop_back();
            if (conflicting(Q.R, ei)) std::swap(Q.L, Q.R);
            if (conflicting(Q.R, ei)) return false;  // not planar
            if (P.R.lo != -1) ref_[P.R.lo] = Q.R.hi;
            if (Q.R.lo != -1) P.R.lo = Q.R.lo;
            if (P.L.empty())
                P.L = Q.L;
            else
                ref_[P.L.lo] = Q.L.hi;
            P.L.lo = Q.L.lo;
        }
        if (!(P.L.empty() && P.R.empty())) S_.push_back(P);
        return true;
    }

    void remove_back_edges(int e) {
        Vertex u = src_[e];
        // drop entire conflict pairs returning to u
        while (!S_.empty() && lowest(S_.back()) == height_[u]) {
            ConflictPair P = S_.back();
            S_.pop_back();
            if (P.L.lo != -1) side_[P.L.lo] = -1;
        }
        if (!S_.empty()) {  // one more conflict pair to consider
            ConflictPair P = S_.back();
            S_.pop_back();
            while (P.L.hi != -1 && dst_[P.L.hi] == u) P.L.hi = ref_[P.L.hi];
            if (P.L.hi == -1 && P.L.lo != -1) {  // just emptied
                ref_[P.L.lo] = P.R.lo;
                side_[P.L.lo] = -1;
                P.L.lo = -1;
            }
            while (P.R.hi != -1 && dst_[P.R.hi] == u) P.R.hi = ref_[P.R.hi];
            if (P.R.hi == -1 && P.R.lo != -1) {
                ref_[P.R.lo] = P.L.lo;
                side_[P.R.lo] = -1;
                P.R.lo = -1;
            }
            S_.push_back(P);
        }
        // side of e is the side of a highest return edge
        if (lowpt_[e] < height_[u]) {
            assert(!S_.empty());
            int hl = S_.back().L.hi, hr = S_.back().R.hi;
            if (hl != -1 && (hr == -1 || lowpt_[hl] > lowpt_[hr]))
                ref_[e] = hl;
            else
                ref_[e] = hr;
        }
    }

    int resolve_sign(int e) {
        std::vector<int> chain;
        int cur = e;
        while (ref_[cur] != -1) {
            chain.push_back(cur);
            cur = ref_[cur];
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            side_[*it] *= side_[ref_[*it]];
            ref_[*it] = -1;
        }
        return side_[e];
    }

    // ------------------------------------------------------------- embedding

    std::vector<std::vector<Vertex>> cw_;  // clockwise neighbor lists
    std::vector<Vertex> leftmost_, left_ref_, right_ref_;

    void insert_before(Vertex v, Vertex ref, Vertex w) {
        auto& lst = cw_[v];
        auto it = std::find(lst.begin(), lst.end(), ref);
        assert(it != lst.end());
        lst.insert(it, w);
    }
    void insert_after(Vertex v, Vertex ref, Vertex w) {
        auto& lst = cw_[v];
        auto it = std::find(lst.begin(), lst.end(), ref);
        assert(it != lst.end());
        lst.insert(it + 1, w);
    }
    // add (v -> w) counterclockwise of reference x
    void add_cw_ref(Vertex v, Vertex w, Vertex x) {
        insert_before(v, x, w);
        if (x == leftmost_[v]) leftmost_[v] = w;
    }
    // add (v -> w) clockwise of reference x
    void add_ccw_ref(Vertex v, Vertex w, Vertex x) { insert_after(v, x, w); }
    void add_first(Vertex v, Vertex w) {
        if (cw_[v].empty()) {
            cw_[v].push_back(w);
            leftmost_[v] = w;
        } else {
            add_cw_ref(v, w, leftmost_[v]);
        }
    }

    void dfs_embedding(Vertex v) {
        for (int ei : ordered_[v]) {
            Vertex w = dst_[ei];
            if (ei == parent_edge_[w]) {  // tree edge
                add_first(w, v);
                left_ref_[v] = w;
                right_ref_[v] = w;
                dfs_embedding(w);
            } else {  // back edge into ancestor w
                if (side_[ei] == 1) {
                    add_ccw_ref(w, v, right_ref_[w]);
                } else {
                    add_cw_ref(w, v, left_ref_[w]);
                    left_ref_[w] = v;
                }
            }
        }
    }

    void build_embedding(Rotation& rotation) {
        for (int e = 0; e < m_; ++e) nesting_[e] *= resolve_sign(e);
        for (Vertex v = 0; v < n_; ++v)
            std::stable_sort(ordered_[v].begin(), ordered_[v].end(),
                             [&](int a, int b) { return nesting_[a] < nesting_[b]; });

        cw_.assign(n_, {});
        leftmost_.assign(n_, -1);
        left_ref_.assign(n_, -1);
        right_ref_.assign(n_, -1);
        for (Vertex v = 0; v < n_; ++v) {
            Vertex prev = -1;
            for (int ei : ordered_[v]) {
                Vertex w = dst_[ei];
                if (prev == -1) {
                    cw_[v].push_back(w);
                    leftmost_[v] = w;
                } else {
                    add_ccw_ref(v, w, prev);
                }
                prev = w;
            }
        }
        for (Vertex root : roots_) dfs_embedding(root);

        // expose counterclockwise rotations: face successor of (u -> v) is the
        // neighbor after u in v's rotation
        rotation.assign(n_, {});
        for (Vertex v = 0; v < n_; ++v)
            rotation[v].assign(cw_[v].rbegin(), cw_[v].rend());
    }
};

inline bool planar_decision(const Graph& g) {
    PlanarityTester t;
    return t.decide(g.vertex_count, g.edges);
}

struct PlanarityResult {
    bool planar = false;
    Rotation rotation;               // valid when planar
    std::vector<EdgeId> kuratowski;  // valid when not planar
};

// Greedy edge deletion: remove every edge whose removal keeps the graph
// non-planar; what is left is an edge-minimal non-planar subgraph, i.e. a
// subdivision of K5 or K33.
inline std::vector<EdgeId> kuratowski_subgraph(const Graph& g) {
    PlanarityTester t;
    if (t.decide(g.vertex_count, g.edges))
        throw std::invalid_argument("kuratowski_subgraph: graph is planar");
    std::vector<char> active(g.edges.size(), 1);
    std::vector<VertexPair> buf;
    buf.reserve(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e) {
        buf.clear();
        for (size_t i = 0; i < g.edges.size(); ++i)
            if (active[i] && i != e) buf.push_back(g.edges[i]);
        if (!t.decide(g.vertex_count, buf)) active[e] = 0;
    }
    std::vector<EdgeId> out;
    for (size_t e = 0; e < g.edges.size(); ++e)
        if (active[e]) out.push_back(static_cast<EdgeId>(e));
    return out;
}

inline PlanarityResult is_planar(const Graph& g) {
    PlanarityResult res;
    PlanarityTester t;
    if (t.embed(g.vertex_count, g.edges, res.rotation)) {
        res.planar = true;
    } else {
        res.planar = false;
        res.rotation.clear();
        res.kuratowski = kuratowski_subgraph(g);
    }
    return res;
}

}  // namespace crossnum

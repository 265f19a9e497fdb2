#pragma once
// Automorphism groups of small graphs: a reduced generating set found by
// color-refined backtracking, with the group order computed from the
// generators by orbit-stabilizer (Schreier) recursion.

#include <set>
#include <stdexcept>
#include <vector>

#include "crossnum/graph.hpp"
#include "crossnum/isomorphism.hpp"

namespace crossnum {

using Perm = std::vector<Vertex>;

inline Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

inline Perm compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
    Perm c(b.size());
    for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

inline Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<Vertex>(i);
    return q;
}

inline bool preserves_edges(const Graph& g, const Perm& p) {
    for (auto [u, w] : g.edges)
        if (!g.has_edge(p[u], p[w])) return false;
    return true;
}

struct AutomorphismGroup {
    std::vector<Perm> generators;  // identity omitted
    unsigned long long order = 1;
};

namespace detail {

// |<gens>| by orbit-stabilizer with Schreier generators.
inline unsigned long long group_order_from(const std::vector<Perm>& gens, int n) {
    if (gens.empty()) return 1;
    int base = -1;
    for (const auto& g : gens) {
        for (int i = 0; i < n; ++i)
            if (g[i] != i) {
                base = i;
                break;
            }
        if (base != -1) break;
    }
    if (base == -1) return 1;

    // orbit of base with coset representatives
    std::vector<Perm> rep(n);
    std::vector<char> in_orbit(n, 0);
    std::vector<int> queue{base};
    rep[base] = identity_perm(n);
    in_orbit[base] = 1;
    size_t qi = 0;
    while (qi < queue.size()) {
        int x = queue[qi++];
        for (const auto& g : gens) {
            int y = g[x];
            if (!in_orbit[y]) {
                in_orbit[y] = 1;
                rep[y] = compose(g, rep[x]);
                queue.push_back(y);
            }
        }
    }

    std::set<Perm> schreier;
    for (int x : queue)
        for (const auto& g : gens) {
            Perm s = compose(inverse(rep[g[x]]), compose(g, rep[x]));
            bool id = true;
            for (int i = 0; i < n; ++i)
                if (s[i] != i) {
                    id = false;
                    break;
                }
            if (!id) schreier.insert(std::move(s));
        }
    std::vector<Perm> sub(schreier.begin(), schreier.end());
    return static_cast<unsigned long long>(queue.size()) * group_order_from(sub, n);
}

}  // namespace detail

inline AutomorphismGroup automorphism_group(const Graph& g) {
    int n = g.vertex_count;
    if (n > 64) throw std::invalid_argument("automorphism_group: graph too large");
    AutomorphismGroup out;
    if (n == 0) return out;

    auto col = detail::wl_colors(g);

    // placement order: every vertex after the first of its component has a
    // placed neighbor, for early adjacency pruning
    std::vector<Vertex> order;
    std::vector<char> placed(n, 0);
    while (static_cast<int>(order.size()) < n) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n && pick == -1; ++v) {
            if (placed[v]) continue;
            for (Vertex w : g.adj[v])
                if (placed[w]) {
                    pick = v;
                    break;
                }
        }
        if (pick == -1)
            for (Vertex v = 0; v < n; ++v)
                if (!placed[v]) {
                    pick = v;
                    break;
                }
        placed[pick] = 1;
        order.push_back(pick);
    }

    // closure set for generator reduction, rebuilt by BFS over left products
    std::set<Perm> known{identity_perm(n)};
    auto rebuild_closure = [&](const std::vector<Perm>& gens) {
        known.clear();
        std::vector<Perm> frontier{identity_perm(n)};
        known.insert(frontier[0]);
        while (!frontier.empty()) {
            Perm p = frontier.back();
            frontier.pop_back();
            for (const auto& gen : gens) {
                Perm prod = compose(gen, p);
                if (known.insert(prod).second) frontier.push_back(prod);
            }
        }
    };

    long long leaves = 0;
    std::vector<Vertex> map(n, -1);
    std::vector<char> used(n, 0);
    auto backtrack = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            if (++leaves > 2'000'000)
                throw std::runtime_error("automorphism_group: group too large to enumerate");
            Perm p(map.begin(), map.end());
            if (!known.count(p)) {
                out.generators.push_back(p);
                rebuild_closure(out.generators);
            }
            return;
        }
        Vertex v = order[depth];
        for (Vertex cand = 0; cand < n; ++cand) {
            if (used[cand] || col[cand] != col[v]) continue;
            bool ok = true;
            for (Vertex w : g.adj[v])
                if (map[w] != -1 && !g.has_edge(cand, map[w])) {
                    ok = false;
                    break;
                }
            if (ok)
                for (Vertex w = 0; w < n && ok; ++w)
                    if (map[w] != -1 && !g.has_edge(v, w) && g.has_edge(cand, map[w]))
                        ok = false;
            if (!ok) continue;
            map[v] = cand;
            used[cand] = 1;
            self(self, depth + 1);
            map[v] = -1;
            used[cand] = 0;
        }
    };
    backtrack(backtrack, 0);

    out.order = detail::group_order_from(out.generators, n);
    return out;
}

// Action of a vertex permutation on edge ids.
inline std::vector<EdgeId> edge_permutation(const Graph& g, const Perm& p) {
    std::vector<EdgeId> out(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, w] = g.edges[e];
        EdgeId img = g.edge_id(p[u], p[w]);
        if (img < 0) throw std::invalid_argument("edge_permutation: not an automorphism");
        out[e] = img;
    }
    return out;
}

}  // namespace crossnum

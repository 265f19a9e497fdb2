#pragma once
// Small-graph isomorphism with witness, by color-refined backtracking.
// Intended for classification jobs up to ~32 vertices.

#include <optional>
#include <stdexcept>
#include <vector>

#include "crossnum/graph.hpp"

namespace crossnum {

namespace detail {

// Iterated degree refinement; returns a stable coloring. Colors are
// comparable between two graphs because classes are keyed by signature.
inline std::vector<int> wl_colors(const Graph& g) {
    int n = g.vertex_count;
    std::vector<int> col(n, 0);
    for (Vertex v = 0; v < n; ++v) col[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].push_back(col[v]);
            std::vector<int> nb;
            for (Vertex w : g.adj[v]) nb.push_back(col[w]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        auto uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<int> next(n);
        for (Vertex v = 0; v < n; ++v)
            next[v] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        if (next == col) break;
        col = next;
    }
    return col;
}

}  // namespace detail

// Edge-preserving bijection a -> b, or nullopt.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.vertex_count > 32 || b.vertex_count > 32)
        throw std::invalid_argument("find_isomorphism: graphs too large");
    if (a.vertex_count != b.vertex_count || a.edge_count() != b.edge_count())
        return std::nullopt;
    int n = a.vertex_count;
    if (n == 0) return std::vector<Vertex>{};

    auto ca = detail::wl_colors(a);
    auto cb = detail::wl_colors(b);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    // order a's vertices so each one (after the first per component) has a
    // previously placed neighbor
    std::vector<Vertex> order;
    std::vector<char> placed(n, 0);
    while (static_cast<int>(order.size()) < n) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v]) continue;
            bool linked = false;
            for (Vertex w : a.adj[v])
                if (placed[w]) linked = true;
            if (linked) {
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

    std::vector<Vertex> map(n, -1), used(n, 0);
    auto backtrack = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        Vertex v = order[depth];
        for (Vertex cand = 0; cand < n; ++cand) {
            if (used[cand] || cb[cand] != ca[v]) continue;
            bool ok = true;
            for (Vertex w : a.adj[v])
                if (map[w] != -1 && !b.has_edge(cand, map[w])) {
                    ok = false;
                    break;
                }
            // non-edges must stay non-edges (same edge count makes the
            // converse check necessary too)
            if (ok) {
                for (Vertex w = 0; w < n && ok; ++w)
                    if (map[w] != -1 && !a.has_edge(v, w) && b.has_edge(cand, map[w]))
                        ok = false;
            }
            if (!ok) continue;
            map[v] = cand;
            used[cand] = 1;
            if (self(self, depth + 1)) return true;
            map[v] = -1;
            used[cand] = 0;
        }
        return false;
    };
    if (backtrack(backtrack, 0)) return map;
    return std::nullopt;
}

inline bool graph_isomorphic(const Graph& a, const Graph& b) {
    return find_isomorphism(a, b).has_value();
}

}  // namespace crossnum

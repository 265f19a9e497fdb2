#pragma once
// Combinatorial drawings: crossing configurations, planarization with dummy
// vertices, drawing certificates (planarization + rotation system), the
// good-drawing validation rules, crossing-count bookkeeping, subdrawings and
// the certificate text format.
//
// Plan vertex numbering: base vertices keep their ids, crossing i (in the
// canonical order of its edge pair) becomes vertex base.vertex_count + i.

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossnum/faces.hpp"
#include "crossnum/graph.hpp"
#include "crossnum/planarity.hpp"

namespace crossnum {

struct CrossingConfig {
    // unordered pairs of base edges, each entry (a,b) with a < b, list sorted
    std::vector<std::pair<EdgeId, EdgeId>> pairs;
    // for edges crossed at least twice: partner edges in order from the lower
    // endpoint of the edge to the higher
    std::map<EdgeId, std::vector<EdgeId>> orders;

    bool operator==(const CrossingConfig&) const = default;
};

inline std::map<EdgeId, std::vector<EdgeId>> config_partners(const CrossingConfig& c) {
    std::map<EdgeId, std::vector<EdgeId>> partners;
    for (auto [a, b] : c.pairs) {
        partners[a].push_back(b);
        partners[b].push_back(a);
    }
    return partners;
}

inline std::vector<std::string> config_violations(const Graph& g, const CrossingConfig& c) {
    std::vector<std::string> out;
    int m = g.edge_count();
    auto ename = [&](EdgeId e) {
        return "(" + std::to_string(g.edges[e].first) + "," +
               std::to_string(g.edges[e].second) + ")";
    };
    for (auto [a, b] : c.pairs) {
        if (a < 0 || b < 0 || a >= m || b >= m) {
            out.push_back("crossing references unknown edge");
            return out;
        }
        if (a == b) out.push_back("edge crosses itself: " + ename(a));
        else if (g.edges_adjacent(a, b))
            out.push_back("adjacent edges cross: " + ename(a) + " and " + ename(b));
        if (a > b) out.push_back("pair not in canonical order");
    }
    auto sorted = c.pairs;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.pairs) out.push_back("pair list not sorted");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        out.push_back("two edges cross more than once");

    auto partners = config_partners(c);
    for (auto& [e, ps] : partners) {
        auto it = c.orders.find(e);
        if (ps.size() >= 2) {
            if (it == c.orders.end()) {
                out.push_back("missing crossing order for edge " + ename(e));
                continue;
            }
            auto a = it->second, b = ps;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b)
                out.push_back("crossing order of edge " + ename(e) +
                              " is not a permutation of its partners");
        } else if (it != c.orders.end() && it->second != ps) {
            out.push_back("crossing order of edge " + ename(e) + " mismatches partner");
        }
    }
    for (auto& [e, seq] : c.orders)
        if (!partners.count(e))
            out.push_back("crossing order for uncrossed edge " + ename(e));
    return out;
}

struct Planarization {
    Graph graph;
    std::vector<std::pair<EdgeId, EdgeId>> crossings;  // canonical pair order
    std::vector<std::vector<Vertex>> edge_path;        // per base edge, u .. w
    std::vector<EdgeId> owner;                         // per plan edge
};

inline Planarization planarize(const Graph& g, const CrossingConfig& c) {
    auto bad = config_violations(g, c);
    if (!bad.empty()) throw std::invalid_argument("planarize: " + bad.front());

    Planarization p;
    p.crossings = c.pairs;
    std::map<std::pair<EdgeId, EdgeId>, int> idx;
    for (size_t i = 0; i < c.pairs.size(); ++i) idx[c.pairs[i]] = static_cast<int>(i);

    auto partners = config_partners(c);
    int n = g.vertex_count;
    std::vector<std::pair<VertexPair, EdgeId>> plan_edges;
    p.edge_path.assign(g.edge_count(), {});
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, w] = g.edges[e];
        std::vector<EdgeId> seq;
        if (auto it = c.orders.find(e); it != c.orders.end()) seq = it->second;
        else if (auto pt = partners.find(e); pt != partners.end()) seq = pt->second;
        auto& path = p.edge_path[e];
        path.push_back(u);
        for (EdgeId f : seq) {
            auto key = std::minmax(e, f);
            path.push_back(n + idx.at({key.first, key.second}));
        }
        path.push_back(w);
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            Vertex a = path[i], b = path[i + 1];
            if (a > b) std::swap(a, b);
            plan_edges.push_back({{a, b}, e});
        }
    }
    std::sort(plan_edges.begin(), plan_edges.end());
    std::vector<VertexPair> es;
    p.owner.clear();
    for (auto& [pr, own] : plan_edges) {
        es.push_back(pr);
        p.owner.push_back(own);
    }
    p.graph = make_graph(n + static_cast<int>(c.pairs.size()), es);
    return p;
}

struct DrawingCertificate {
    Graph base;
    CrossingConfig config;
    Rotation rotation;  // indexed by plan vertex id

    int nu() const { return static_cast<int>(config.pairs.size()); }
    bool operator==(const DrawingCertificate&) const = default;
};

inline std::vector<std::string> validate_certificate(const DrawingCertificate& cert) {
    std::vector<std::string> out = config_violations(cert.base, cert.config);
    if (!out.empty()) return out;
    Planarization plan = planarize(cert.base, cert.config);
    const Graph& pg = plan.graph;
    int n = cert.base.vertex_count;

    if (static_cast<int>(cert.rotation.size()) != pg.vertex_count) {
        out.push_back("rotation covers " + std::to_string(cert.rotation.size()) +
                      " vertices, planarization has " + std::to_string(pg.vertex_count));
        return out;
    }
    for (Vertex v = 0; v < pg.vertex_count; ++v) {
        auto a = cert.rotation[v];
        auto b = pg.adj[v];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            out.push_back("rotation of vertex " + std::to_string(v) +
                          " does not match the planarization");
        }
    }
    if (!out.empty()) return out;

    // crossing dummies must alternate the strands of their two edges
    for (size_t i = 0; i < plan.crossings.size(); ++i) {
        Vertex d = n + static_cast<int>(i);
        const auto& rot = cert.rotation[d];
        if (rot.size() != 4) {
            out.push_back("crossing x" + std::to_string(i) + " has degree " +
                          std::to_string(rot.size()));
            continue;
        }
        EdgeId o0 = plan.owner[pg.edge_id(d, rot[0])];
        EdgeId o1 = plan.owner[pg.edge_id(d, rot[1])];
        EdgeId o2 = plan.owner[pg.edge_id(d, rot[2])];
        EdgeId o3 = plan.owner[pg.edge_id(d, rot[3])];
        if (!(o0 == o2 && o1 == o3 && o0 != o1))
            out.push_back("non-alternating crossing x" + std::to_string(i));
    }
    if (!out.empty()) return out;

    if (!euler_genus_zero(pg, cert.rotation)) out.push_back("genus > 0");
    return out;
}

// (nu_D(a), nu_D(b), nu_D(a,b)) for disjoint base edge sets a, b.
inline std::tuple<int, int, int> crossing_counts(const DrawingCertificate& cert,
                                                 const std::vector<EdgeId>& a,
                                                 const std::vector<EdgeId>& b) {
    std::set<EdgeId> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    for (EdgeId e : sa)
        if (sb.count(e)) throw std::invalid_argument("crossing_counts: sets overlap");
    int na = 0, nb = 0, nab = 0;
    for (auto [x, y] : cert.config.pairs) {
        bool xa = sa.count(x), ya = sa.count(y);
        bool xb = sb.count(x), yb = sb.count(y);
        if (xa && ya) ++na;
        else if (xb && yb) ++nb;
        else if ((xa && yb) || (xb && ya)) ++nab;
    }
    return {na, nb, nab};
}

inline std::vector<EdgeId> clean_edges(const DrawingCertificate& cert) {
    std::vector<char> dirty(cert.base.edge_count(), 0);
    for (auto [a, b] : cert.config.pairs) dirty[a] = dirty[b] = 1;
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < cert.base.edge_count(); ++e)
        if (!dirty[e]) out.push_back(e);
    return out;
}

// Restriction of the drawing to a subset of base edges. Vertex ids are kept;
// vertices incident only to dropped edges become isolated.
inline DrawingCertificate subdrawing(const DrawingCertificate& cert,
                                     const std::vector<EdgeId>& keep) {
    const Graph& g = cert.base;
    std::vector<char> kept(g.edge_count(), 0);
    for (EdgeId e : keep) {
        if (e < 0 || e >= g.edge_count())
            throw std::invalid_argument("subdrawing: unknown edge");
        kept[e] = 1;
    }
    std::vector<VertexPair> new_edges;
    std::vector<EdgeId> old_of_new;
    std::vector<EdgeId> new_of_old(g.edge_count(), -1);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (kept[e]) {
            new_of_old[e] = static_cast<EdgeId>(new_edges.size());
            new_edges.push_back(g.edges[e]);
            old_of_new.push_back(e);
        }
    Graph nb = make_graph(g.vertex_count, new_edges);

    CrossingConfig nc;
    for (auto [a, b] : cert.config.pairs)
        if (kept[a] && kept[b]) nc.pairs.push_back({new_of_old[a], new_of_old[b]});
    std::sort(nc.pairs.begin(), nc.pairs.end());
    auto partners = config_partners(nc);
    Planarization old_plan = planarize(cert.base, cert.config);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!kept[e]) continue;
        EdgeId ne = new_of_old[e];
        if (!partners.count(ne) || partners[ne].size() < 2) continue;
        std::vector<EdgeId> seq;
        auto it = cert.config.orders.find(e);
        std::vector<EdgeId> old_seq;
        if (it != cert.config.orders.end()) old_seq = it->second;
        else old_seq = config_partners(cert.config)[e];
        for (EdgeId f : old_seq)
            if (kept[f]) seq.push_back(new_of_old[f]);
        nc.orders[ne] = seq;
    }

    Planarization new_plan = planarize(nb, nc);
    int n = g.vertex_count;
    // old crossing index -> new crossing index
    std::map<int, int> cross_map;
    {
        std::map<std::pair<EdgeId, EdgeId>, int> new_idx;
        for (size_t i = 0; i < new_plan.crossings.size(); ++i)
            new_idx[new_plan.crossings[i]] = static_cast<int>(i);
        for (size_t i = 0; i < old_plan.crossings.size(); ++i) {
            auto [a, b] = old_plan.crossings[i];
            if (kept[a] && kept[b]) {
                auto key = std::minmax(new_of_old[a], new_of_old[b]);
                cross_map[static_cast<int>(i)] =
                    new_idx.at({key.first, key.second});
            }
        }
    }
    auto survives = [&](Vertex pv) {
        if (pv < n) return true;
        return cross_map.count(pv - n) > 0;
    };
    auto to_new = [&](Vertex pv) {
        return pv < n ? pv : n + cross_map.at(pv - n);
    };
    // walk the old path of edge e from old plan vertex x toward y to the next
    // surviving anchor
    auto next_anchor = [&](EdgeId e, Vertex x, Vertex y) {
        const auto& path = old_plan.edge_path[e];
        int xi = -1, step = 0;
        for (int i = 0; i < static_cast<int>(path.size()); ++i)
            if (path[i] == x) {
                if (i + 1 < static_cast<int>(path.size()) && path[i + 1] == y) {
                    xi = i;
                    step = 1;
                    break;
                }
                if (i > 0 && path[i - 1] == y) {
                    xi = i;
                    step = -1;
                    break;
                }
            }
        if (xi < 0) throw std::logic_error("subdrawing: dart not on edge path");
        int i = xi + step;
        while (!survives(path[i])) i += step;
        return to_new(path[i]);
    };

    Rotation rot(new_plan.graph.vertex_count);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex nbv : cert.rotation[v]) {
            EdgeId own = old_plan.owner[old_plan.graph.edge_id(v, nbv)];
            if (!kept[own]) continue;
            rot[v].push_back(next_anchor(own, v, nbv));
        }
    }
    for (auto [oi, ni] : cross_map) {
        Vertex od = n + oi;
        for (Vertex nbv : cert.rotation[od]) {
            EdgeId own = old_plan.owner[old_plan.graph.edge_id(od, nbv)];
            rot[n + ni].push_back(next_anchor(own, od, nbv));
        }
    }
    return DrawingCertificate{std::move(nb), std::move(nc), std::move(rot)};
}

// ---------------------------------------------------------------- text format

inline std::string serialize_certificate(const DrawingCertificate& cert) {
    Planarization plan = planarize(cert.base, cert.config);
    int n = cert.base.vertex_count;
    auto token = [&](Vertex pv) {
        return pv < n ? std::to_string(pv) : "x" + std::to_string(pv - n);
    };
    std::ostringstream out;
    out << serialize_graph(cert.base);
    for (size_t i = 0; i < plan.crossings.size(); ++i) {
        auto [a, b] = plan.crossings[i];
        out << "x " << i << " " << cert.base.edges[a].first << " "
            << cert.base.edges[a].second << " " << cert.base.edges[b].first << " "
            << cert.base.edges[b].second << "\n";
    }
    std::map<std::pair<EdgeId, EdgeId>, int> idx;
    for (size_t i = 0; i < plan.crossings.size(); ++i) idx[plan.crossings[i]] = (int)i;
    for (auto& [e, seq] : cert.config.orders) {
        out << "order " << cert.base.edges[e].first << " " << cert.base.edges[e].second
            << " :";
        for (EdgeId f : seq) {
            auto key = std::minmax(e, f);
            out << " " << idx.at({key.first, key.second});
        }
        out << "\n";
    }
    for (Vertex pv = 0; pv < plan.graph.vertex_count; ++pv) {
        out << "rot " << token(pv) << " :";
        const auto& r = cert.rotation[pv];
        size_t start = 0;
        for (size_t i = 1; i < r.size(); ++i)
            if (r[i] < r[start]) start = i;
        for (size_t i = 0; i < r.size(); ++i)
            out << " " << token(r[(start + i) % r.size()]);
        out << "\n";
    }
    return out.str();
}

inline DrawingCertificate parse_certificate(std::istream& in) {
    std::string line;
    std::vector<std::string> lines;
    while (detail::format_line(in, line)) lines.push_back(line);
    size_t pos = 0;
    auto peek_tag = [&]() -> std::string {
        if (pos >= lines.size()) return "";
        std::istringstream ls(lines[pos]);
        std::string t;
        ls >> t;
        return t;
    };

    // graph section
    std::ostringstream gtext;
    while (pos < lines.size()) {
        std::string t = peek_tag();
        if (t != "v" && t != "e") break;
        gtext << lines[pos++] << "\n";
    }
    Graph base = parse_graph(gtext.str());
    int n = base.vertex_count;

    DrawingCertificate cert;
    cert.base = base;
    // x lines
    std::vector<std::pair<EdgeId, EdgeId>> pairs;
    while (peek_tag() == "x") {
        std::istringstream ls(lines[pos++]);
        std::string t;
        int id, u1, w1, u2, w2;
        if (!(ls >> t >> id >> u1 >> w1 >> u2 >> w2))
            throw std::runtime_error("certificate: bad x line");
        EdgeId a = base.edge_id(u1, w1), b = base.edge_id(u2, w2);
        if (a < 0 || b < 0)
            throw std::runtime_error("certificate: x line names unknown edge");
        if (id != static_cast<int>(pairs.size()))
            throw std::runtime_error("certificate: crossing ids must be 0.. in order");
        pairs.push_back({a, b});
    }
    auto sorted = pairs;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != pairs)
        throw std::runtime_error("certificate: crossings not in canonical order");
    cert.config.pairs = pairs;

    while (peek_tag() == "order") {
        std::istringstream ls(lines[pos++]);
        std::string t;
        int u, w;
        if (!(ls >> t >> u >> w)) throw std::runtime_error("certificate: bad order line");
        EdgeId e = base.edge_id(u, w);
        if (e < 0) throw std::runtime_error("certificate: order line names unknown edge");
        if (!(ls >> t) || t != ":") throw std::runtime_error("certificate: bad order line");
        std::vector<EdgeId> seq;
        int id;
        while (ls >> id) {
            if (id < 0 || id >= static_cast<int>(pairs.size()))
                throw std::runtime_error("certificate: order references unknown crossing");
            auto [a, b] = pairs[id];
            if (a != e && b != e)
                throw std::runtime_error("certificate: order crossing not on edge");
            seq.push_back(a == e ? b : a);
        }
        if (cert.config.orders.count(e))
            throw std::runtime_error("certificate: duplicate order line");
        cert.config.orders[e] = seq;
    }

    int plan_n = n + static_cast<int>(pairs.size());
    auto parse_token = [&](const std::string& s) -> Vertex {
        if (!s.empty() && s[0] == 'x') {
            int id = std::stoi(s.substr(1));
            if (id < 0 || id >= static_cast<int>(pairs.size()))
                throw std::runtime_error("certificate: unknown crossing token " + s);
            return n + id;
        }
        int v = std::stoi(s);
        if (v < 0 || v >= n) throw std::runtime_error("certificate: unknown vertex " + s);
        return v;
    };
    cert.rotation.assign(plan_n, {});
    std::vector<char> seen(plan_n, 0);
    while (peek_tag() == "rot") {
        std::istringstream ls(lines[pos++]);
        std::string t, vtok;
        ls >> t >> vtok;
        Vertex pv = parse_token(vtok);
        if (seen[pv]) throw std::runtime_error("certificate: duplicate rot line");
        seen[pv] = 1;
        if (!(ls >> t) || t != ":") throw std::runtime_error("certificate: bad rot line");
        std::string s;
        while (ls >> s) cert.rotation[pv].push_back(parse_token(s));
    }
    if (pos != lines.size())
        throw std::runtime_error("certificate: unexpected line: " + lines[pos]);
    return cert;
}

inline DrawingCertificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    return parse_certificate(in);
}

}  // namespace crossnum

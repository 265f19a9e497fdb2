#pragma once
// Executable checks for the lower-bound machinery of the P(10,3) analysis:
// the dual graph H of a half-drawing, its crossing lower bound, the per-region
// bounds, and the zero-cross chain. Every check is an assertion evaluated on
// a valid drawing certificate; the bounds are theorems, so any failure is a
// toolkit bug, which makes the audit a strong end-to-end test.

#include <sstream>
#include <string>
#include <vector>

#include "crossnum/drawing.hpp"
#include "crossnum/isomorphism.hpp"
#include "crossnum/petersen.hpp"
#include "crossnum/regions.hpp"

namespace crossnum {

struct DualGraphH {
    std::vector<int> region_ids;               // hosting regions, ascending
    std::vector<std::pair<int, int>> h_edges;  // region id pairs, canonical
    int f_n = 0;                               // number of degree-1 vertices

    bool operator==(const DualGraphH&) const = default;
};

namespace detail {

inline const std::vector<EdgeId>& side_edges(const Partition& p, int i) {
    return i == 1 ? p.e1 : p.e2;
}

inline Graph h_as_graph(const DualGraphH& h) {
    std::vector<int> ids = h.region_ids;
    auto rank = [&](int r) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), r) - ids.begin());
    };
    std::vector<VertexPair> es;
    for (auto [a, b] : h.h_edges) es.emplace_back(rank(a), rank(b));
    return make_graph(static_cast<int>(ids.size()), es);
}

inline Graph path_graph(int n) {
    std::vector<VertexPair> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return make_graph(n, es);
}

}  // namespace detail

// Dual graph of the side-i subdrawing: one vertex per region of D_i hosting a
// segment of the other half, an edge between regions whose common boundary is
// crossed by an edge of the other half.
inline DualGraphH build_h(const DrawingCertificate& cert, const Partition& p, int i) {
    {
        auto bad = validate_certificate(cert);
        if (!bad.empty()) throw std::invalid_argument("build_h: invalid certificate: " + bad.front());
    }
    const auto& keep = detail::side_edges(p, i);
    const auto& other = detail::side_edges(p, 3 - i);
    RegionStructure rs = compute_regions(cert, keep);

    std::set<int> hosts;
    std::vector<char> is_other(cert.base.edge_count(), 0);
    for (EdgeId e : other) is_other[e] = 1;
    std::vector<char> is_kept(cert.base.edge_count(), 0);
    for (EdgeId e : keep) is_kept[e] = 1;
    for (EdgeId pe = 0; pe < rs.plan.graph.edge_count(); ++pe)
        if (is_other[rs.plan.owner[pe]]) hosts.insert(rs.region_of_dart(2 * pe));

    std::set<std::pair<int, int>> hedges;
    for (size_t ci = 0; ci < rs.plan.crossings.size(); ++ci) {
        auto [a, b] = rs.plan.crossings[ci];
        EdgeId crossing_edge = -1;
        if (is_kept[a] && is_other[b]) crossing_edge = b;
        else if (is_kept[b] && is_other[a]) crossing_edge = a;
        if (crossing_edge < 0) continue;
        auto [ra, rb] = strand_regions(rs, static_cast<int>(ci), crossing_edge);
        if (ra != rb) hedges.insert(std::minmax(ra, rb));
    }

    DualGraphH h;
    h.region_ids.assign(hosts.begin(), hosts.end());
    h.h_edges.assign(hedges.begin(), hedges.end());
    std::map<int, int> deg;
    for (auto [a, b] : h.h_edges) {
        ++deg[a];
        ++deg[b];
    }
    h.f_n = 0;
    for (auto [r, d] : deg)
        if (d == 1) ++h.f_n;
    return h;
}

inline bool h_connected(const DualGraphH& h) {
    if (h.region_ids.empty()) return true;
    return is_connected(detail::h_as_graph(h));
}

// 2(|V_H|-1) when H is a path, |E_H| + f_n otherwise.
inline int h_lower_bound(const DualGraphH& h) {
    if (!h_connected(h)) throw std::invalid_argument("h_lower_bound: H is disconnected");
    int nv = static_cast<int>(h.region_ids.size());
    Graph hg = detail::h_as_graph(h);
    bool is_path = hg.edge_count() == nv - 1;
    for (Vertex v = 0; v < nv && is_path; ++v)
        if (hg.degree(v) > 2) is_path = false;
    if (is_path) return 2 * (nv - 1);
    return static_cast<int>(h.h_edges.size()) + h.f_n;
}

// Diagnostic label binning H by the case analysis classes.
inline std::string classify_h(const DualGraphH& h) {
    Graph hg = detail::h_as_graph(h);
    int nv = hg.vertex_count;
    {
        bool is_path = hg.edge_count() == nv - 1 && is_connected(hg);
        for (Vertex v = 0; v < nv && is_path; ++v)
            if (hg.degree(v) > 2) is_path = false;
        if (is_path) return "P" + std::to_string(nv);
    }
    struct Ref {
        const char* name;
        Graph g;
    };
    static const std::vector<Ref> refs = [] {
        std::vector<Ref> v;
        v.push_back({"K3", make_graph(3, {{0, 1}, {1, 2}, {0, 2}})});
        v.push_back({"C4", make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})});
        v.push_back({"K4-e", make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}})});
        v.push_back({"K1,3", make_graph(4, {{0, 1}, {0, 2}, {0, 3}})});
        v.push_back({"K1,3+e", make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}})});
        v.push_back({"K4", make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})});
        return v;
    }();
    for (const auto& r : refs)
        if (nv == r.g.vertex_count && graph_isomorphic(hg, r.g)) return r.name;
    return "other";
}

struct AuditEntry {
    std::string name;
    std::string status;  // pass | fail | skip
    long long bound = 0;
    long long observed = 0;
    std::string note;
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    bool all_pass = true;

    void add(AuditEntry e) {
        if (e.status == "fail") all_pass = false;
        entries.push_back(std::move(e));
    }
};

inline std::string render_report(const AuditReport& rep) {
    std::ostringstream out;
    for (const auto& e : rep.entries) {
        out << e.name << " " << e.status << " bound=" << e.bound
            << " observed=" << e.observed;
        if (!e.note.empty()) out << " " << e.note;
        out << "\n";
    }
    return out.str();
}

namespace detail {

struct SideCounts {
    int nu_e1, nu_e2, nu_e12, nu_e1e2, nu_e1e12, nu_e2e12, nu_total;
};

inline SideCounts side_counts(const DrawingCertificate& cert, const Partition& p) {
    auto [a1, a2, a12] = crossing_counts(cert, p.e1, p.e2);
    auto [b1, b12, c1] = crossing_counts(cert, p.e1, p.e12);
    auto [b2, b12b, c2] = crossing_counts(cert, p.e2, p.e12);
    (void)b1;
    (void)b2;
    (void)b12b;
    return {a1, a2, b12, a12, c1, c2, cert.nu()};
}

}  // namespace detail

inline AuditEntry h_bound_check(const DrawingCertificate& cert, const Partition& p, int i) {
    AuditEntry e;
    e.name = "h-bound-" + std::to_string(i);
    DualGraphH h = build_h(cert, p, i);
    auto counts = detail::side_counts(cert, p);
    if (!h_connected(h)) {
        e.status = "fail";
        e.note = "case=disconnected";
        return e;
    }
    e.bound = h_lower_bound(h);
    e.observed = counts.nu_e1e2;
    e.status = e.observed >= e.bound ? "pass" : "fail";
    e.note = "case=" + classify_h(h);
    return e;
}

inline AuditEntry region_bound_check(const DrawingCertificate& cert, const Partition& p, int i) {
    AuditEntry e;
    e.name = "region-bound-" + std::to_string(i);
    const auto& keep = detail::side_edges(p, i);
    const auto& locate = i == 1 ? p.v2_deg2 : p.v1_deg2;
    auto reports = regions(cert, keep, locate);
    auto counts = detail::side_counts(cert, p);
    long long lhs = (i == 1 ? counts.nu_e1 + counts.nu_e1e12 : counts.nu_e2 + counts.nu_e2e12);
    long long tightest = 0;
    for (const auto& r : reports)
        tightest = std::max(tightest, static_cast<long long>(r.v_in.size()) - 3);
    e.bound = tightest;
    e.observed = lhs;
    e.status = lhs >= tightest ? "pass" : "fail";
    return e;
}

inline AuditEntry two_sided_region_check(const DrawingCertificate& cert, const Partition& p,
                                         int i) {
    AuditEntry e;
    e.name = "two-sided-" + std::to_string(i);
    // regions of the other side's drawing, locating this side's degree-2 class
    const auto& keep = detail::side_edges(p, 3 - i);
    const auto& locate = i == 1 ? p.v1_deg2 : p.v2_deg2;
    RegionStructure rs = compute_regions(cert, keep);
    auto reports = regions(cert, keep, locate);
    auto counts = detail::side_counts(cert, p);

    std::vector<char> kept(cert.base.edge_count(), 0), mine(cert.base.edge_count(), 0);
    for (EdgeId x : keep) kept[x] = 1;
    for (EdgeId x : detail::side_edges(p, i)) mine[x] = 1;

    bool any = false;
    long long min_obs = -1;
    for (const auto& r : reports) {
        if (r.v_in.size() < 2 || r.v_out.size() < 2) continue;
        any = true;
        // incidences of E_i strands with this region's boundary
        long long crossings_on_bound = 0;
        for (size_t ci = 0; ci < rs.plan.crossings.size(); ++ci) {
            auto [a, b] = rs.plan.crossings[ci];
            EdgeId through = -1;
            if (kept[a] && mine[b]) through = b;
            else if (kept[b] && mine[a]) through = a;
            if (through < 0) continue;
            auto [ra, rb] = strand_regions(rs, static_cast<int>(ci), through);
            crossings_on_bound += (ra == r.region_id) + (rb == r.region_id);
        }
        long long obs = std::min(crossings_on_bound, static_cast<long long>(counts.nu_e1e2));
        if (min_obs < 0 || obs < min_obs) min_obs = obs;
    }
    if (!any) {
        e.status = "skip";
        return e;
    }
    e.bound = 3;
    e.observed = min_obs;
    e.status = min_obs >= 3 ? "pass" : "fail";
    return e;
}

inline AuditEntry three_degree_boundary_check(const DrawingCertificate& cert, const Partition& p,
                                              int i, Vertex v) {
    AuditEntry e;
    e.name = "three-degree-" + std::to_string(i) + "-v" + std::to_string(v);
    auto counts = detail::side_counts(cert, p);
    long long nu_other = i == 1 ? counts.nu_e2 : counts.nu_e1;
    if (nu_other != 0) {
        e.status = "skip";
        return e;
    }
    const auto& my2 = i == 1 ? p.v1_deg2 : p.v2_deg2;
    std::set<Vertex> locate(my2.begin(), my2.end());
    for (Vertex w : cert.base.adj[v]) locate.erase(w);
    const auto& keep = detail::side_edges(p, 3 - i);
    RegionStructure rs = compute_regions(cert, keep);
    std::set<int> where;
    for (Vertex w : locate) where.insert(locate_vertex(rs, w));
    if (where.size() != 1) {
        e.status = "skip";
        return e;
    }
    e.bound = 1;
    e.observed = i == 1 ? counts.nu_e2e12 : counts.nu_e1e12;
    e.status = e.observed >= 1 ? "pass" : "fail";
    return e;
}

inline AuditEntry zero_cross_check(const DrawingCertificate& cert, const Partition& p) {
    AuditEntry e;
    e.name = "zero-cross";
    auto counts = detail::side_counts(cert, p);
    if (counts.nu_e1e2 != 0) {
        e.status = "skip";
        return e;
    }
    long long chain = counts.nu_e1 + counts.nu_e1e12 + counts.nu_e2 + counts.nu_e2e12;
    e.bound = 6;
    e.observed = chain;
    e.status = (counts.nu_total >= chain && chain >= 6) ? "pass" : "fail";
    return e;
}

inline AuditEntry additivity_check(const DrawingCertificate& cert, const Partition& p) {
    AuditEntry e;
    e.name = "additivity";
    auto counts = detail::side_counts(cert, p);
    long long total = counts.nu_e1 + counts.nu_e2 + counts.nu_e12 + counts.nu_e1e2 +
                      counts.nu_e1e12 + counts.nu_e2e12;
    e.bound = counts.nu_total;
    e.observed = total;
    e.status = total == counts.nu_total ? "pass" : "fail";
    return e;
}

// Runs every lemma check against a valid P(10,3) certificate.
inline AuditReport audit_all(const DrawingCertificate& cert) {
    {
        auto bad = validate_certificate(cert);
        if (!bad.empty())
            throw std::invalid_argument("audit: certificate invalid: " + bad.front());
    }
    Partition p = p103_partition(cert.base);
    AuditReport rep;
    rep.add(additivity_check(cert, p));
    for (int i : {1, 2}) rep.add(h_bound_check(cert, p, i));
    for (int i : {1, 2}) rep.add(region_bound_check(cert, p, i));
    for (int i : {1, 2}) rep.add(two_sided_region_check(cert, p, i));
    for (int i : {1, 2}) {
        auto v3 = i == 1 ? p.v1_deg3 : p.v2_deg3;
        for (Vertex v : v3) rep.add(three_degree_boundary_check(cert, p, i, v));
    }
    rep.add(zero_cross_check(cert, p));
    return rep;
}

}  // namespace crossnum

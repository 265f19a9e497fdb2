#include <catch2/catch_amalgamated.hpp>

#include "crossnum/audit.hpp"
#include "crossnum/solver.hpp"

using namespace crossnum;

namespace {

DualGraphH h_from(int nv, std::vector<std::pair<int, int>> edges) {
    DualGraphH h;
    for (int i = 0; i < nv; ++i) h.region_ids.push_back(i);
    for (auto& [a, b] : edges) h.h_edges.push_back(std::minmax(a, b));
    std::sort(h.h_edges.begin(), h.h_edges.end());
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

const Graph& p103() {
    static Graph g = build_gp(10, 3);
    return g;
}

std::vector<DrawingCertificate> sampled_certs() {
    static std::vector<DrawingCertificate> certs = [] {
        std::vector<DrawingCertificate> out;
        uint64_t seed = 1;
        for (int k : {8, 9, 10, 9, 8, 10, 9, 10}) {
            auto c = sample_certificate(p103(), k, seed++, 240);
            if (c) out.push_back(std::move(*c));
        }
        return out;
    }();
    return certs;
}

}  // namespace

TEST_CASE("h_lower_bound values from the case analysis") {
    REQUIRE(h_lower_bound(h_from(1, {})) == 0);
    REQUIRE(h_lower_bound(h_from(2, {{0, 1}})) == 2);                          // P2
    REQUIRE(h_lower_bound(h_from(3, {{0, 1}, {1, 2}})) == 4);                  // P3
    REQUIRE(h_lower_bound(h_from(4, {{0, 1}, {1, 2}, {2, 3}})) == 6);          // P4
    REQUIRE(h_lower_bound(h_from(3, {{0, 1}, {1, 2}, {0, 2}})) == 3);          // K3
    REQUIRE(h_lower_bound(h_from(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == 4);  // C4
    REQUIRE(h_lower_bound(h_from(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}})) == 5);  // K4-e
    REQUIRE(h_lower_bound(h_from(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}})) == 5);  // K1,3+e
    REQUIRE(h_lower_bound(h_from(4, {{0, 1}, {0, 2}, {0, 3}})) == 6);          // K1,3: 3+3
    REQUIRE_THROWS_AS(h_lower_bound(h_from(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("classify_h labels") {
    REQUIRE(classify_h(h_from(2, {{0, 1}})) == "P2");
    REQUIRE(classify_h(h_from(3, {{0, 1}, {1, 2}})) == "P3");
    REQUIRE(classify_h(h_from(3, {{0, 1}, {1, 2}, {0, 2}})) == "K3");
    REQUIRE(classify_h(h_from(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == "C4");
    REQUIRE(classify_h(h_from(4, {{0, 1}, {0, 2}, {0, 3}})) == "K1,3");
    REQUIRE(classify_h(h_from(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}})) == "K1,3+e");
    REQUIRE(classify_h(h_from(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}})) == "K4-e");
    REQUIRE(classify_h(h_from(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == "K4");
    REQUIRE(classify_h(h_from(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})) == "other");
}

TEST_CASE("audit passes on sampled certificates") {
    auto certs = sampled_certs();
    REQUIRE(certs.size() >= 4);
    Partition p = p103_partition(p103());
    for (const auto& cert : certs) {
        AuditReport rep = audit_all(cert);
        INFO(render_report(rep));
        REQUIRE(rep.all_pass);

        // H is connected on both sides and f_n is consistent
        for (int i : {1, 2}) {
            DualGraphH h = build_h(cert, p, i);
            REQUIRE(h_connected(h));
            std::map<int, int> deg;
            for (auto [a, b] : h.h_edges) {
                ++deg[a];
                ++deg[b];
            }
            int fn = 0;
            for (auto [r, d] : deg)
                if (d == 1) ++fn;
            REQUIRE(fn == h.f_n);
            for (auto [a, b] : h.h_edges) {
                REQUIRE(std::binary_search(h.region_ids.begin(), h.region_ids.end(), a));
                REQUIRE(std::binary_search(h.region_ids.begin(), h.region_ids.end(), b));
            }
        }

        // region coverage: every located vertex lies in exactly one region
        for (int i : {1, 2}) {
            const auto& keep = i == 1 ? p.e1 : p.e2;
            const auto& locate = i == 1 ? p.v2_deg2 : p.v1_deg2;
            auto reports = regions(cert, keep, locate);
            size_t total = 0;
            for (const auto& r : reports) total += r.v_in.size();
            REQUIRE(total == locate.size());
            // region count = 4 + nu(E_i) by Euler on the half
            auto counts = crossing_counts(cert, keep, {});
            REQUIRE(static_cast<int>(reports.size()) == 4 + std::get<0>(counts));
        }
    }
}

TEST_CASE("audit report renders deterministically") {
    auto certs = sampled_certs();
    REQUIRE_FALSE(certs.empty());
    AuditReport rep = audit_all(certs.front());
    std::string a = render_report(rep);
    std::string b = render_report(audit_all(certs.front()));
    REQUIRE(a == b);
    REQUIRE(a.find("h-bound-1") != std::string::npos);
    REQUIRE(a.find("case=") != std::string::npos);
    REQUIRE(a.find("additivity pass") != std::string::npos);
}

TEST_CASE("audit refuses invalid certificates and non-P(10,3) graphs") {
    auto certs = sampled_certs();
    REQUIRE_FALSE(certs.empty());
    DrawingCertificate bad = certs.front();
    bad.rotation[0].pop_back();
    REQUIRE_THROWS_AS(audit_all(bad), std::invalid_argument);

    Graph k5 = make_graph(5, [] {
        std::vector<VertexPair> es;
        for (int u = 0; u < 5; ++u)
            for (int w = u + 1; w < 5; ++w) es.emplace_back(u, w);
        return es;
    }());
    auto k5cert = make_embedded_certificate(k5, {});
    // K5 is nonplanar so an empty config cannot embed; use a 1-crossing cert
    if (!k5cert) {
        CrossingConfig c;
        EdgeId a = k5.edge_id(0, 1), b = k5.edge_id(2, 3);
        c.pairs = {{std::min(a, b), std::max(a, b)}};
        k5cert = make_embedded_certificate(k5, c);
    }
    REQUIRE(k5cert.has_value());
    REQUIRE_THROWS_AS(audit_all(*k5cert), std::invalid_argument);
}

#pragma once
// Exact crossing number search. decide_cr_le explores good-drawing crossing
// configurations: a node is a set of crossings with per-edge orders, its
// planarization is tested for planarity, and on failure a Kuratowski witness
// is extracted; every completion must cross some witness segment, so children
// insert one new crossing on a witness segment (all partner edges, all
// insertion positions). Visited configurations are memoized, subtrees whose
// planarization cannot be planarized by deleting the remaining budget of
// segments are pruned, and first crossings are reduced to automorphism orbit
// representatives.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>

#include "crossnum/automorphism.hpp"
#include "crossnum/drawing.hpp"
#include "crossnum/graph.hpp"
#include "crossnum/planarity.hpp"

namespace crossnum {

struct SearchBudget {
    double max_wall_secs = 14400;
    long long max_nodes = 0;  // 0 = unlimited
    int workers = 1;
};

struct SolveStats {
    long long nodes = 0;
    long long planarity_calls = 0;
    double wall_secs = 0;

    void merge(const SolveStats& o) {
        nodes += o.nodes;
        planarity_calls += o.planarity_calls;
    }
};

enum class DecideStatus { found, refuted, timeout };

struct DecideResult {
    DecideStatus status = DecideStatus::timeout;
    std::optional<DrawingCertificate> certificate;
    SolveStats stats;
    int checkpoint_sessions = 0;
};

struct SolveOptions {
    bool use_symmetry = true;
    bool randomize = false;  // shuffle child order; used for certificate sampling
    uint64_t seed = 1;
    int skew_prune_budget = 2;    // node-level skewness prune when remaining <= this
    int segment_filter_budget = 1;  // per-segment/per-partner filters when remaining <= this
    std::string checkpoint_path;  // persists finished root branches of refutations
    std::function<bool(EdgeId, EdgeId)> pair_allowed;  // optional restriction
};

inline int euler_lower_bound(const Graph& g) {
    if (g.vertex_count < 3) return 0;
    return std::max(0, g.edge_count() - 3 * g.vertex_count + 6);
}

// Planar embedding of a configuration's planarization, as a certificate.
// Crossings whose dummies come out non-alternating are touch points, not
// crossings; they are smoothed away (the config shrinks), so the result
// always validates.
inline std::optional<DrawingCertificate> make_embedded_certificate(const Graph& g,
                                                                   CrossingConfig config) {
    PlanarityTester tester;
    for (;;) {
        Planarization plan = planarize(g, config);
        Rotation rot;
        if (!tester.embed(plan.graph.vertex_count, plan.graph.edges, rot))
            return std::nullopt;
        DrawingCertificate cert{g, config, rot};
        auto violations = validate_certificate(cert);
        if (violations.empty()) return cert;
        // locate a non-alternating dummy and drop that crossing
        int drop = -1;
        for (auto& v : violations) {
            if (v.rfind("non-alternating crossing x", 0) == 0) {
                drop = std::stoi(v.substr(std::string("non-alternating crossing x").size()));
                break;
            }
        }
        if (drop < 0) throw std::logic_error("embedding failed validation: " + violations.front());
        auto [a, b] = config.pairs[drop];
        config.pairs.erase(config.pairs.begin() + drop);
        for (auto [e, f] : {std::pair{a, b}, std::pair{b, a}}) {
            auto it = config.orders.find(e);
            if (it == config.orders.end()) continue;
            auto& seq = it->second;
            seq.erase(std::remove(seq.begin(), seq.end(), f), seq.end());
            if (seq.size() < 2) config.orders.erase(it);
        }
    }
}

namespace detail {

using u128 = unsigned __int128;

// open-addressing set of 128-bit keys, sharded for concurrent use
class MemoTable {
  public:
    explicit MemoTable(size_t max_entries) : max_per_shard_(max_entries / kShards + 1) {
        for (auto& s : shards_) {
            s.slots.assign(1 << 12, 0);
            s.count = 0;
        }
    }

    // true when key was absent (and inserted); false when already present
    bool insert(u128 key) {
        ++key;  // reserve 0 as the empty slot
        auto& s = shards_[hash(key) % kShards];
        std::lock_guard<std::mutex> lock(s.mu);
        for (;;) {
            size_t mask = s.slots.size() - 1;
            size_t i = static_cast<size_t>(hash(key)) & mask;
            while (s.slots[i] != 0) {
                if (s.slots[i] == key) return false;
                i = (i + 1) & mask;
            }
            if (s.count * 2 >= s.slots.size()) {
                if (s.slots.size() < max_per_shard_) {
                    grow(s);
                    continue;  // re-probe in the grown table
                }
                overflow_.store(true, std::memory_order_relaxed);
                return true;  // full: allow re-expansion, which is sound
            }
            s.slots[i] = key;
            ++s.count;
            return true;
        }
    }

    bool overflowed() const { return overflow_.load(std::memory_order_relaxed); }

  private:
    static constexpr int kShards = 64;
    struct Shard {
        std::mutex mu;
        std::vector<u128> slots;
        size_t count = 0;
    };
    Shard shards_[kShards];
    size_t max_per_shard_;
    std::atomic<bool> overflow_{false};

    static uint64_t hash(u128 k) {
        uint64_t x = static_cast<uint64_t>(k) ^ static_cast<uint64_t>(k >> 64) * 0x9e3779b97f4a7c15ULL;
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }
    static void grow(Shard& s) {
        std::vector<u128> old = std::move(s.slots);
        s.slots.assign(old.size() * 2, 0);
        size_t mask = s.slots.size() - 1;
        for (u128 k : old) {
            if (k == 0) continue;
            size_t i = static_cast<size_t>(hash(k)) & mask;
            while (s.slots[i] != 0) i = (i + 1) & mask;
            s.slots[i] = k;
        }
    }
};

struct PairTable {
    std::vector<std::pair<EdgeId, EdgeId>> pairs;  // independent pairs, sorted
    std::vector<int> index;                        // m*m -> pair id or -1
    int m = 0;

    void build(const Graph& g, const std::function<bool(EdgeId, EdgeId)>& allowed) {
        m = g.edge_count();
        index.assign(static_cast<size_t>(m) * m, -1);
        pairs.clear();
        for (EdgeId a = 0; a < m; ++a)
            for (EdgeId b = a + 1; b < m; ++b) {
                if (g.edges_adjacent(a, b)) continue;
                if (allowed && !allowed(a, b)) continue;
                index[static_cast<size_t>(a) * m + b] = static_cast<int>(pairs.size());
                index[static_cast<size_t>(b) * m + a] = static_cast<int>(pairs.size());
                pairs.push_back({a, b});
            }
    }
    int id(EdgeId a, EdgeId b) const { return index[static_cast<size_t>(a) * m + b]; }
};

class CrossingSearch {
  public:
    CrossingSearch(const Graph& g, int k, const SearchBudget& budget, const SolveOptions& opts)
        : g_(g), k_(k), budget_(budget), opts_(opts),
          memo_(1u << 25),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(budget.max_wall_secs))) {
        pt_.build(g, opts.pair_allowed);
        use_u128_ = k_ <= 7 && pt_.pairs.size() < 1024;
    }

    DecideResult run();

  private:
    friend struct Worker;
    const Graph& g_;
    int k_;
    SearchBudget budget_;
    SolveOptions opts_;
    MemoTable memo_;
    std::chrono::steady_clock::time_point deadline_;
    PairTable pt_;
    bool use_u128_ = true;
    std::unordered_set<std::string> string_memo_;
    std::mutex string_memo_mu_;

    std::vector<int> root_tasks_;  // pair ids
    std::vector<char> task_done_;
    std::atomic<size_t> next_task_{0};
    std::atomic<bool> stop_{false};    // found or aborted
    std::atomic<bool> aborted_{false};  // timeout / node budget
    std::mutex found_mu_;
    std::optional<DrawingCertificate> found_cert_;
    std::mutex ckpt_mu_;
    std::ofstream ckpt_out_;
    int sessions_ = 0;

    void reduce_root_tasks() {
        AutomorphismGroup aut = automorphism_group(g_);
        if (aut.generators.empty()) return;
        std::vector<std::vector<EdgeId>> egens;
        for (const auto& p : aut.generators) egens.push_back(edge_permutation(g_, p));
        // orbit id per pair id
        std::vector<int> orbit(pt_.pairs.size(), -1);
        for (size_t p = 0; p < pt_.pairs.size(); ++p) {
            if (orbit[p] >= 0) continue;
            std::vector<int> queue{static_cast<int>(p)};
            orbit[p] = static_cast<int>(p);
            while (!queue.empty()) {
                int q = queue.back();
                queue.pop_back();
                auto [a, b] = pt_.pairs[q];
                for (const auto& ep : egens) {
                    int img = pt_.id(ep[a], ep[b]);
                    if (img >= 0 && orbit[img] < 0) {
                        orbit[img] = static_cast<int>(p);
                        queue.push_back(img);
                    }
                }
            }
        }
        std::set<int> tasks(root_tasks_.begin(), root_tasks_.end());
        std::vector<int> kept;
        for (int t : root_tasks_) {
            // keep t only if it is the smallest task in its orbit
            bool min_in_orbit = true;
            for (int q : tasks)
                if (q < t && orbit[q] == orbit[t]) {
                    min_in_orbit = false;
                    break;
                }
            if (min_in_orbit) kept.push_back(t);
        }
        root_tasks_ = std::move(kept);
    }

    void load_checkpoint(DecideResult& result) {
        task_done_.assign(root_tasks_.size(), 0);
        if (opts_.checkpoint_path.empty()) return;
        if (opts_.pair_allowed)
            throw std::invalid_argument("checkpointing with pair restrictions is not supported");
        std::string header = "crossnum-refutation k=" + std::to_string(k_) +
                             " sym=" + std::to_string(opts_.use_symmetry) +
                             " graph-hash=" +
                             std::to_string(std::hash<std::string>{}(serialize_graph(g_)));
        std::set<int> done;
        {
            std::ifstream in(opts_.checkpoint_path);
            std::string line;
            if (in && std::getline(in, line)) {
                if (line != header)
                    throw std::runtime_error("checkpoint file does not match this run");
                while (std::getline(in, line)) {
                    if (line.rfind("session", 0) == 0) ++sessions_;
                    else if (line.rfind("done ", 0) == 0) done.insert(std::stoi(line.substr(5)));
                }
            }
        }
        ckpt_out_.open(opts_.checkpoint_path, std::ios::app);
        if (sessions_ == 0 && done.empty()) ckpt_out_ << header << "\n";
        ++sessions_;
        ckpt_out_ << "session " << sessions_ << "\n";
        ckpt_out_.flush();
        for (size_t i = 0; i < root_tasks_.size(); ++i)
            if (done.count(root_tasks_[i])) task_done_[i] = 1;
        result.checkpoint_sessions = sessions_;
    }

    void record_done(int pid) {
        if (!ckpt_out_.is_open()) return;
        std::lock_guard<std::mutex> lock(ckpt_mu_);
        ckpt_out_ << "done " << pid << "\n";
        ckpt_out_.flush();
    }

    struct Worker;

    void run_worker(Worker& w);
};

// Per-thread search state.
struct CrossingSearch::Worker {
    CrossingSearch& S;
    PlanarityTester tester;
    SolveStats stats;
    uint64_t worker_seed = 1;

    struct Crossing {
        EdgeId a, b;
    };
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> cross_list;  // per base edge: crossing ids in order

    // planarization scratch
    std::vector<VertexPair> plan_edges;
    std::vector<EdgeId> plan_owner;
    std::vector<int> plan_seg;
    std::vector<VertexPair> filter_buf;

    explicit Worker(CrossingSearch& s) : S(s) {
        cross_list.assign(S.g_.edge_count(), {});
    }

    bool root_planar() {
        build_plan();
        ++stats.planarity_calls;
        return tester.decide(plan_n(), plan_edges);
    }

    int plan_n() const { return S.g_.vertex_count + static_cast<int>(crossings.size()); }

    void build_plan() {
        plan_edges.clear();
        plan_owner.clear();
        plan_seg.clear();
        int n = S.g_.vertex_count;
        for (EdgeId e = 0; e < S.g_.edge_count(); ++e) {
            auto [u, w] = S.g_.edges[e];
            Vertex prev = u;
            int seg = 0;
            for (int ci : cross_list[e]) {
                plan_edges.push_back({prev, n + ci});
                plan_owner.push_back(e);
                plan_seg.push_back(seg++);
                prev = n + ci;
            }
            plan_edges.push_back({prev, w});
            plan_owner.push_back(e);
            plan_seg.push_back(seg);
        }
    }

    // all first-crossing pair ids touching the root witness
    std::vector<int> root_candidates() {
        build_plan();
        std::vector<int> witness = extract_witness(all_active());
        std::set<int> pids;
        for (int s : witness) {
            EdgeId e = plan_owner[s];
            for (EdgeId f = 0; f < S.g_.edge_count(); ++f) {
                int pid = S.pt_.id(std::min(e, f), std::max(e, f));
                if (f != e && pid >= 0) pids.insert(pid);
            }
        }
        return {pids.begin(), pids.end()};
    }

    std::vector<char> all_active() const { return std::vector<char>(plan_edges.size(), 1); }

    bool planar_masked(const std::vector<char>& active, int skip = -1) {
        filter_buf.clear();
        for (size_t i = 0; i < plan_edges.size(); ++i)
            if (active[i] && static_cast<int>(i) != skip) filter_buf.push_back(plan_edges[i]);
        ++stats.planarity_calls;
        return tester.decide(plan_n(), filter_buf);
    }

    // minimal non-planar sub-multiset of the active plan edges
    std::vector<int> extract_witness(std::vector<char> active) {
        for (size_t e = 0; e < plan_edges.size(); ++e) {
            if (!active[e]) continue;
            active[e] = 0;
            if (planar_masked(active)) active[e] = 1;
        }
        std::vector<int> out;
        for (size_t e = 0; e < plan_edges.size(); ++e)
            if (active[e]) out.push_back(static_cast<int>(e));
        return out;
    }

    // can `budget` plan-edge deletions make the active subgraph planar?
    bool skew_le(std::vector<char> active, int budget) {
        if (planar_masked(active)) return true;
        if (budget == 0) return false;
        std::vector<int> witness = extract_witness(active);
        for (int s : witness) {
            active[s] = 0;
            if (skew_le(active, budget - 1)) return true;
            active[s] = 1;
        }
        return false;
    }

    detail::u128 encode_config() {
        // canonical: crossings sorted by pair id, each with its rank along
        // both edges (rank along the smaller edge id first)
        struct Item {
            int pid;
            int ra, rb;
        };
        std::vector<Item> items;
        items.reserve(crossings.size());
        for (size_t ci = 0; ci < crossings.size(); ++ci) {
            auto [a, b] = crossings[ci];
            if (a > b) std::swap(a, b);
            int ra = -1, rb = -1;
            const auto& la = cross_list[a];
            const auto& lb = cross_list[b];
            for (size_t i = 0; i < la.size(); ++i)
                if (la[i] == static_cast<int>(ci)) ra = static_cast<int>(i);
            for (size_t i = 0; i < lb.size(); ++i)
                if (lb[i] == static_cast<int>(ci)) rb = static_cast<int>(i);
            items.push_back({S.pt_.id(a, b), ra, rb});
        }
        std::sort(items.begin(), items.end(),
                  [](const Item& x, const Item& y) { return x.pid < y.pid; });
        detail::u128 key = 0;
        for (const auto& it : items) {
            key = (key << 10) | static_cast<unsigned>(it.pid);
            key = (key << 4) | static_cast<unsigned>(it.ra);
            key = (key << 4) | static_cast<unsigned>(it.rb);
        }
        return key;
    }

    std::string encode_config_str() {
        std::string s;
        struct Item {
            int pid, ra, rb;
        };
        std::vector<Item> items;
        for (size_t ci = 0; ci < crossings.size(); ++ci) {
            auto [a, b] = crossings[ci];
            if (a > b) std::swap(a, b);
            int ra = -1, rb = -1;
            for (size_t i = 0; i < cross_list[a].size(); ++i)
                if (cross_list[a][i] == static_cast<int>(ci)) ra = static_cast<int>(i);
            for (size_t i = 0; i < cross_list[b].size(); ++i)
                if (cross_list[b][i] == static_cast<int>(ci)) rb = static_cast<int>(i);
            items.push_back({S.pt_.id(a, b), ra, rb});
        }
        std::sort(items.begin(), items.end(),
                  [](const Item& x, const Item& y) { return x.pid < y.pid; });
        for (const auto& it : items) {
            s += std::to_string(it.pid);
            s += ',';
            s += std::to_string(it.ra);
            s += ',';
            s += std::to_string(it.rb);
            s += ';';
        }
        return s;
    }

    bool memo_insert() {
        if (S.use_u128_) return S.memo_.insert(encode_config());
        std::lock_guard<std::mutex> lock(S.string_memo_mu_);
        return S.string_memo_.insert(encode_config_str()).second;
    }

    void push_crossing(EdgeId e, EdgeId f, int pos_e, int pos_f) {
        int ci = static_cast<int>(crossings.size());
        crossings.push_back({e, f});
        cross_list[e].insert(cross_list[e].begin() + pos_e, ci);
        cross_list[f].insert(cross_list[f].begin() + pos_f, ci);
    }
    void pop_crossing() {
        int ci = static_cast<int>(crossings.size()) - 1;
        auto [e, f] = crossings.back();
        auto& le = cross_list[e];
        le.erase(std::find(le.begin(), le.end(), ci));
        auto& lf = cross_list[f];
        lf.erase(std::find(lf.begin(), lf.end(), ci));
        crossings.pop_back();
    }

    bool crossed(EdgeId a, EdgeId b) const {
        for (const auto& c : crossings)
            if ((c.a == a && c.b == b) || (c.a == b && c.b == a)) return true;
        return false;
    }

    bool out_of_budget() {
        if (S.stop_.load(std::memory_order_relaxed)) return true;
        if ((stats.nodes & 0xff) == 0) {
            if (std::chrono::steady_clock::now() > S.deadline_ ||
                (S.budget_.max_nodes && stats.nodes > S.budget_.max_nodes)) {
                S.aborted_.store(true);
                S.stop_.store(true);
                return true;
            }
        }
        return false;
    }

    // DFS at a node whose planarization is known non-planar.
    DecideStatus dfs() {
        int r = S.k_ - static_cast<int>(crossings.size());
        if (r == 0) return DecideStatus::refuted;
        if (out_of_budget()) return DecideStatus::timeout;

        build_plan();
        if (r <= S.opts_.skew_prune_budget && !skew_le(all_active(), r))
            return DecideStatus::refuted;

        std::vector<int> witness = extract_witness(all_active());

        struct Child {
            EdgeId e, f;
            int pos_e, pos_f;
        };
        std::vector<Child> children;
        std::vector<char> f_ok(S.g_.edge_count(), 2);  // 2 = unknown
        bool filter = r <= S.opts_.segment_filter_budget;
        for (int s : witness) {
            EdgeId e = plan_owner[s];
            int pos_e = plan_seg[s];
            if (filter) {
                auto active = all_active();
                active[s] = 0;
                if (!skew_le(active, r - 1)) continue;
            }
            for (EdgeId f = 0; f < S.g_.edge_count(); ++f) {
                if (f == e || S.pt_.id(std::min(e, f), std::max(e, f)) < 0 || crossed(e, f))
                    continue;
                if (filter) {
                    if (f_ok[f] == 2) {
                        auto active = all_active();
                        for (size_t i = 0; i < plan_edges.size(); ++i)
                            if (plan_owner[i] == f) active[i] = 0;
                        f_ok[f] = skew_le(active, r - 1) ? 1 : 0;
                    }
                    if (!f_ok[f]) continue;
                }
                for (int pos_f = 0; pos_f <= static_cast<int>(cross_list[f].size()); ++pos_f)
                    children.push_back({e, f, pos_e, pos_f});
            }
        }
        if (S.opts_.randomize) {
            std::mt19937_64 rng(worker_seed + stats.nodes * 0x9e3779b97f4a7c15ULL);
            std::shuffle(children.begin(), children.end(), rng);
        }

        for (const auto& c : children) {
            push_crossing(c.e, c.f, c.pos_e, c.pos_f);
            if (!memo_insert()) {
                pop_crossing();
                continue;
            }
            ++stats.nodes;
            build_plan();
            ++stats.planarity_calls;
            bool planar = tester.decide(plan_n(), plan_edges);
            DecideStatus sub = DecideStatus::refuted;
            if (planar) sub = DecideStatus::found;
            else sub = dfs();
            if (sub == DecideStatus::found) return DecideStatus::found;  // state kept
            pop_crossing();
            if (sub == DecideStatus::timeout) return DecideStatus::timeout;
        }
        return DecideStatus::refuted;
    }

    CrossingConfig current_config() const {
        CrossingConfig c;
        for (const auto& cr : crossings) {
            auto [a, b] = std::minmax(cr.a, cr.b);
            c.pairs.push_back({a, b});
        }
        std::sort(c.pairs.begin(), c.pairs.end());
        for (EdgeId e = 0; e < S.g_.edge_count(); ++e) {
            if (cross_list[e].size() < 2) continue;
            std::vector<EdgeId> seq;
            for (int ci : cross_list[e])
                seq.push_back(crossings[ci].a == e ? crossings[ci].b : crossings[ci].a);
            c.orders[e] = seq;
        }
        return c;
    }
};

inline DecideResult CrossingSearch::run() {
    DecideResult result;
    {
        Worker probe(*this);
        if (probe.root_planar()) {
            auto cert = make_embedded_certificate(g_, {});
            result.status = DecideStatus::found;
            result.certificate = std::move(cert);
            result.stats = probe.stats;
            return result;
        }
        if (k_ == 0) {
            result.status = DecideStatus::refuted;
            result.stats = probe.stats;
            return result;
        }
        root_tasks_ = probe.root_candidates();
        result.stats = probe.stats;
    }
    if (opts_.use_symmetry) reduce_root_tasks();
    if (opts_.randomize) {
        if (!opts_.checkpoint_path.empty())
            throw std::invalid_argument("randomized runs cannot be checkpointed");
        std::mt19937_64 rng(opts_.seed);
        std::shuffle(root_tasks_.begin(), root_tasks_.end(), rng);
    }
    load_checkpoint(result);

    int nworkers = std::max(1, budget_.workers);
    std::vector<std::thread> threads;
    std::vector<SolveStats> wstats(nworkers);
    for (int t = 0; t < nworkers; ++t) {
        threads.emplace_back([this, t, &wstats] {
            Worker w(*this);
            w.worker_seed = opts_.seed + 0x9e37 * (t + 1);
            run_worker(w);
            wstats[t] = w.stats;
        });
    }
    for (auto& th : threads) th.join();
    for (auto& s : wstats) result.stats.merge(s);

    std::lock_guard<std::mutex> lock(found_mu_);
    result.checkpoint_sessions = sessions_;
    if (found_cert_) {
        result.status = DecideStatus::found;
        result.certificate = std::move(found_cert_);
    } else if (aborted_.load()) {
        result.status = DecideStatus::timeout;
    } else {
        result.status = DecideStatus::refuted;
    }
    return result;
}

inline void CrossingSearch::run_worker(Worker& w) {
    for (;;) {
        if (stop_.load()) return;
        size_t t = next_task_.fetch_add(1);
        if (t >= root_tasks_.size()) return;
        if (task_done_[t]) continue;
        int pid = root_tasks_[t];
        auto [e, f] = pt_.pairs[pid];
        w.push_crossing(e, f, 0, 0);
        w.memo_insert();
        ++w.stats.nodes;
        w.build_plan();
        ++w.stats.planarity_calls;
        DecideStatus sub;
        if (w.tester.decide(w.plan_n(), w.plan_edges)) sub = DecideStatus::found;
        else sub = w.dfs();
        if (sub == DecideStatus::found) {
            auto cert = make_embedded_certificate(g_, w.current_config());
            std::lock_guard<std::mutex> lock(found_mu_);
            if (!found_cert_) found_cert_ = std::move(cert);
            stop_.store(true);
            return;
        }
        // unwind the root crossing
        while (!w.crossings.empty()) w.pop_crossing();
        if (sub == DecideStatus::timeout) return;
        record_done(pid);
    }
}

}  // namespace detail

inline DecideResult decide_cr_le(const Graph& g, int k, const SearchBudget& budget = {},
                                 const SolveOptions& opts = {}) {
    if (k < 0) throw std::invalid_argument("decide_cr_le: k must be >= 0");
    if (!is_connected(g)) throw std::invalid_argument("decide_cr_le: graph must be connected");
    auto start = std::chrono::steady_clock::now();
    detail::CrossingSearch search(g, k, budget, opts);
    DecideResult res = search.run();
    res.stats.wall_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

struct SolveResult {
    std::optional<int> value;  // empty on timeout
    std::optional<DrawingCertificate> certificate;
    int refutation_k = -1;  // largest k exhaustively refuted (or value-1)
    SolveStats stats;
    bool timed_out = false;
};

inline SolveResult crossing_number(const Graph& g, const SearchBudget& budget = {},
                                   const SolveOptions& opts = {}) {
    auto start = std::chrono::steady_clock::now();
    SolveResult out;
    int k = euler_lower_bound(g);
    for (;;) {
        SearchBudget rest = budget;
        rest.max_wall_secs =
            budget.max_wall_secs -
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (rest.max_wall_secs <= 0) {
            out.timed_out = true;
            break;
        }
        DecideResult r = decide_cr_le(g, k, rest, opts);
        out.stats.merge(r.stats);
        if (r.status == DecideStatus::found) {
            out.value = r.certificate->nu();
            out.certificate = std::move(r.certificate);
            out.refutation_k = *out.value - 1;
            break;
        }
        if (r.status == DecideStatus::timeout) {
            out.timed_out = true;
            break;
        }
        out.refutation_k = k;
        ++k;
    }
    out.stats.wall_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

struct OracleResult {
    bool exceeded = false;
    int value = -1;  // valid when !exceeded
};

// Exhaustive ground truth: every set of <= kmax independent pairs, every
// per-edge crossing order, realizability by planarity of the planarization.
// Deliberately has no pruning; guarded to small inputs.
inline OracleResult brute_force_oracle(const Graph& g, int kmax) {
    if (kmax < 0) throw std::invalid_argument("oracle: kmax must be >= 0");
    if (g.edge_count() > 15 && kmax > 2)
        throw std::invalid_argument("oracle: input beyond size guard (need |E| <= 15 or kmax <= 2)");
    PlanarityTester tester;
    if (tester.decide(g.vertex_count, g.edges)) return {false, 0};

    std::vector<std::pair<EdgeId, EdgeId>> pairs;
    for (EdgeId a = 0; a < g.edge_count(); ++a)
        for (EdgeId b = a + 1; b < g.edge_count(); ++b)
            if (!g.edges_adjacent(a, b)) pairs.push_back({a, b});

    // true when some crossing-order assignment of `chosen` is realizable
    auto realizable = [&](const std::vector<int>& chosen) {
        std::map<EdgeId, std::vector<EdgeId>> partners;
        for (int pi : chosen) {
            partners[pairs[pi].first].push_back(pairs[pi].second);
            partners[pairs[pi].second].push_back(pairs[pi].first);
        }
        std::vector<EdgeId> multi;
        for (auto& [e, ps] : partners)
            if (ps.size() >= 2) {
                std::sort(ps.begin(), ps.end());
                multi.push_back(e);
            }
        CrossingConfig config;
        for (int pi : chosen) config.pairs.push_back(pairs[pi]);
        std::sort(config.pairs.begin(), config.pairs.end());

        auto try_orders = [&](auto&& self, size_t mi) -> bool {
            if (mi == multi.size()) {
                Planarization plan = planarize(g, config);
                return tester.decide(plan.graph.vertex_count, plan.graph.edges);
            }
            EdgeId e = multi[mi];
            auto perm = partners[e];
            std::sort(perm.begin(), perm.end());
            do {
                config.orders[e] = perm;
                if (self(self, mi + 1)) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            config.orders.erase(e);
            return false;
        };
        return try_orders(try_orders, 0);
    };

    for (int size = 1; size <= kmax; ++size) {
        std::vector<int> chosen;
        auto combos = [&](auto&& self, int start) -> bool {
            if (static_cast<int>(chosen.size()) == size) return realizable(chosen);
            for (int i = start; i < static_cast<int>(pairs.size()); ++i) {
                chosen.push_back(i);
                if (self(self, i + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (combos(combos, 0)) return {false, size};
    }
    return {true, -1};
}

// One randomized run; a source of varied valid certificates at a given k.
inline std::optional<DrawingCertificate> sample_certificate(const Graph& g, int k,
                                                            uint64_t seed,
                                                            double budget_secs = 120) {
    SolveOptions opts;
    opts.randomize = true;
    opts.seed = seed;
    opts.use_symmetry = false;
    SearchBudget budget;
    budget.max_wall_secs = budget_secs;
    DecideResult r = decide_cr_le(g, k, budget, opts);
    if (r.status != DecideStatus::found) return std::nullopt;
    return r.certificate;
}

}  // namespace crossnum

// Command-line surface for the crossing-number toolkit.
// Exit codes: 0 success, 1 property violation, 2 usage/parse error, 3 timeout.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "crossnum/audit.hpp"
#include "crossnum/drawing.hpp"
#include "crossnum/graph.hpp"
#include "crossnum/petersen.hpp"
#include "crossnum/solver.hpp"

using namespace crossnum;

namespace {

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

DrawingCertificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_certificate(in);
}

void write_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::pair<int, int> parse_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) {
        int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

void print_stats(const SolveStats& st) {
    std::cout << "nodes = " << st.nodes << "\n";
    std::cout << "planarity_calls = " << st.planarity_calls << "\n";
    std::cout << std::fixed << std::setprecision(2) << "wall_secs = " << st.wall_secs
              << "\n";
}

int cmd_gen(int n, int k, const std::string& out) {
    Graph g = build_gp(n, k);  // throws on degenerate parameters
    write_file(out, serialize_graph(g));
    return 0;
}

int cmd_solve(const std::string& path, int max_k, double budget_secs, int workers,
              bool no_symmetry, uint64_t seed, const std::string& cert_path,
              const std::string& checkpoint) {
    Graph g = load_graph(path);
    SearchBudget budget;
    budget.max_wall_secs = budget_secs;
    budget.workers = workers;
    SolveOptions opts;
    opts.use_symmetry = !no_symmetry;
    opts.seed = seed;
    opts.checkpoint_path = checkpoint;

    auto start = std::chrono::steady_clock::now();
    SolveStats stats;
    int k = euler_lower_bound(g);
    int refuted = k - 1;
    std::optional<DrawingCertificate> found;
    bool timeout = false;
    for (; max_k < 0 || k <= max_k; ++k) {
        SearchBudget rest = budget;
        rest.max_wall_secs =
            budget_secs -
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (rest.max_wall_secs <= 0) {
            timeout = true;
            break;
        }
        DecideResult r = decide_cr_le(g, k, rest, opts);
        stats.merge(r.stats);
        if (r.status == DecideStatus::found) {
            found = std::move(r.certificate);
            break;
        }
        if (r.status == DecideStatus::timeout) {
            timeout = true;
            break;
        }
        refuted = k;
    }
    stats.wall_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (found) {
        std::cout << "cr = " << found->nu() << "\n";
        print_stats(stats);
        if (!cert_path.empty()) write_file(cert_path, serialize_certificate(*found));
        return 0;
    }
    if (timeout) {
        std::cout << "cr >= " << refuted + 1 << "\n";
        print_stats(stats);
        return 3;
    }
    std::cout << "cr > " << max_k << "\n";
    print_stats(stats);
    return 0;
}

int cmd_verify(const std::string& path) {
    DrawingCertificate cert = load_certificate(path);
    auto violations = validate_certificate(cert);
    if (violations.empty()) {
        std::cout << "valid, nu(D) = " << cert.nu() << "\n";
        return 0;
    }
    for (const auto& v : violations) std::cout << "violation: " << v << "\n";
    return 1;
}

int cmd_audit(const std::string& path) {
    DrawingCertificate cert = load_certificate(path);
    if (!(cert.base == build_gp(10, 3))) {
        std::cerr << "audit: graph is not P(10,3) under the canonical labeling\n";
        return 2;
    }
    auto violations = validate_certificate(cert);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cout << "violation: " << v << "\n";
        return 1;
    }
    AuditReport rep = audit_all(cert);
    std::cout << render_report(rep);
    return rep.all_pass ? 0 : 1;
}

int cmd_oracle(const std::string& path, int kmax) {
    Graph g = load_graph(path);
    OracleResult r = brute_force_oracle(g, kmax);
    if (r.exceeded) std::cout << "cr > " << kmax << "\n";
    else std::cout << "cr = " << r.value << "\n";
    return 0;
}

int cmd_table(const std::string& nrange, const std::string& krange, double cell_budget) {
    auto [n0, n1] = parse_range(nrange);
    auto [k0, k1] = parse_range(krange);
    std::ostringstream out;
    out << std::setw(6) << "";
    for (int k = k0; k <= k1; ++k) out << std::setw(8) << ("k=" + std::to_string(k));
    out << "\n";
    for (int n = n0; n <= n1; ++n) {
        out << std::setw(6) << ("n=" + std::to_string(n));
        for (int k = k0; k <= k1; ++k) {
            std::string cell;
            try {
                Graph g = build_gp(n, k);
                SearchBudget budget;
                budget.max_wall_secs = cell_budget;
                budget.workers = static_cast<int>(std::thread::hardware_concurrency());
                SolveResult r = crossing_number(g, budget);
                if (r.value) cell = std::to_string(*r.value);
                else cell = ">=" + std::to_string(r.refutation_k + 1) + "?";
            } catch (const std::invalid_argument&) {
                cell = "-";
            }
            out << std::setw(8) << cell;
        }
        out << "\n";
    }
    std::cout << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact crossing-number toolkit for small graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a generalized Petersen graph file");
    std::vector<int> gp;
    std::string gen_out = "-";
    gen->add_option("--gp", gp, "parameters n k")->expected(2)->required();
    gen->add_option("-o,--out", gen_out, "output path (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "compute the exact crossing number");
    std::string solve_path, solve_cert, solve_ckpt;
    int solve_maxk = -1;
    double solve_budget = 14400;
    int solve_workers = std::max(1u, std::thread::hardware_concurrency());
    bool solve_nosym = false, solve_det = false;
    uint64_t solve_seed = 1;
    solve->add_option("graph", solve_path, "graph file")->required();
    solve->add_option("--max-k", solve_maxk, "stop after refuting this k");
    solve->add_option("--budget-secs", solve_budget, "wall clock budget");
    solve->add_option("--workers", solve_workers, "worker threads");
    solve->add_flag("--no-symmetry", solve_nosym, "disable root orbit pruning");
    solve->add_flag("--deterministic", solve_det,
                    "canonical expansion order (with --workers 1 output is reproducible)");
    solve->add_option("--seed", solve_seed, "seed for tie breaking");
    solve->add_option("--cert", solve_cert, "write the certificate here");
    solve->add_option("--checkpoint", solve_ckpt, "checkpoint file for long refutations");

    // verify
    auto* verify = app.add_subcommand("verify", "validate a drawing certificate");
    std::string verify_path;
    verify->add_option("cert", verify_path, "certificate file")->required();

    // audit
    auto* audit = app.add_subcommand("audit", "run the P(10,3) lemma audit");
    std::string audit_path;
    audit->add_option("cert", audit_path, "certificate file")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force crossing number (ground truth)");
    std::string oracle_path;
    int oracle_kmax = 2;
    oracle->add_option("graph", oracle_path, "graph file")->required();
    oracle->add_option("--kmax", oracle_kmax, "search limit")->required();

    // table
    auto* table = app.add_subcommand("table", "table of exact values for P(n,k)");
    bool table_gp = false;
    std::string table_n, table_k;
    double table_budget = 60;
    table->add_flag("--gp", table_gp, "generalized Petersen family");
    table->add_option("--n", table_n, "n range a:b")->required();
    table->add_option("--k", table_k, "k range a:b")->required();
    table->add_option("--budget-secs", table_budget, "budget per cell");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gp[0], gp[1], gen_out);
        if (solve->parsed()) {
            (void)solve_det;
            return cmd_solve(solve_path, solve_maxk, solve_budget, solve_workers,
                             solve_nosym, solve_seed, solve_cert, solve_ckpt);
        }
        if (verify->parsed()) return cmd_verify(verify_path);
        if (audit->parsed()) return cmd_audit(audit_path);
        if (oracle->parsed()) return cmd_oracle(oracle_path, oracle_kmax);
        if (table->parsed()) {
            if (!table_gp) {
                std::cerr << "table: only --gp is supported\n";
                return 2;
            }
            return cmd_table(table_n, table_k, table_budget);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

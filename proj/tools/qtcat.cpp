// qtcat: partition statistics, q,t-Catalan polynomials, and chain-family
// verification over .chains data files. Batch-only; exit codes are
// 0 success, 1 verification/data failure, 2 budget or cap exceeded, 3 usage.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qtcat/catalan.hpp"
#include "qtcat/chaindata.hpp"
#include "qtcat/chains.hpp"
#include "qtcat/dyck.hpp"
#include "qtcat/enumerate.hpp"
#include "qtcat/search.hpp"
#include "qtcat/util.hpp"
#include "qtcat/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitResource = 2;
constexpr int kExitUsage = 3;

std::string read_file(const std::string& path) {
    std::filesystem::path p = path;
    if (!std::filesystem::exists(p)) {
        if (const char* dir = std::getenv("QTCAT_DATA_DIR")) {
            const std::filesystem::path alt = std::filesystem::path(dir) / path;
            if (std::filesystem::exists(alt)) p = alt;
        }
    }
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_stats(const std::string& text, int n_flag) {
    const qtcat::Partition p = qtcat::parse_partition(text);
    const int n = n_flag >= 0 ? n_flag : qtcat::mind(p);
    if (n < qtcat::mind(p)) {
        std::cerr << "error: --n " << n << " is below mind = " << qtcat::mind(p) << "\n";
        return kExitUsage;
    }
    std::cout << "size=" << qtcat::size(p) << " length=" << p.length()
              << " dinv=" << qtcat::dinv(p) << " defc=" << qtcat::deficit(p)
              << " mind=" << qtcat::mind(p) << " first_return="
              << (p.empty() ? std::string("-") : std::to_string(qtcat::first_return(p)))
              << " conjugate=\"" << qtcat::format_partition(qtcat::conjugate(p)) << "\""
              << " dyck=" << qtcat::dyck_label(qtcat::to_dyck_vector(p, n))
              << " area=" << qtcat::area(p, n) << "\n";
    return kExitOk;
}

int run_catalan(int n, int top_sym, bool csv) {
    const qtcat::BivariatePoly poly = qtcat::qt_catalan(n);
    std::cout << (csv ? poly.to_csv() : poly.to_string() + "\n");
    if (top_sym >= 0) {
        const int floor = static_cast<int>(qtcat::binom2(n)) - top_sym;
        const bool ok = qtcat::top_symmetric_upto(poly, floor);
        std::cout << "TOP-SYM floor=" << floor << (ok ? " SYMMETRIC" : " NOT-SYMMETRIC")
                  << "\n";
        if (!ok) return kExitVerification;
    }
    return kExitOk;
}

int run_verify(const std::string& path, int cutoff, int nmax) {
    const qtcat::ChainDataFile file = qtcat::parse_chain_data(read_file(path));
    bool all = true;

    for (const auto& cmp : qtcat::declared_vs_computed(file)) {
        std::cout << "CHECK DECL " << file.deficit << " " << qtcat::partition_label(cmp.mu)
                  << (cmp.match ? " PASS" : " FAIL " + cmp.detail) << "\n";
        all = all && cmp.match;
    }

    qtcat::VerifyOptions opts;
    if (cutoff >= 0) opts.dinv_cutoff = cutoff;
    opts.n_max = nmax;
    const auto report = qtcat::verify_family(qtcat::to_family(file), opts);
    std::cout << report.to_text();
    all = all && report.all_pass();
    return all ? kExitOk : kExitVerification;
}

int run_decompose(const std::string& path, const std::string& mu_text) {
    const qtcat::ChainDataFile file = qtcat::parse_chain_data(read_file(path));
    const qtcat::Partition mu = qtcat::parse_partition(mu_text);
    const qtcat::ChainBlock* block = nullptr;
    for (const auto& b : file.chains)
        if (b.mu == mu) block = &b;
    if (!block) {
        std::cerr << "error: no chain for " << qtcat::partition_label(mu) << " in " << path
                  << "\n";
        return kExitUsage;
    }
    const auto g = qtcat::GlobalChain::expand(block->initials,
                                              qtcat::tail_start_dinv(mu) + 2);
    const auto locals = qtcat::decompose_local(g);

    std::ostringstream dinv_row, mind_row;
    dinv_row << "dinv:";
    mind_row << "mind:";
    for (int i = g.start_dinv(); i <= g.tail_start(); ++i) {
        dinv_row << " " << i;
        mind_row << " " << g.mind_at(i);
    }
    std::cout << dinv_row.str() << " ...\n" << mind_row.str() << " ...\n";

    const qtcat::ParamVectors v = qtcat::computed_vectors(locals);
    auto print_vec = [](const char* name, const std::vector<int>& xs) {
        std::cout << name << ":";
        for (int x : xs) std::cout << " " << x;
        std::cout << "\n";
    };
    print_vec("a", v.a);
    print_vec("m", v.m);
    print_vec("h", v.h);
    return kExitOk;
}

int run_search(int k, int cutoff, long long budget, const std::string& out_path,
               const std::string& hint_path) {
    qtcat::SearchOptions opts;
    if (cutoff >= 0) opts.dinv_cutoff = cutoff;
    opts.budget = budget;
    qtcat::ChainFamily hint;
    if (!hint_path.empty()) {
        hint = qtcat::to_family(qtcat::parse_chain_data(read_file(hint_path)));
        opts.hint = &hint;
    }
    const qtcat::SearchResult res = qtcat::find_family(k, opts);
    switch (res.status) {
        case qtcat::SearchStatus::Found: {
            const std::string text = qtcat::serialize_chain_data(
                qtcat::to_chain_data(*res.family));
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                out << text;
            }
            std::cerr << "search k=" << k << " found nodes=" << res.nodes
                      << " backtracks=" << res.backtracks << "\n";
            return kExitOk;
        }
        case qtcat::SearchStatus::BudgetExhausted:
            std::cerr << "search k=" << k << " budget exhausted after " << res.nodes
                      << " nodes\n";
            return kExitResource;
        default:
            std::cerr << "search k=" << k << " infeasible at this cutoff: " << res.reason
                      << "\n";
            return kExitVerification;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q,t-Catalan chain machinery"};
    app.require_subcommand(1);

    std::string partition_text;
    int stats_n = -1;
    auto* stats = app.add_subcommand("stats", "partition statistics");
    stats->add_option("partition", partition_text, "partition, e.g. \"5 4 1 1 1\" or -")
        ->required();
    stats->add_option("--n", stats_n, "triangle size for dyck/area (default mind)");

    int cat_n = 0, top_sym = -1;
    bool cat_csv = false;
    auto* catalan = app.add_subcommand("catalan", "q,t-Catalan polynomial");
    catalan->add_option("n", cat_n, "triangle size")->required();
    catalan->add_option("--top-sym", top_sym, "check symmetry of terms of degree >= binom(n,2)-K");
    catalan->add_flag("--csv", cat_csv, "emit CSV rows q_exp,t_exp,coeff");

    std::string verify_path;
    int verify_cutoff = -1, verify_nmax = 12;
    auto* verify = app.add_subcommand("verify", "verify a .chains family");
    verify->add_option("file", verify_path, ".chains file")->required();
    verify->add_option("--cutoff", verify_cutoff, "dinv window (default: certified minimum)");
    verify->add_option("--nmax", verify_nmax, "largest n for the polynomial checks");

    std::string dec_path, dec_mu;
    auto* decompose = app.add_subcommand("decompose", "local-chain decomposition of one chain");
    decompose->add_option("file", dec_path, ".chains file")->required();
    decompose->add_option("--mu", dec_mu, "chain label")->required();

    int search_k = 0, search_cutoff = -1;
    long long search_budget = 10'000'000;
    std::string search_out, search_hint;
    auto* search = app.add_subcommand("search", "search for a chain family");
    search->add_option("k", search_k, "deficit")->required();
    search->add_option("--cutoff", search_cutoff, "dinv window");
    search->add_option("--budget", search_budget, "backtrack node budget");
    search->add_option("--out", search_out, "write the found family here (default stdout)");
    search->add_option("--hint", search_hint, "pinned candidate .chains file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (stats->parsed()) return run_stats(partition_text, stats_n);
        if (catalan->parsed()) return run_catalan(cat_n, top_sym, cat_csv);
        if (verify->parsed()) return run_verify(verify_path, verify_cutoff, verify_nmax);
        if (decompose->parsed()) return run_decompose(dec_path, dec_mu);
        if (search->parsed())
            return run_search(search_k, search_cutoff, search_budget, search_out, search_hint);
    } catch (const qtcat::ChainDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const qtcat::ChainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::domain_error& e) {
        // enumeration caps and containment violations
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}

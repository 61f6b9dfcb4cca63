// polylog: Taylor coefficients of log partition functions and an
// approximate sink-free-orientation counter.
//
// Exit codes: 0 success, 1 usage error, 2 input-validation error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polylog/polylog.hpp"

using nlohmann::json;
using namespace polylog;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct options {
    std::string graph_path;
    std::string matrix_path;
    std::string edge_order_path;
    int order = 0;
    double epsilon = 0.0;
    int delta_override = 0;
    bool use_float = false;
    bool as_json = false;
    bool profile = false;
    int threads = 0;
    unsigned long long seed = 0; // reserved for randomized diagnostics
    int anchor_vertex = -1;
    int anchor_edge = -1;
    int max_edges = 0;
};

graph load_graph(const options& opt) { return load_edge_list(read_file(opt.graph_path)); }

edge_order load_order(const options& opt, const graph& g) {
    if (opt.edge_order_path.empty()) return edge_order::identity(g.edge_count());
    return load_edge_order(read_file(opt.edge_order_path), g.edge_count());
}

template <class S>
void emit_series(const options& opt, const char* model, const graph& g,
                 const trunc_series<S>& s, const char* var) {
    if (opt.as_json) {
        json j;
        j["model"] = model;
        j["n"] = g.n;
        j["m"] = g.edge_count();
        j["order"] = s.order();
        j["scalar"] = scalar_traits<S>::name;
        j["coefficients"] = coeff_strings(s);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << model << " coefficients (order " << s.order() << ", "
                  << scalar_traits<S>::name << "):\n"
                  << to_text(s, var) << "\n";
    }
}

int run_logz(const options& opt) {
    graph g = load_graph(opt);
    unsigned threads = resolve_threads(opt.threads);
    if (opt.use_float)
        emit_series(opt, "log Z hardcore", g, log_z_hc<double>(g, opt.order, threads), "x");
    else
        emit_series(opt, "log Z hardcore", g, log_z_hc<rational>(g, opt.order, threads), "x");
    return 0;
}

int run_logp(const options& opt) {
    graph g = load_graph(opt);
    edge_order order = load_order(opt, g);
    unsigned threads = resolve_threads(opt.threads);
    emit_series(opt, "log P chromatic", g, log_p<rational>(g, order, opt.order, threads), "z");
    return 0;
}

int run_logh(const options& opt) {
    graph g = load_graph(opt);
    sym_matrix<rational> a = load_sym_matrix(read_file(opt.matrix_path));
    unsigned threads = resolve_threads(opt.threads);
    emit_series(opt, "log H hom", g, log_h<rational>(g, a, opt.order, threads), "x");
    return 0;
}

int run_sfo(const options& opt) {
    graph g = load_graph(opt);
    if (g.min_degree < 3)
        throw std::invalid_argument(
            "sfo: minimum degree is " + std::to_string(g.min_degree) +
            "; the truncation bound needs minimum degree 3 (zeros of the sink-free "
            "polynomial of cycles approach 1/2)");
    int delta = g.min_degree;
    if (opt.delta_override > 0) {
        if (opt.delta_override < 3 || opt.delta_override > g.min_degree)
            throw std::invalid_argument("sfo: --delta-override must lie in [3, min degree]");
        delta = opt.delta_override;
    }
    unsigned threads = resolve_threads(opt.threads);
    const long long m = g.edge_count();

    int k = truncation_order(m, opt.epsilon, delta);
    while (error_bound(m, k, delta) > opt.epsilon) ++k;
    // per-ratio work grows like exp(depth * log delta), with the recursion
    // depth capped by both k/delta and the vertex count
    double depth = std::min(static_cast<double>(k) / delta, static_cast<double>(g.n));
    double log_work = depth * std::log(static_cast<double>(delta));
    if (log_work > 40.0)
        std::cerr << "warning: truncation order " << k << " implies ~exp("
                  << static_cast<long long>(log_work)
                  << ") work per vertex; this accuracy is likely infeasible\n";
    trunc_series<rational> series = log_z_sfo<rational>(g, k, threads);
    rational f_half = eval_at(series, rational(1, 2));
    double bound = error_bound(m, k, delta);
    long double log_count = static_cast<long double>(m) * std::log(2.0L) + f_half.to_long_double();
    std::string count = count_decimal_string(log_count);

    if (opt.as_json) {
        json j;
        j["n"] = g.n;
        j["m"] = g.edge_count();
        j["delta"] = delta;
        j["k"] = k;
        j["f_k_half"] = f_half.to_string();
        j["bound"] = bound;
        j["log_count"] = static_cast<double>(log_count);
        j["count_decimal"] = count;
        j["epsilon"] = opt.epsilon;
        if (opt.profile) {
            json p;
            p["plain_exponent"] = 1.0 / std::exp(1.0);
            p["min_degree_exponent"] = std::log(static_cast<double>(delta)) / delta;
            j["profile"] = p;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n=" << g.n << " m=" << g.edge_count() << " delta=" << delta << "\n"
                  << "k=" << k << " f_k(1/2)=" << f_half.to_string() << " bound=" << bound << "\n"
                  << "log_count=" << static_cast<double>(log_count) << " count~=" << count << "\n";
        if (opt.profile)
            std::cout << "profile: per-ratio work ~ exp(k*" << 1.0 / std::exp(1.0)
                      << "); with min degree " << delta << " ~ exp(k*"
                      << std::log(static_cast<double>(delta)) / delta << ")\n";
    }
    return 0;
}

int run_trees_count(const options& opt) {
    graph g = load_graph(opt);
    if ((opt.anchor_vertex < 0) == (opt.anchor_edge < 0))
        throw std::invalid_argument("trees count: give exactly one of --anchor or --edge");
    anchor a = opt.anchor_vertex >= 0 ? anchor::at_vertex(opt.anchor_vertex)
                                      : anchor::at_edge(opt.anchor_edge);
    vertex_mask mask(g);
    edge_order order = edge_order::identity(g.edge_count());
    long long total = 0, bcf = 0;
    enumerate_subtrees(g, mask, a, opt.max_edges, [&](const subtree& t) {
        ++total;
        if (is_bcf(g, order, t)) ++bcf;
    });
    if (opt.as_json) {
        json j;
        j["n"] = g.n;
        j["m"] = g.edge_count();
        j["max_edges"] = opt.max_edges;
        if (opt.anchor_vertex >= 0)
            j["anchor_vertex"] = opt.anchor_vertex;
        else
            j["anchor_edge"] = opt.anchor_edge;
        j["subtrees"] = total;
        j["bcf_subtrees"] = bcf;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "subtrees=" << total << " bcf=" << bcf << "\n";
    }
    return 0;
}

void emit_poly(const options& opt, const char* what, const oracle::exact_poly& p) {
    if (opt.as_json) {
        json j;
        j["oracle"] = what;
        std::vector<std::string> cs;
        cs.reserve(p.size());
        for (const auto& c : p) cs.push_back(c.to_string());
        j["coefficients"] = cs;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << what << ":";
        for (const auto& c : p) std::cout << " " << c.to_string();
        std::cout << "\n";
    }
}

int run_oracle(const options& opt, const std::string& which) {
    graph g = load_graph(opt);
    if (which == "indep") {
        emit_poly(opt, "independence polynomial", oracle::exact_independence_poly(g));
    } else if (which == "sfo-poly") {
        emit_poly(opt, "sink-free polynomial", oracle::exact_sfo_poly(g));
    } else if (which == "sfo-count") {
        long long c = oracle::count_sfo(g);
        if (opt.as_json) {
            json j;
            j["oracle"] = "sfo-count";
            j["count"] = c;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "sink-free orientations: " << c << "\n";
        }
    } else if (which == "chromatic") {
        emit_poly(opt, "chromatic polynomial", oracle::exact_chromatic(g));
    } else if (which == "p-poly") {
        emit_poly(opt, "P(G;z)",
                  oracle::p_from_chromatic(oracle::exact_chromatic(g), g.n));
    } else if (which == "bcf-forest") {
        emit_poly(opt, "BCF forest polynomial",
                  oracle::bcf_forest_poly(g, edge_order::identity(g.edge_count())));
    } else if (which == "hom") {
        sym_matrix<rational> a = load_sym_matrix(read_file(opt.matrix_path));
        emit_poly(opt, "H(G;x)", oracle::exact_hom_poly(g, a));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Taylor coefficients of log partition functions: hard-core, sink-free "
                 "orientations, chromatic, graph homomorphisms"};
    app.require_subcommand(1);
    options opt;
    app.add_option("--threads", opt.threads, "worker threads (0 = POLYLOG_THREADS or hardware)");
    app.add_option("--seed", opt.seed, "seed for randomized diagnostics; core output is seed-independent");

    auto add_graph = [&](CLI::App* c) {
        c->add_option("--graph", opt.graph_path, "edge-list file")->required();
    };

    CLI::App* logz = app.add_subcommand("logz", "log of the independence polynomial");
    logz->require_subcommand(1);
    CLI::App* hardcore = logz->add_subcommand("hardcore", "hard-core model coefficients");
    add_graph(hardcore);
    hardcore->add_option("--order", opt.order, "truncation order m")->required()
        ->check(CLI::NonNegativeNumber);
    hardcore->add_flag("--float", opt.use_float, "double-precision backend");
    bool exact_flag = false;
    hardcore->add_flag("--exact", exact_flag, "exact rational backend (default)");
    hardcore->add_flag("--json", opt.as_json, "machine-readable output");

    CLI::App* sfo = app.add_subcommand("sfo", "approximate sink-free orientation count");
    add_graph(sfo);
    sfo->add_option("--epsilon", opt.epsilon, "multiplicative accuracy exp(epsilon)")
        ->required()
        ->check(CLI::PositiveNumber);
    sfo->add_option("--delta-override", opt.delta_override,
                    "use this minimum degree in the radius (3..min degree)");
    sfo->add_flag("--profile", opt.profile, "print predicted work exponents");
    sfo->add_flag("--json", opt.as_json, "machine-readable output");

    CLI::App* logp = app.add_subcommand("logp", "log of the BCF forest generating function");
    logp->require_subcommand(1);
    CLI::App* chromatic = logp->add_subcommand("chromatic", "chromatic P(G;z) coefficients");
    add_graph(chromatic);
    chromatic->add_option("--order", opt.order, "truncation order m")->required()
        ->check(CLI::NonNegativeNumber);
    chromatic->add_option("--edge-order", opt.edge_order_path, "edge order file (permutation)");
    chromatic->add_flag("--json", opt.as_json, "machine-readable output");

    CLI::App* logh = app.add_subcommand("logh", "log of the homomorphism partition function");
    logh->require_subcommand(1);
    CLI::App* hom = logh->add_subcommand("hom", "H(G;x) coefficients");
    add_graph(hom);
    hom->add_option("--matrix", opt.matrix_path, "symmetric q x q matrix file")->required();
    hom->add_option("--order", opt.order, "truncation order m")->required()
        ->check(CLI::NonNegativeNumber);
    hom->add_flag("--json", opt.as_json, "machine-readable output");

    CLI::App* trees = app.add_subcommand("trees", "subtree enumeration diagnostics");
    trees->require_subcommand(1);
    CLI::App* tcount = trees->add_subcommand("count", "count anchored subtrees");
    add_graph(tcount);
    tcount->add_option("--anchor", opt.anchor_vertex, "anchor vertex");
    tcount->add_option("--edge", opt.anchor_edge, "anchor edge id");
    tcount->add_option("--max-edges", opt.max_edges, "edge budget")->required()
        ->check(CLI::NonNegativeNumber);
    tcount->add_flag("--json", opt.as_json, "machine-readable output");

    CLI::App* orc = app.add_subcommand("oracle", "brute-force reference computations");
    orc->require_subcommand(1);
    std::vector<std::string> oracle_kinds = {"indep", "sfo-poly", "sfo-count", "chromatic",
                                             "p-poly", "bcf-forest", "hom"};
    for (const auto& kind : oracle_kinds) {
        CLI::App* c = orc->add_subcommand(kind);
        add_graph(c);
        if (kind == "hom") c->add_option("--matrix", opt.matrix_path, "matrix file")->required();
        c->add_flag("--json", opt.as_json, "machine-readable output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (hardcore->parsed()) return run_logz(opt);
        if (sfo->parsed()) return run_sfo(opt);
        if (chromatic->parsed()) return run_logp(opt);
        if (hom->parsed()) return run_logh(opt);
        if (tcount->parsed()) return run_trees_count(opt);
        for (const auto& kind : oracle_kinds)
            if (orc->got_subcommand(kind)) return run_oracle(opt, kind);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

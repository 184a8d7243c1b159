// mlap — command-line front end for the exact m-Laplacian toolkit.
//
//   coeffs        stencil coefficient rows a_{1,m}..a_{m,m}, exact rationals
//   stencil-demo  empirical order-of-accuracy study on a periodic grid
//   paths         open path matrix P_k of a graph
//   matrix        m-Laplacian / classic matrices with exact entries
//   spectrum      floating eigenvalues or the exact characteristic polynomial
//   census        cospectral-mate counts and proportions over exhaustive corpora
//   synth         weighted circulant realizing a prescribed Laplacian spectrum
//   verify        self-contained verification suites (closed forms, identities, ...)
//
// Exit codes: 0 success, 1 computation/verification failure, 2 usage error.

#include "mlap/mlap.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

namespace {

using namespace mlap;

std::ofstream g_file;
std::ostream* g_out = &std::cout;
std::ostream& out() { return *g_out; }

/// --graph accepts either a file path (graph6 or edge-list format) or an
/// inline graph6 string such as "Bw".
simple_graph load_graph(const std::string& arg) {
    if (std::filesystem::exists(arg)) return read_graph_file(arg);
    // anything path-shaped that is missing should not fall through to the
    // literal parser, whose error message would be baffling
    if (arg.find('/') != std::string::npos || (arg.size() > 3 && arg.ends_with(".g6")))
        throw std::runtime_error("cannot open graph file: " + arg);
    return parse_graph6(arg);
}

std::string default_corpus_dir() {
    const char* env = std::getenv("MLAP_CORPUS_DIR");
    return env ? env : "corpus";
}

std::vector<double> parse_value_list(const std::string& text) {
    std::string s = text;
    for (auto& ch : s)
        if (ch == ',') ch = ' ';
    std::istringstream is(s);
    std::vector<double> vals;
    double x;
    while (is >> x) vals.push_back(x);
    if (!is.eof()) throw std::invalid_argument("could not parse value list: '" + text + "'");
    if (vals.empty()) throw std::invalid_argument("empty value list");
    return vals;
}

simple_graph random_graph(int n, std::mt19937& rng) {
    simple_graph g(n);
    std::bernoulli_distribution edge(0.5);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) g.add_edge(i, j);
    return g;
}

// ---- coeffs ---------------------------------------------------------------------

void run_coeffs(int m, bool table, bool solve) {
    const int lo = table ? 1 : m;
    for (int order = lo; order <= m; ++order) {
        out() << "m=" << order << ":";
        const auto row = solve ? solve_coeff_system(order) : coeff_row(order);
        for (const auto& a : row) out() << "  " << rational_to_string(a);
        out() << '\n';
        if (solve && row != coeff_row(order))
            throw std::runtime_error("linear-system solve disagrees with the closed form");
    }
}

// ---- stencil-demo ---------------------------------------------------------------

void run_stencil_demo(int m, const std::string& func, const std::vector<int>& grids) {
    const auto rep = convergence_study(m, grids, func);
    out() << "order-2m stencil, m=" << m << ", u=" << func << " on [0,2pi)\n";
    out() << "    n    max error\n";
    for (std::size_t i = 0; i < rep.grids.size(); ++i) {
        out() << "  " << std::setw(4) << rep.grids[i] << "   " << std::scientific
              << std::setprecision(4) << rep.max_error[i] << '\n';
    }
    out() << "fitted slope " << std::fixed << std::setprecision(4) << rep.slope << " (expected "
          << 2 * m << ")\n";
}

// ---- paths / matrix / spectrum --------------------------------------------------

void run_paths(const std::string& graph_arg, int k) {
    const auto g = load_graph(graph_arg);
    out() << format_matrix(open_path_matrix(g, k));
}

void run_matrix(const std::string& graph_arg, int m, const std::string& kind, bool scaled) {
    const auto g = load_graph(graph_arg);
    if (kind == "mlap") {
        const auto l = m_laplacian(g, m);
        if (scaled) {
            const auto s = integer_scaled(l);
            out() << "1/" << s.scale.str() << " x\n" << format_matrix(s.m);
        } else {
            out() << format_matrix(l);
        }
        return;
    }
    classic_kind ck;
    if (kind == "adj") ck = classic_kind::adjacency;
    else if (kind == "lap") ck = classic_kind::laplacian;
    else if (kind == "signless") ck = classic_kind::signless_laplacian;
    else throw std::invalid_argument("unknown --kind '" + kind + "' (mlap, adj, lap, signless)");
    out() << format_matrix(classic_matrix(g, ck));
}

void run_spectrum(const std::string& graph_arg, int m, bool exact) {
    const auto g = load_graph(graph_arg);
    const auto l = m_laplacian(g, m);
    if (exact) {
        const auto key = char_poly_exact(l);
        out() << "characteristic polynomial (monic, descending powers):\n ";
        Integer sk = 1;
        for (std::size_t i = 0; i < key.coeffs.size(); ++i) {
            out() << ' ' << rational_to_string(Rational(key.coeffs[i], sk));
            sk *= key.scale;
        }
        out() << "\nkey: " << key.canonical_string() << '\n';
    } else {
        out() << "eigenvalues (ascending):\n ";
        for (double e : eig_symmetric(l))
            out() << ' ' << std::setprecision(12) << e;
        out() << '\n';
    }
}

// ---- census ---------------------------------------------------------------------

void run_census(std::vector<int> ns, std::vector<std::string> kind_names,
                const std::string& corpus_dir, int jobs, bool proportions, bool csv) {
    std::vector<census_kind> kinds;
    if (kind_names.empty()) {
        kinds = all_census_kinds();
    } else {
        for (const auto& name : kind_names) kinds.push_back(parse_census_kind(name));
    }
    census_table_options opt;
    opt.proportions = proportions;
    opt.jobs = jobs;
    opt.corpus_dir = corpus_dir;
    opt.csv = csv;
    out() << census_table(ns, kinds, opt);
}

// ---- synth ----------------------------------------------------------------------

void run_synth(const std::string& spectrum_arg, bool embed, double tol) {
    const auto values = parse_value_list(spectrum_arg);
    if (embed) {
        const auto rep = embed_spectrum(values, tol);
        out() << "parent: weighted circulant on " << rep.parent.n() << " vertices\n";
        out() << "principal-submatrix spectrum (vertex " << rep.parent.n() - 1 << " deleted):\n ";
        for (double e : rep.principal_spectrum) out() << ' ' << std::setprecision(10) << e;
        out() << "\nrebuilt-Laplacian spectrum:\n ";
        for (double e : rep.rebuilt_spectrum) out() << ' ' << std::setprecision(10) << e;
        out() << "\ncontains target: principal=" << (rep.principal_contains ? "yes" : "no")
              << " (residual " << std::scientific << std::setprecision(2)
              << rep.principal_residual << "), rebuilt=" << (rep.rebuilt_contains ? "yes" : "no")
              << " (residual " << rep.rebuilt_residual << ")\n";
        return;
    }
    const auto target = target_spectrum::parse(values);
    const auto rep = build_weighted_from_spectrum(target, tol);
    out() << "shape: n=" << target.n() << " ("
          << (target.shape == target_spectrum::shape_kind::odd ? "odd" : "even") << "), m="
          << target.m() << '\n';
    out() << "jump weights c_1..c_m:\n ";
    for (double c : rep.weights) out() << ' ' << std::setprecision(12) << c;
    out() << "\nsign convention: " << (rep.negated ? "negated solve" : "direct solve") << '\n';
    out() << "condition estimate " << std::scientific << std::setprecision(2) << rep.condition
          << ", max residual " << rep.max_residual << '\n';
    out() << "reconstructed spectrum:\n ";
    for (double e : eig_symmetric(weighted_laplacian(rep.graph)))
        out() << ' ' << std::setprecision(10) << e;
    out() << '\n';
}

// ---- verify ---------------------------------------------------------------------

struct verify_state {
    int failures = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        out() << (ok ? "ok      " : "FAILED  ") << name;
        if (!detail.empty()) out() << "  (" << detail << ")";
        out() << '\n';
        if (!ok) ++failures;
    }
};

std::string dev_string(double d) {
    std::ostringstream os;
    os << "max deviation " << std::scientific << std::setprecision(2) << d;
    return os.str();
}

double spectrum_deviation(const eigen_list& a, const eigen_list& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

void verify_closed_forms(verify_state& vs, int n_max, int m_max) {
    const int mm = std::min(m_max, max_laplacian_order);

    double dev = 0;
    for (int m = 1; m <= mm; ++m)
        for (int n = 2 * m + 1; n <= n_max; ++n)
            dev = std::max(dev, spectrum_deviation(cycle_m_spectrum(n, m),
                                                   eig_symmetric(m_laplacian(cycle(n), m))));
    vs.check("closed form: cycles", dev <= 1e-9, dev_string(dev));

    dev = 0;
    for (int n = 2; n <= n_max; ++n)
        for (int m = 1; m <= std::min(mm, n - 1); ++m)
            dev = std::max(dev, spectrum_deviation(complete_m_spectrum(n, m),
                                                   eig_symmetric(m_laplacian(complete(n), m))));
    vs.check("closed form: complete graphs", dev <= 1e-9, dev_string(dev));

    bool exact_ok = true;
    for (int n = 3; n <= n_max; ++n)
        exact_ok = exact_ok && complete_m_value(n, 2) == Rational(Integer(n) * (18 - n), 12);
    vs.check("closed form: complete m=2 value n(18-n)/12", exact_ok);

    dev = 0;
    for (int n = 3; n <= n_max; ++n)
        for (int m = 1; m <= std::min(mm, n - 1); ++m)
            dev = std::max(dev, spectrum_deviation(star_m_spectrum(n, m),
                                                   eig_symmetric(m_laplacian(star_graph(n), m))));
    vs.check("closed form: stars", dev <= 1e-9, dev_string(dev));

    if (mm >= 2) {
        dev = 0;
        int families = 0;
        for (int n = 3; n <= n_max; ++n) {
            const int half = n / 2;
            for (unsigned set = 1; set < (1u << half); ++set) {
                std::vector<int> jumps;
                for (int s = 1; s <= half; ++s)
                    if (set & (1u << (s - 1))) jumps.push_back(s);
                dev = std::max(dev,
                               spectrum_deviation(circulant_two_spectrum(n, jumps),
                                                  eig_symmetric(m_laplacian(circulant(n, jumps), 2))));
                ++families;
            }
        }
        vs.check("closed form: circulant 2-spectra (" + std::to_string(families) + " families)",
                 dev <= 1e-9, dev_string(dev));
    }
}

std::vector<Rational> monic_coeffs(const spectral_key& key) {
    std::vector<Rational> c(key.coeffs.size());
    Integer sk = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = Rational(key.coeffs[i], sk);
        sk *= key.scale;
    }
    return c;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> p(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    return p;
}

void verify_identities(verify_state& vs, int trials, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> small_n(3, 5), mid_n(4, 9), comp_n(3, 6);

    bool ok = true;
    for (int t = 0; t < 10; ++t) {
        const auto g = random_graph(small_n(rng), rng);
        const auto h = random_graph(small_n(rng), rng);
        ok = ok && two_laplacian_cartesian_identity(g, h) ==
                       m_laplacian(cartesian_product(g, h), 2);
    }
    vs.check("identity: 2-Laplacian of Cartesian products (10 pairs)", ok);

    ok = true;
    for (int t = 0; t < trials; ++t) {
        const auto g = random_graph(mid_n(rng), rng);
        ok = ok && two_laplacian_complement_identity(g) == m_laplacian(complement(g), 2);
    }
    vs.check("identity: 2-Laplacian of complements (" + std::to_string(trials) + " graphs)", ok);

    ok = true;
    for (int t = 0; t < 50; ++t) {
        const auto g = random_graph(comp_n(rng), rng);
        const auto h = random_graph(comp_n(rng), rng);
        std::uniform_int_distribution<int> order(1, std::min({g.n(), h.n()}) - 1);
        const int m = order(rng);
        const auto product = poly_mul(monic_coeffs(char_poly_exact(m_laplacian(g, m))),
                                      monic_coeffs(char_poly_exact(m_laplacian(h, m))));
        const auto whole =
            monic_coeffs(char_poly_exact(m_laplacian(disjoint_union(g, h), m)));
        ok = ok && product == whole;
    }
    vs.check("identity: charpoly factors over disjoint unions (50 pairs)", ok);

    ok = true;
    std::uniform_int_distribution<int> path_n(3, 10);
    for (int t = 0; t < trials; ++t) {
        const auto g = random_graph(path_n(rng), rng);
        ok = ok && open_path_matrix(g, 2) == open_path_matrix_2(g);
    }
    vs.check("oracle: P_2 = A^2 - D (" + std::to_string(trials) + " graphs)", ok);

    ok = true;
    for (int n = 3; n <= 9; ++n)
        for (int k = 1; k <= std::min(4, n - 1); ++k) {
            const Integer count = factorial(k - 1) * binomial(n - 2, k - 1);
            auto want = complete(n).adjacency_matrix();
            want *= count;
            ok = ok && open_path_matrix(complete(n), k) == want;
        }
    vs.check("oracle: complete-graph path counts", ok);
}

void verify_census(verify_state& vs, int n_max, int jobs) {
    // Published mate counts for the built-in range.
    static const long long expected[8][5] = {
        // A, L, |L|, L2, L3        (n = 1..7, L2/L3 by convention for tiny n)
        {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 2, 0, 0},
        {2, 0, 4, 0, 0}, {10, 4, 16, 0, 0}, {110, 130, 102, 2, 0},
    };
    for (int n = 4; n <= std::min(n_max, 7); ++n) {
        const auto graphs = load_corpus(n);
        bool ok = true;
        std::string detail;
        for (std::size_t k = 0; k < all_census_kinds().size(); ++k) {
            const auto rep = count_cospectral_mates(graphs, all_census_kinds()[k], jobs);
            detail += (k ? " " : "") + census_kind_label(all_census_kinds()[k]) + "=" +
                      std::to_string(rep.mates);
            ok = ok && rep.mates == expected[n - 1][k];
        }
        vs.check("census: mate counts at n=" + std::to_string(n), ok, detail);
    }
}

void verify_synthesis(verify_state& vs, int trials, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> lam(-10, 10);
    std::uniform_int_distribution<int> order(1, 6);

    double worst = 0;
    for (int t = 0; t < trials; ++t) {
        std::vector<double> pairs(order(rng));
        for (auto& x : pairs) x = lam(rng);
        worst = std::max(
            worst, build_weighted_from_spectrum(target_spectrum::odd_target(pairs)).max_residual);
    }
    vs.check("synthesis: odd-shape targets (" + std::to_string(trials) + ")", worst <= 1e-8,
             dev_string(worst));

    worst = 0;
    for (int t = 0; t < std::max(trials / 5, 5); ++t) {
        std::vector<double> pairs(order(rng));
        for (auto& x : pairs) x = lam(rng);
        worst = std::max(worst,
                         build_weighted_from_spectrum(
                             target_spectrum::even_target(pairs, lam(rng)))
                             .max_residual);
    }
    vs.check("synthesis: even-shape targets", worst <= 1e-8, dev_string(worst));

    worst = 0;
    std::uniform_int_distribution<int> embed_order(1, 5);
    for (int t = 0; t < std::max(trials / 5, 5); ++t) {
        std::vector<double> lambda(embed_order(rng));
        for (auto& x : lambda) x = lam(rng);
        const auto rep = embed_spectrum(lambda);
        worst = std::max(worst, std::min(rep.principal_residual, rep.rebuilt_residual));
    }
    vs.check("synthesis: spectrum embedding by vertex deletion", worst <= 1e-7,
             dev_string(worst));
}

int run_verify(const std::string& suite, int n_max, int m_max, int trials, unsigned seed,
               int jobs) {
    verify_state vs;
    if (suite == "closed-forms" || suite == "all") verify_closed_forms(vs, n_max, m_max);
    if (suite == "identities" || suite == "all") verify_identities(vs, trials, seed);
    if (suite == "census" || suite == "all") verify_census(vs, n_max, jobs);
    if (suite == "synthesis" || suite == "all") verify_synthesis(vs, trials, seed);
    if (vs.failures) {
        out() << vs.failures << " check(s) failed\n";
        return 1;
    }
    out() << "all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact m-Laplacian spectral toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global options after a subcommand too

    std::string output_path;
    app.add_option("--output", output_path, "write results to a file instead of stdout");
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for census runs")->check(CLI::PositiveNumber);

    // Subcommand callbacks only record the work; it runs after parsing so
    // that the global --output/--jobs options are in effect regardless of
    // where they appear on the command line.
    std::function<int()> work;

    // coeffs
    auto* coeffs_cmd = app.add_subcommand("coeffs", "stencil coefficient rows");
    int coeffs_m = 4;
    bool coeffs_table = false, coeffs_solve = false;
    coeffs_cmd->add_option("--m", coeffs_m, "order parameter m")->check(CLI::Range(1, 64));
    coeffs_cmd->add_flag("--table", coeffs_table, "print all rows 1..m");
    coeffs_cmd->add_flag("--solve", coeffs_solve,
                         "derive by solving the defining linear system (cross-checked)");
    coeffs_cmd->callback(
        [&] { work = [&] { run_coeffs(coeffs_m, coeffs_table, coeffs_solve); return 0; }; });

    // stencil-demo
    auto* demo_cmd = app.add_subcommand("stencil-demo", "order-of-accuracy study");
    int demo_m = 2;
    std::string demo_func = "sin";
    std::vector<int> demo_grids{16, 32, 64, 128, 256};
    demo_cmd->add_option("--m", demo_m, "order parameter m")->check(CLI::Range(1, 8));
    demo_cmd->add_option("--func", demo_func, "sample function: sin or cos");
    demo_cmd->add_option("--grids", demo_grids, "grid sizes");
    demo_cmd->callback(
        [&] { work = [&] { run_stencil_demo(demo_m, demo_func, demo_grids); return 0; }; });

    // paths
    auto* paths_cmd = app.add_subcommand("paths", "open path matrix P_k");
    std::string paths_graph;
    int paths_k = 2;
    paths_cmd->add_option("--graph", paths_graph, "graph file or inline graph6")->required();
    paths_cmd->add_option("--k", paths_k, "path length")->check(CLI::Range(1, 32));
    paths_cmd->callback([&] { work = [&] { run_paths(paths_graph, paths_k); return 0; }; });

    // matrix
    auto* matrix_cmd = app.add_subcommand("matrix", "graph matrices with exact entries");
    std::string matrix_graph, matrix_kind = "mlap";
    int matrix_m = 2;
    bool matrix_scaled = false;
    matrix_cmd->add_option("--graph", matrix_graph, "graph file or inline graph6")->required();
    matrix_cmd->add_option("--m", matrix_m, "Laplacian order (kind mlap)")
        ->check(CLI::Range(1, max_laplacian_order));
    matrix_cmd->add_option("--kind", matrix_kind, "mlap, adj, lap, or signless");
    matrix_cmd->add_flag("--scaled", matrix_scaled, "clear denominators, print 1/s x integers");
    matrix_cmd->callback([&] {
        work = [&] { run_matrix(matrix_graph, matrix_m, matrix_kind, matrix_scaled); return 0; };
    });

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "m-Laplacian spectrum");
    std::string spectrum_graph;
    int spectrum_m = 2;
    bool spectrum_exact = false, spectrum_float = false;
    spectrum_cmd->add_option("--graph", spectrum_graph, "graph file or inline graph6")->required();
    spectrum_cmd->add_option("--m", spectrum_m, "Laplacian order")
        ->check(CLI::Range(1, max_laplacian_order));
    spectrum_cmd->add_flag("--exact", spectrum_exact, "print the exact characteristic polynomial");
    spectrum_cmd->add_flag("--float", spectrum_float, "print floating eigenvalues (default)");
    spectrum_cmd->callback([&] {
        if (spectrum_exact && spectrum_float)
            throw CLI::ValidationError("spectrum", "--exact and --float are mutually exclusive");
        work = [&] { run_spectrum(spectrum_graph, spectrum_m, spectrum_exact); return 0; };
    });

    // census
    auto* census_cmd = app.add_subcommand("census", "cospectral-mate census");
    std::vector<int> census_ns;
    std::vector<std::string> census_kinds;
    std::string census_corpus = default_corpus_dir();
    bool census_props = false, census_csv = false;
    census_cmd->add_option("--n", census_ns, "vertex counts (repeatable)")
        ->required()
        ->check(CLI::Range(1, 16));
    census_cmd->add_option("--kind", census_kinds, "matrix kinds: A L |L| L2 L3 (default all)");
    census_cmd->add_option("--corpus", census_corpus,
                           "directory with graph{n}.g6 files for n > 7 "
                           "(default $MLAP_CORPUS_DIR or ./corpus)");
    census_cmd->add_flag("--proportions", census_props, "print proportions instead of counts");
    census_cmd->add_flag("--csv", census_csv, "machine-readable n,kind,total,mates,proportion");
    census_cmd->callback([&] {
        work = [&] {
            run_census(census_ns, census_kinds, census_corpus, jobs, census_props, census_csv);
            return 0;
        };
    });

    // synth
    auto* synth_cmd = app.add_subcommand("synth", "realize a prescribed spectrum");
    std::string synth_spectrum;
    bool synth_embed = false;
    double synth_tol = 1e-8;
    synth_cmd
        ->add_option("--spectrum", synth_spectrum,
                     "target eigenvalues, e.g. \"0,1,1,2,2\" (with --embed: the free "
                     "multiset to embed)")
        ->required();
    synth_cmd->add_flag("--embed", synth_embed, "embed into a one-larger graph by vertex deletion");
    synth_cmd->add_option("--tol", synth_tol, "verification tolerance");
    synth_cmd->callback(
        [&] { work = [&] { run_synth(synth_spectrum, synth_embed, synth_tol); return 0; }; });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verification suites");
    std::string verify_suite = "all";
    int verify_n_max = 8, verify_m_max = 3, verify_trials = 50;
    unsigned verify_seed = 20240901;
    verify_cmd->add_option("suite", verify_suite, "closed-forms, identities, census, synthesis, all")
        ->check(CLI::IsMember({"closed-forms", "identities", "census", "synthesis", "all"}));
    verify_cmd->add_option("--n-max", verify_n_max, "largest n to sweep")->check(CLI::Range(3, 16));
    verify_cmd->add_option("--m-max", verify_m_max, "largest m to sweep")
        ->check(CLI::Range(1, max_laplacian_order));
    verify_cmd->add_option("--trials", verify_trials, "randomized trial count")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", verify_seed, "RNG seed");
    verify_cmd->callback([&] {
        work = [&] {
            return run_verify(verify_suite, verify_n_max, verify_m_max, verify_trials,
                              verify_seed, jobs);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!output_path.empty()) {
            g_file.open(output_path);
            if (!g_file) throw std::runtime_error("cannot open output file: " + output_path);
            g_out = &g_file;
        }
        return work ? work() : 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

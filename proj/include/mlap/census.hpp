#pragma once

#include "mlap/charpoly.hpp"
#include "mlap/enumerate.hpp"
#include "mlap/spectra.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace mlap {

enum class census_kind { adjacency, laplacian, signless, two_laplacian, three_laplacian };

inline const std::vector<census_kind>& all_census_kinds() {
    static const std::vector<census_kind> kinds{
        census_kind::adjacency, census_kind::laplacian, census_kind::signless,
        census_kind::two_laplacian, census_kind::three_laplacian};
    return kinds;
}

inline std::string census_kind_label(census_kind k) {
    switch (k) {
        case census_kind::adjacency: return "A";
        case census_kind::laplacian: return "L";
        case census_kind::signless: return "|L|";
        case census_kind::two_laplacian: return "L2";
        case census_kind::three_laplacian: return "L3";
    }
    return "?";
}

inline census_kind parse_census_kind(const std::string& s) {
    if (s == "A" || s == "adj" || s == "adjacency") return census_kind::adjacency;
    if (s == "L" || s == "lap" || s == "laplacian") return census_kind::laplacian;
    if (s == "|L|" || s == "Q" || s == "signless") return census_kind::signless;
    if (s == "L2" || s == "l2") return census_kind::two_laplacian;
    if (s == "L3" || s == "l3") return census_kind::three_laplacian;
    throw std::invalid_argument("unknown matrix kind: '" + s + "' (use A, L, |L|, L2, L3)");
}

/// Order of the Laplacian variant, 0 for the classic matrices.
inline int census_kind_order(census_kind k) {
    if (k == census_kind::two_laplacian) return 2;
    if (k == census_kind::three_laplacian) return 3;
    return 0;
}

/// Exact cospectrality fingerprint of a graph under the chosen matrix.
inline spectral_key spectral_invariant(const simple_graph& g, census_kind kind) {
    const int m = census_kind_order(kind);
    if (m > 0) {
        if (m >= g.n())
            throw std::invalid_argument("spectral_invariant: order " + std::to_string(m) +
                                        " needs n > " + std::to_string(m));
        return char_poly_exact(m_laplacian(g, m));
    }
    switch (kind) {
        case census_kind::adjacency:
            return char_poly_exact(classic_matrix(g, classic_kind::adjacency));
        case census_kind::laplacian:
            return char_poly_exact(classic_matrix(g, classic_kind::laplacian));
        default:
            return char_poly_exact(classic_matrix(g, classic_kind::signless_laplacian));
    }
}

struct census_report {
    int n = 0;
    census_kind kind = census_kind::adjacency;
    long long total = 0;
    long long mates = 0;          // graphs lying in a cospectral class of size >= 2
    bool by_convention = false;   // order >= n: matrix undefined, reported as 0
    double seconds = 0;

    Rational proportion() const {
        return total == 0 ? Rational(0) : Rational(mates, total);
    }
};

/// "0" for zero, otherwise the exact proportion rendered to 5 decimal
/// places with ties rounded half-up (on the exact rational, not a double).
inline std::string proportion_string(long long mates, long long total) {
    if (mates == 0 || total == 0) return "0";
    const Integer num = 2 * Integer(mates) * 100000 + total;
    const Integer den = 2 * Integer(total);
    Integer d = num / den;  // floor of mates/total * 1e5 + 1/2
    if (d >= 100000) return "1.00000";
    std::string digits = d.str();
    return "0." + std::string(5 - digits.size(), '0') + digits;
}

namespace detail {

inline std::vector<std::string> invariant_strings(const std::vector<simple_graph>& graphs,
                                                  census_kind kind, int jobs) {
    std::vector<std::string> keys(graphs.size());
    if (jobs < 1) jobs = 1;
    const std::size_t chunk = (graphs.size() + jobs - 1) / std::max<std::size_t>(1, jobs);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        const std::size_t lo = w * chunk;
        if (lo >= graphs.size()) break;
        const std::size_t hi = std::min(graphs.size(), lo + chunk);
        workers.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i)
                keys[i] = spectral_invariant(graphs[i], kind).canonical_string();
        });
    }
    for (auto& t : workers) t.join();
    return keys;
}

}  // namespace detail

/// Groups a corpus by exact spectral fingerprint. Keys are computed per
/// graph on a worker pool and reduced single-threaded, so the result is
/// deterministic for every worker count. (Hashing happens on the canonical
/// strings; the hash map confirms equality on collision as usual.)
inline std::unordered_map<std::string, std::vector<std::size_t>> census_classes(
    const std::vector<simple_graph>& graphs, census_kind kind, int jobs = 1) {
    const auto keys = detail::invariant_strings(graphs, kind, jobs);
    std::unordered_map<std::string, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < keys.size(); ++i) classes[keys[i]].push_back(i);
    return classes;
}

inline census_report count_cospectral_mates(const std::vector<simple_graph>& graphs,
                                            census_kind kind, int jobs = 1) {
    if (graphs.empty()) throw std::invalid_argument("census: empty corpus");
    const auto start = std::chrono::steady_clock::now();
    census_report rep;
    rep.n = graphs[0].n();
    rep.kind = kind;
    rep.total = static_cast<long long>(graphs.size());
    for (const auto& g : graphs)
        if (g.n() != rep.n)
            throw std::invalid_argument("census: corpus mixes vertex counts");

    if (census_kind_order(kind) >= rep.n) {
        rep.by_convention = true;  // matrix undefined at this size; see table footnote
    } else {
        for (const auto& [key, members] : census_classes(graphs, kind, jobs))
            if (members.size() >= 2) rep.mates += static_cast<long long>(members.size());
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

inline census_report count_cospectral_mates(graph_stream& stream, census_kind kind,
                                            int jobs = 1) {
    const auto graphs = stream.collect();
    return count_cospectral_mates(graphs, kind, jobs);
}

// ---- corpora ------------------------------------------------------------------

/// Known counts of non-isomorphic simple graphs, used to validate corpora.
inline std::optional<long long> expected_graph_count(int n) {
    static const long long counts[] = {1, 2, 4, 11, 34, 156, 1044, 12346, 274668};
    if (n < 1 || n > 9) return std::nullopt;
    return counts[n - 1];
}

inline std::string corpus_file_path(const std::string& corpus_dir, int n) {
    return corpus_dir + "/graph" + std::to_string(n) + ".g6";
}

/// Loads the n-vertex corpus: built-in enumeration for n <= 7, a graph6
/// file named graph{n}.g6 under corpus_dir for larger n. File corpora are
/// validated against the published non-isomorphic graph counts before use.
inline std::vector<simple_graph> load_corpus(int n, const std::string& corpus_dir = "") {
    if (n <= 7) return enumerate_nonisomorphic(n).collect();
    const std::string path = corpus_file_path(corpus_dir.empty() ? "." : corpus_dir, n);
    if (!std::filesystem::exists(path))
        throw std::runtime_error("missing graph6 corpus file: " + path);
    auto graphs = read_graph6_file(path);
    if (auto want = expected_graph_count(n)) {
        if (static_cast<long long>(graphs.size()) != *want) {
            std::ostringstream os;
            os << "corpus " << path << " has " << graphs.size() << " records, expected "
               << *want << " non-isomorphic graphs on " << n << " vertices";
            throw std::runtime_error(os.str());
        }
    }
    for (const auto& g : graphs)
        if (g.n() != n)
            throw std::runtime_error("corpus " + path + " contains a graph of wrong order");
    return graphs;
}

// ---- formatted tables -----------------------------------------------------------

struct census_table_options {
    bool proportions = false;  // counts by default
    int jobs = 1;
    std::string corpus_dir;
    bool csv = false;          // machine-readable "n,kind,total,mates,proportion" lines
};

inline std::string census_table(const std::vector<int>& ns,
                                const std::vector<census_kind>& kinds,
                                const census_table_options& opt = {}) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"n", "G"};
    for (auto k : kinds) header.push_back(census_kind_label(k));
    bool convention_seen = false;
    std::string csv;

    for (int n : ns) {
        const auto graphs = load_corpus(n, opt.corpus_dir);
        std::vector<std::string> row{std::to_string(n), std::to_string(graphs.size())};
        for (auto kind : kinds) {
            const auto rep = count_cospectral_mates(graphs, kind, opt.jobs);
            std::string cell = opt.proportions ? proportion_string(rep.mates, rep.total)
                                               : std::to_string(rep.mates);
            if (rep.by_convention) {
                cell += "*";
                convention_seen = true;
            }
            row.push_back(cell);
            csv += std::to_string(n) + "," + census_kind_label(kind) + "," +
                   std::to_string(rep.total) + "," + std::to_string(rep.mates) + "," +
                   proportion_string(rep.mates, rep.total) + "\n";
        }
        rows.push_back(std::move(row));
    }
    if (opt.csv) return csv;

    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << std::string(width[c] - row[c].size() + (c ? 2 : 0), ' ') << row[c];
        }
        os << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    if (convention_seen)
        os << "* matrix of this order is undefined for such small n; 0 by convention\n";
    return os.str();
}

}  // namespace mlap

#pragma once

#include "mlap/errors.hpp"
#include "mlap/graph6.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlap {

namespace detail {

// Edge (i,j), i<j, sits at column-major position e = j(j-1)/2 + i of the
// upper-triangle bit-string. Masks store edge e at bit E-1-e so that
// ascending integer order on masks equals lexicographic order on strings.
inline int edge_pos(int i, int j) { return j * (j - 1) / 2 + i; }

inline simple_graph mask_to_graph(std::uint64_t mask, int n) {
    const int E = n * (n - 1) / 2;
    simple_graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> (E - 1 - edge_pos(i, j))) & 1u) g.add_edge(i, j);
    return g;
}

inline std::uint64_t graph_to_mask(const simple_graph& g) {
    const int n = g.n();
    const int E = n * (n - 1) / 2;
    std::uint64_t mask = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) mask |= std::uint64_t(1) << (E - 1 - edge_pos(i, j));
    return mask;
}

}  // namespace detail

/// Exhaustive one-per-isomorphism-class generation by scanning all edge
/// bitmasks in ascending (= lexicographic) order and marking the full orbit
/// of each unseen mask under the symmetric group. The first mask seen in an
/// orbit is its lexicographically minimal representative, so the output is
/// exactly the set of canonical forms, in canonical order.
/// Memory: one bit per labeled graph (n=7: 2^21 bits).
inline std::vector<simple_graph> enumerate_nonisomorphic_eager(int n, int max_n = 7) {
    if (n < 1) throw std::invalid_argument("enumeration: need n >= 1");
    if (n > max_n)
        throw capability_error(
            "built-in enumeration supports n <= " + std::to_string(max_n) +
            "; ingest a graph6 corpus file for larger n");
    const int E = n * (n - 1) / 2;

    // Per-permutation bit relocation tables.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::uint8_t>> maps;
    do {
        std::vector<std::uint8_t> map(E);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                int pi = perm[i], pj = perm[j];
                if (pi > pj) std::swap(pi, pj);
                map[E - 1 - detail::edge_pos(i, j)] =
                    static_cast<std::uint8_t>(E - 1 - detail::edge_pos(pi, pj));
            }
        maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<bool> visited(std::uint64_t(1) << E, false);
    std::vector<simple_graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << E); ++mask) {
        if (visited[mask]) continue;
        out.push_back(detail::mask_to_graph(mask, n));
        for (const auto& map : maps) {
            std::uint64_t image = 0, m = mask;
            while (m) {
                const int b = std::countr_zero(m);
                m &= m - 1;
                image |= std::uint64_t(1) << map[b];
            }
            visited[image] = true;
        }
    }
    return out;
}

/// Lexicographically minimal adjacency bit-string over all vertex
/// permutations, returned as the graph6 encoding of the relabeled graph.
/// Independent of the enumeration scan; used to cross-check it. Exact
/// branch-and-bound: slots are filled in label order, and because the
/// upper triangle is serialized column-major, each newly placed vertex
/// extends the bit-string by one contiguous block, enabling prefix pruning.
/// Candidates are tried low-degree-first, which makes the first completed
/// branch a strong bound.
inline std::string canonical_graph6(const simple_graph& g) {
    const int n = g.n();
    std::vector<std::uint8_t> best;      // best complete bit-string so far
    std::vector<std::uint8_t> cur;       // growing prefix
    std::vector<int> assign(n, -1);      // slot -> original vertex
    std::vector<bool> used(n, false);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) < g.degree(b); });

    auto search = [&](auto&& self, int slot) -> void {
        if (slot == n) {
            if (best.empty() || cur < best) best = cur;
            return;
        }
        for (int u : order) {
            if (used[u]) continue;
            const std::size_t mark = cur.size();
            for (int i = 0; i < slot; ++i)
                cur.push_back(g.has_edge(assign[i], u) ? 1 : 0);
            // prefix pruning against the incumbent: compare the whole prefix,
            // not just the new block — an earlier strictly-smaller position
            // keeps the branch alive no matter what this block looks like
            bool viable = true;
            if (!best.empty()) {
                const auto ms = std::mismatch(cur.begin(), cur.end(), best.begin());
                viable = ms.first == cur.end() || *ms.first < *ms.second;
            }
            if (viable) {
                assign[slot] = u;
                used[u] = true;
                self(self, slot + 1);
                used[u] = false;
            }
            cur.resize(mark);
        }
    };
    search(search, 0);

    simple_graph canon(n);
    int pos = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++pos)
            if (best[pos]) canon.add_edge(i, j);
    return write_graph6(canon);
}

/// Single-consumer stream of graphs, either from the built-in enumerator or
/// from a graph6 file. Yields in a deterministic order.
class graph_stream {
public:
    static graph_stream builtin(int n) {
        graph_stream s;
        s.graphs_ = enumerate_nonisomorphic_eager(n);
        return s;
    }

    static graph_stream from_file(const std::string& path) {
        graph_stream s;
        s.file_ = std::make_unique<std::ifstream>(path);
        if (!*s.file_) throw std::runtime_error("cannot open graph6 file: " + path);
        s.path_ = path;
        return s;
    }

    std::optional<simple_graph> next() {
        if (file_) {
            std::string line;
            while (std::getline(*file_, line)) {
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (first_line_) {
                    first_line_ = false;
                    const std::string header = ">>graph6<<";
                    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
                }
                if (line.empty()) continue;
                return parse_graph6(line);
            }
            return std::nullopt;
        }
        if (cursor_ < graphs_.size()) return graphs_[cursor_++];
        return std::nullopt;
    }

    /// Drains the stream.
    std::vector<simple_graph> collect() {
        std::vector<simple_graph> all;
        while (auto g = next()) all.push_back(std::move(*g));
        return all;
    }

private:
    std::vector<simple_graph> graphs_;
    std::size_t cursor_ = 0;
    std::unique_ptr<std::ifstream> file_;
    std::string path_;
    bool first_line_ = true;
};

inline graph_stream enumerate_nonisomorphic(int n) { return graph_stream::builtin(n); }

}  // namespace mlap

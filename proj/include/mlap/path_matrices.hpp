#pragma once

#include "mlap/graph.hpp"
#include "mlap/matrix.hpp"

#include <cstdint>
#include <stdexcept>

namespace mlap {

/// P_{G,k}: entry (i,j) counts the simple paths with exactly k edges whose
/// endpoints are i and j (all vertices distinct, so the diagonal is zero).
/// Depth-first enumeration with a visited bitmask; intended for k <= 5 at
/// census sizes, where it is cheap. k = 1 returns the adjacency matrix.
inline matrix<Integer> open_path_matrix(const simple_graph& g, int k) {
    const int n = g.n();
    if (k < 1 || k >= n) throw std::invalid_argument("open_path_matrix: need 1 <= k <= n-1");
    matrix<Integer> p(n, n);
    // counts paths from a fixed source by extending the frontier one edge at
    // a time; each complete path is seen once per direction, and we only
    // record the (source, endpoint) cell, so no double counting.
    struct dfs {
        const simple_graph& g;
        matrix<Integer>& p;
        int n, k, src;
        void run(int cur, int depth, std::uint64_t visited) {
            if (depth == k) {
                p(src, cur) += 1;
                return;
            }
            for (int nxt = 0; nxt < n; ++nxt)
                if (g.has_edge(cur, nxt) && !((visited >> nxt) & 1u))
                    run(nxt, depth + 1, visited | (std::uint64_t(1) << nxt));
        }
    };
    for (int s = 0; s < n; ++s) {
        dfs d{g, p, n, k, s};
        d.run(s, 0, std::uint64_t(1) << s);
    }
    for (int i = 0; i < n; ++i) p(i, i) = 0;  // closed walks never qualify
    return p;
}

/// Algebraic shortcut for k = 2: the (i,j) entry of A^2 counts common
/// neighbours, which for i != j is exactly the number of 2-edge simple
/// paths; the diagonal of A^2 is the degree, so P_{G,2} = A^2 - D.
inline matrix<Integer> open_path_matrix_2(const simple_graph& g) {
    auto a = g.adjacency_matrix();
    auto p = a * a;
    for (int i = 0; i < g.n(); ++i) p(i, i) = 0;
    return p;
}

/// Adjacency matrix of the jump-k circulant relation on n vertices:
/// (i,j) = 1 iff j == i +- k (mod n). Note A_k = A_{n-k}.
inline matrix<Integer> circulant_jump_matrix(int n, int k) {
    if (k < 1 || k >= n) throw std::invalid_argument("circulant_jump_matrix: need 1 <= k <= n-1");
    matrix<Integer> a(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, (i + k) % n) = 1;
        a((i + k) % n, i) = 1;
    }
    return a;
}

}  // namespace mlap

#pragma once

#include "mlap/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <vector>

namespace mlap {

/// Undirected simple graph on labeled vertices 0..n-1.
/// The adjacency relation is kept symmetric with an empty diagonal by
/// construction; attempts to create loops are rejected.
class simple_graph {
public:
    explicit simple_graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 1) throw std::invalid_argument("simple_graph: need n >= 1");
    }

    int n() const { return n_; }

    bool has_edge(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        return adj_[static_cast<std::size_t>(i) * n_ + j] != 0;
    }

    void add_edge(int i, int j) {
        check_vertex(i);
        check_vertex(j);
        if (i == j) throw std::invalid_argument("simple_graph: loops are not allowed");
        adj_[static_cast<std::size_t>(i) * n_ + j] = 1;
        adj_[static_cast<std::size_t>(j) * n_ + i] = 1;
    }

    void remove_edge(int i, int j) {
        check_vertex(i);
        check_vertex(j);
        adj_[static_cast<std::size_t>(i) * n_ + j] = 0;
        adj_[static_cast<std::size_t>(j) * n_ + i] = 0;
    }

    int degree(int i) const {
        check_vertex(i);
        int d = 0;
        for (int j = 0; j < n_; ++j) d += adj_[static_cast<std::size_t>(i) * n_ + j];
        return d;
    }

    int edge_count() const {
        int e = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) e += has_edge(i, j);
        return e;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (has_edge(i, j)) e.emplace_back(i, j);
        return e;
    }

    matrix<Integer> adjacency_matrix() const {
        matrix<Integer> a(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) a(i, j) = has_edge(i, j) ? 1 : 0;
        return a;
    }

    bool operator==(const simple_graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const simple_graph& o) const { return !(*this == o); }

    /// Relabel through a permutation: vertex v of the result is perm[v] of *this.
    simple_graph permuted(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != n_)
            throw std::invalid_argument("permuted: wrong permutation length");
        simple_graph g(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (has_edge(perm[i], perm[j])) g.add_edge(i, j);
        return g;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
    }

    int n_;
    std::vector<std::uint8_t> adj_;
};

// ---- standard constructions ----------------------------------------------

inline simple_graph empty_graph(int n) { return simple_graph(n); }

inline simple_graph complete(int n) {
    simple_graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline simple_graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    simple_graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline simple_graph path_graph(int n) {
    simple_graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

/// Star on n vertices (center 0 joined to n-1 leaves), i.e. K_{1,n-1}.
inline simple_graph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star_graph: need n >= 2");
    simple_graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

inline simple_graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: need a,b >= 1");
    simple_graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

/// Circulant graph: vertex i adjacent to i +- s (mod n) for each jump s.
/// Jumps must satisfy 1 <= s_1 < ... < s_k <= n/2. Degree is 2k, or 2k-1
/// exactly when n is even and s_k = n/2 (the antipodal jump pairs vertices).
inline simple_graph circulant(int n, const std::vector<int>& jumps) {
    if (n < 3) throw std::invalid_argument("circulant: need n >= 3");
    std::set<int> seen;
    for (int s : jumps) {
        if (s < 1 || 2 * s > n)
            throw std::invalid_argument("circulant: jump out of range 1..n/2");
        if (!seen.insert(s).second) throw std::invalid_argument("circulant: repeated jump");
    }
    simple_graph g(n);
    for (int i = 0; i < n; ++i)
        for (int s : jumps) g.add_edge(i, (i + s) % n);
    return g;
}

inline simple_graph circulant(int n, std::initializer_list<int> jumps) {
    return circulant(n, std::vector<int>(jumps));
}

// ---- graph operators -------------------------------------------------------

inline simple_graph disjoint_union(const simple_graph& g, const simple_graph& h) {
    simple_graph u(g.n() + h.n());
    for (auto [i, j] : g.edges()) u.add_edge(i, j);
    for (auto [i, j] : h.edges()) u.add_edge(g.n() + i, g.n() + j);
    return u;
}

/// Cartesian product: (v,w) ~ (v',w') iff (v=v' and w~w') or (w=w' and v~v').
/// Vertex (v,w) is index v*h.n() + w.
inline simple_graph cartesian_product(const simple_graph& g, const simple_graph& h) {
    simple_graph p(g.n() * h.n());
    for (int v = 0; v < g.n(); ++v)
        for (auto [w, w2] : h.edges()) p.add_edge(v * h.n() + w, v * h.n() + w2);
    for (int w = 0; w < h.n(); ++w)
        for (auto [v, v2] : g.edges()) p.add_edge(v * h.n() + w, v2 * h.n() + w);
    return p;
}

/// Tensor (categorical) product: (v,w) ~ (v',w') iff v~v' and w~w'.
inline simple_graph tensor_product(const simple_graph& g, const simple_graph& h) {
    simple_graph p(g.n() * h.n());
    for (auto [v, v2] : g.edges())
        for (auto [w, w2] : h.edges()) {
            p.add_edge(v * h.n() + w, v2 * h.n() + w2);
            p.add_edge(v * h.n() + w2, v2 * h.n() + w);
        }
    return p;
}

inline simple_graph complement(const simple_graph& g) {
    simple_graph c(g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (!g.has_edge(i, j)) c.add_edge(i, j);
    return c;
}

inline simple_graph delete_vertex(const simple_graph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("delete_vertex: index out of range");
    if (g.n() == 1) throw std::invalid_argument("delete_vertex: cannot empty the graph");
    simple_graph d(g.n() - 1);
    for (auto [i, j] : g.edges()) {
        if (i == v || j == v) continue;
        d.add_edge(i - (i > v), j - (j > v));
    }
    return d;
}

// ---- prism / Moebius ladder / antiprism ------------------------------------

/// Prism Y_k = K_2 x C_k (Cartesian), 2k vertices. For odd k this is the
/// circulant Circ_{2k}(2, k); for even k it is bipartite and not circulant.
inline simple_graph prism(int k) {
    if (k < 3) throw std::invalid_argument("prism: need k >= 3");
    return cartesian_product(complete(2), cycle(k));
}

/// Moebius ladder M_k = Circ_{2k}(1, k).
inline simple_graph moebius_ladder(int k) {
    if (k < 2) throw std::invalid_argument("moebius_ladder: need k >= 2");
    return circulant(2 * k, {1, k});
}

/// Antiprism on 2k vertices = Circ_{2k}(1, 2).
inline simple_graph antiprism(int k) {
    if (k < 3) throw std::invalid_argument("antiprism: need k >= 3");
    return circulant(2 * k, {1, 2});
}

}  // namespace mlap

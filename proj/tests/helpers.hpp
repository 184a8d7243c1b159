#pragma once

// Shared fixtures for the test suite: seeded random graphs and the two
// 6-vertex demonstration graphs used across the Laplacian/charpoly/census
// tests (the smallest pair distinguished by the 2-Laplacian but not by the
// classic matrices studied alongside it).

#include "mlap/mlap.hpp"

#include <random>
#include <vector>

namespace test_util {

inline mlap::simple_graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
    mlap::simple_graph g(n);
    std::bernoulli_distribution edge(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) g.add_edge(i, j);
    return g;
}

inline mlap::simple_graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    mlap::simple_graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

/// First graph of the 6-vertex demonstration pair.
inline mlap::simple_graph demo_g() {
    return from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 2}, {3, 4}, {4, 5}});
}

/// Second graph of the pair: same order and size, cospectral for neither
/// the Laplacian nor the 2-Laplacian.
inline mlap::simple_graph demo_h() {
    return from_edges(6, {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {1, 4}, {3, 4}, {4, 5}});
}

/// 12 x (2-Laplacian) of demo_g, entry by entry.
inline mlap::matrix<mlap::Integer> demo_g_twelve_l2() {
    const long long vals[6][6] = {
        {60, -15, -15, -16, 2, -16},  {-15, 28, -15, 1, 0, 1}, {-15, -15, 28, 1, 0, 1},
        {-16, 1, 1, 28, -16, 2},      {2, 0, 0, -16, 30, -16}, {-16, 1, 1, 2, -16, 28},
    };
    mlap::matrix<mlap::Integer> m(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m(i, j) = vals[i][j];
    return m;
}

/// 12 x (2-Laplacian) of demo_h.
inline mlap::matrix<mlap::Integer> demo_h_twelve_l2() {
    const long long vals[6][6] = {
        {44, -16, 1, -16, 3, -16}, {-16, 44, -16, 2, -16, 2}, {1, -16, 14, 0, 1, 0},
        {-16, 2, 0, 28, -16, 2},   {3, -16, 1, -16, 44, -16}, {-16, 2, 0, 2, -16, 28},
    };
    mlap::matrix<mlap::Integer> m(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m(i, j) = vals[i][j];
    return m;
}

/// K_{1,3} + K_3 and C_6 + K_1: the smallest pair cospectral for both the
/// Laplacian and the 2-Laplacian (order-3 fingerprints split them).
inline mlap::simple_graph star_triangle() {
    return from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}, {5, 6}});
}

inline mlap::simple_graph hexagon_plus_isolated() {
    return from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

inline mlap::simple_graph petersen() {
    mlap::simple_graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

/// Monic rational coefficients of a key, descending powers.
inline std::vector<mlap::Rational> monic_coeffs(const mlap::spectral_key& key) {
    std::vector<mlap::Rational> c(key.coeffs.size());
    mlap::Integer sk = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = mlap::Rational(key.coeffs[i], sk);
        sk *= key.scale;
    }
    return c;
}

inline std::vector<mlap::Rational> poly_product(const std::vector<mlap::Rational>& a,
                                                const std::vector<mlap::Rational>& b) {
    std::vector<mlap::Rational> p(a.size() + b.size() - 1, mlap::Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    return p;
}

}  // namespace test_util

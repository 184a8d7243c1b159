#pragma once

#include "mlap/fd_coeffs.hpp"
#include "mlap/graph.hpp"
#include "mlap/matrix.hpp"
#include "mlap/path_matrices.hpp"

#include <stdexcept>
#include <string>

namespace mlap {

/// Path enumeration cost grows quickly with the order; the census needs no
/// more than order 3, so the path-based builders refuse anything past this.
constexpr int max_laplacian_order = 5;

/// Symmetric rational edge weights, zero diagonal. Weights may be negative
/// (signed graphs arise both from the a_{k,m} weighting and from synthesis).
struct weighted_graph {
    explicit weighted_graph(int n) : w(n, n) {
        if (n < 1) throw std::invalid_argument("weighted_graph: need n >= 1");
    }

    int n() const { return static_cast<int>(w.rows()); }

    void set_weight(int i, int j, const Rational& value) {
        if (i == j) throw std::invalid_argument("weighted_graph: diagonal must stay zero");
        w(i, j) = value;
        w(j, i) = value;
    }

    matrix<Rational> w;
};

/// G_m: the weighted graph whose adjacency is sum_k a_{k,m} P_{G,k}.
inline weighted_graph m_adjacency(const simple_graph& g, int m) {
    if (m < 1 || m >= g.n()) throw std::invalid_argument("m_adjacency: need 1 <= m < n");
    if (m > max_laplacian_order)
        throw std::invalid_argument("m_adjacency: order capped at " +
                                    std::to_string(max_laplacian_order));
    weighted_graph gm(g.n());
    for (int k = 1; k <= m; ++k) {
        const Rational a = coeff(k, m);
        const auto p = open_path_matrix(g, k);
        for (int i = 0; i < g.n(); ++i)
            for (int j = 0; j < g.n(); ++j) gm.w(i, j) += a * Rational(p(i, j));
    }
    return gm;
}

/// Weighted Laplacian D - W, with D the diagonal of weighted degrees.
inline matrix<Rational> weighted_laplacian(const weighted_graph& wg) {
    const int n = wg.n();
    matrix<Rational> l(n, n);
    for (int i = 0; i < n; ++i) {
        const Rational d = wg.w.row_sum(i);
        for (int j = 0; j < n; ++j) l(i, j) = -wg.w(i, j);
        l(i, i) += d;
    }
    return l;
}

/// L^(m) of a simple graph: the weighted Laplacian of G_m. Order 1 is the
/// ordinary Laplacian D - A.
inline matrix<Rational> m_laplacian(const simple_graph& g, int m) {
    return weighted_laplacian(m_adjacency(g, m));
}

/// Order-2 case assembled without path enumeration:
/// L^(2) = D' - (1/12)(16 A - A^2 + D), D' the weighted degree diagonal.
inline matrix<Rational> two_laplacian_direct(const simple_graph& g) {
    const int n = g.n();
    if (n < 3) throw std::invalid_argument("two_laplacian_direct: need n >= 3");
    const auto a = g.adjacency_matrix();
    auto a2 = a * a;
    matrix<Rational> w(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;  // A^2's diagonal is D; the weight matrix drops it
            w(i, j) = Rational(16 * a(i, j) - a2(i, j), 12);
        }
    matrix<Rational> l(n, n);
    for (int i = 0; i < n; ++i) {
        l(i, i) = w.row_sum(i);
        for (int j = 0; j < n; ++j) l(i, j) -= w(i, j);
    }
    return l;
}

enum class classic_kind { adjacency, laplacian, signless_laplacian };

inline matrix<Integer> classic_matrix(const simple_graph& g, classic_kind kind) {
    const int n = g.n();
    auto a = g.adjacency_matrix();
    if (kind == classic_kind::adjacency) return a;
    matrix<Integer> m(n, n);
    const int sign = (kind == classic_kind::laplacian) ? -1 : 1;
    for (int i = 0; i < n; ++i) {
        m(i, i) = g.degree(i);
        for (int j = 0; j < n; ++j) m(i, j) += sign * a(i, j);
    }
    return m;
}

struct scaled_matrix {
    matrix<Integer> m;
    Integer scale;  // positive; m = scale * original, entrywise
};

/// Clears denominators: scale = lcm of all entry denominators.
inline scaled_matrix integer_scaled(const matrix<Rational>& a) {
    Integer scale = 1;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            scale = lcm(scale, denominator(a(i, j)));
    matrix<Integer> m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = numerator(a(i, j)) * (scale / denominator(a(i, j)));
    return {std::move(m), scale};
}

/// L^(2) of a Cartesian product from the factors:
///   L^(2)_{G x H} = L^(2)_G (x) I + I (x) L^(2)_H - (1/6) L_{G tensor H}.
/// Returns the right-hand side; equals m_laplacian(cartesian_product(g,h), 2).
inline matrix<Rational> two_laplacian_cartesian_identity(const simple_graph& g,
                                                         const simple_graph& h) {
    if (g.n() < 3 || h.n() < 3)
        throw std::invalid_argument("cartesian identity: both factors need n >= 3");
    const auto lg = kronecker(m_laplacian(g, 2), matrix<Rational>::identity(h.n()));
    const auto lh = kronecker(matrix<Rational>::identity(g.n()), m_laplacian(h, 2));
    const auto lt = to_rational(classic_matrix(tensor_product(g, h), classic_kind::laplacian));
    return lg + lh - Rational(1, 6) * lt;
}

/// L^(2) of the complement from the graph itself:
///   L^(2)_comp = L^(2) - (17/6) L + ((18-n)/12) L_{K_n} + (1/12) T,
/// where T compensates the degree cross-term: pushing J*A + A*J through the
/// Laplacian construction leaves T = n*D + (sum_i d_i)*I - M with
/// M_{ij} = d_i + d_j. Returns the right-hand side; equals
/// m_laplacian(complement(g), 2).
inline matrix<Rational> two_laplacian_complement_identity(const simple_graph& g) {
    const int n = g.n();
    if (n < 3) throw std::invalid_argument("complement identity: need n >= 3");
    Integer degree_total = 0;
    for (int i = 0; i < n; ++i) degree_total += g.degree(i);

    matrix<Rational> t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t(i, j) = -Rational(g.degree(i) + g.degree(j));
            if (i == j) t(i, j) += Rational(Integer(n) * g.degree(i) + degree_total);
        }

    const auto l2 = m_laplacian(g, 2);
    const auto l = to_rational(classic_matrix(g, classic_kind::laplacian));
    const auto lk = to_rational(classic_matrix(complete(n), classic_kind::laplacian));
    return l2 - Rational(17, 6) * l + Rational(18 - n, 12) * lk + Rational(1, 12) * t;
}

}  // namespace mlap
